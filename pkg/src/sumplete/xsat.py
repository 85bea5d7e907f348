"""Exact satisfiability over positive 3-literal clauses.

A formula here is a list of clauses, each a set of exactly three
distinct variable indices (positive literals only). An assignment
satisfies the formula when every clause contains exactly one true
variable. The "regular" shape additionally requires as many clauses as
variables and every variable occurring in exactly three clauses.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .core import InvariantError, ParseError, _content_lines, _decode, _int_fields

BRUTE_FORCE_VAR_LIMIT = 24

Assignment = tuple  # length-n tuple of bool, index j-1 holds x_j


@dataclass(frozen=True)
class XsatInstance:
    n_vars: int
    clauses: tuple  # of frozenset[int], each of size 3

    def __post_init__(self):
        n = self.n_vars
        if not isinstance(n, int) or n < 1:
            raise InvariantError(f"n_vars must be a positive integer, got {n!r}")
        clauses = []
        for k, cl in enumerate(self.clauses):
            members = frozenset(cl)
            if len(members) != 3 or len(tuple(cl)) != 3:
                raise InvariantError(
                    f"clause {k + 1} must have exactly 3 distinct variables, got {tuple(cl)}"
                )
            for v in members:
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise InvariantError(
                        f"clause {k + 1} references variable {v!r}, valid range is 1..{n}"
                    )
            clauses.append(members)
        object.__setattr__(self, "clauses", tuple(clauses))

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)


def is_regular(phi: XsatInstance) -> bool:
    """True iff #clauses == #variables and every variable occurs in
    exactly three clauses."""
    if phi.n_clauses != phi.n_vars:
        return False
    counts = Counter(v for cl in phi.clauses for v in cl)
    return all(counts[v] == 3 for v in range(1, phi.n_vars + 1))


def verify_assignment(phi: XsatInstance, a) -> bool:
    """True iff every clause has exactly one true variable."""
    if len(a) != phi.n_vars:
        raise InvariantError(
            f"assignment has {len(a)} values, formula has {phi.n_vars} variables"
        )
    return all(sum(1 for v in cl if a[v - 1]) == 1 for cl in phi.clauses)


def brute_force_xsat(phi: XsatInstance) -> tuple[bool, Optional[Assignment], int]:
    """Decide by enumerating all 2^n assignments (x_1 least significant,
    increasing binary order). Returns (satisfiable, first witness, count)."""
    n = phi.n_vars
    if n > BRUTE_FORCE_VAR_LIMIT:
        raise InvariantError(f"{n} variables exceeds the oracle limit {BRUTE_FORCE_VAR_LIMIT}")
    clause_bits = [sum(1 << (v - 1) for v in cl) for cl in phi.clauses]
    count = 0
    first: Optional[Assignment] = None
    for bits in range(1 << n):
        if all((bits & m).bit_count() == 1 for m in clause_bits):
            count += 1
            if first is None:
                first = tuple(bool((bits >> j) & 1) for j in range(n))
    return count > 0, first, count


FORMATS = ("json", "xsat-text")


def _norm_format(fmt: str) -> str:
    if fmt == "text":
        fmt = "xsat-text"
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    return fmt


def serialize_xsat(phi: XsatInstance, fmt: str = "json") -> bytes:
    """Canonical serialization: clause order preserved, members ascending."""
    fmt = _norm_format(fmt)
    clauses = [sorted(cl) for cl in phi.clauses]
    if fmt == "json":
        doc = {"n_vars": phi.n_vars, "clauses": clauses}
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode()
    lines = [f"p xsat {phi.n_vars} {phi.n_clauses}"]
    lines += [" ".join(str(v) for v in cl) for cl in clauses]
    return ("\n".join(lines) + "\n").encode()


def parse_xsat(text, fmt: str = "json") -> XsatInstance:
    fmt = _norm_format(fmt)
    if fmt == "json":
        try:
            doc = json.loads(_decode(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno) from e
        if not isinstance(doc, dict):
            raise ParseError("top-level JSON value must be an object")
        for key in ("n_vars", "clauses"):
            if key not in doc:
                raise ParseError("missing key", field=key)
        return XsatInstance(doc["n_vars"], doc["clauses"])
    lines = _content_lines(_decode(text))
    if not lines:
        raise ParseError("empty input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "xsat":
        raise ParseError("header must be 'p xsat <n_vars> <n_clauses>'", line=lineno)
    try:
        n, m = int(parts[2]), int(parts[3])
    except ValueError as e:
        raise ParseError(f"bad header counts: {e}", line=lineno) from e
    if len(lines) != 1 + m:
        raise ParseError(f"expected {m} clause lines, got {len(lines) - 1}")
    clauses = []
    for lineno, line in lines[1:]:
        vs = _int_fields(line, lineno)
        if len(vs) != 3 or len(set(vs)) != 3:
            raise ParseError("clause must list 3 distinct variables", line=lineno)
        clauses.append(vs)
    return XsatInstance(n, clauses)


def serialize_assignment(a, fmt: str = "json") -> bytes:
    """Assignment as JSON {"values": [...]} or a text line of 0/1."""
    if fmt == "json":
        return (json.dumps({"values": list(a)}, separators=(",", ":")) + "\n").encode()
    return (" ".join("1" if x else "0" for x in a) + "\n").encode()


def parse_assignment(text, fmt: str = "json"):
    if fmt == "json":
        try:
            doc = json.loads(_decode(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno) from e
        if not isinstance(doc, dict) or "values" not in doc:
            raise ParseError("missing key", field="values")
        values = doc["values"]
        if not all(isinstance(x, bool) for x in values):
            raise ParseError("values must be booleans", field="values")
        return tuple(values)
    lines = _content_lines(_decode(text))
    if len(lines) != 1:
        raise ParseError("expected a single line of 0/1 values")
    lineno, line = lines[0]
    toks = line.split()
    if any(t not in ("0", "1", "T", "F") for t in toks):
        raise ParseError("values must be 0/1 or T/F", line=lineno)
    return tuple(t in ("1", "T") for t in toks)
