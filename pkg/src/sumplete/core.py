"""Sumplete instances, masks, the solution verifier, and serialization.

A Sumplete puzzle is a rectangular grid of positive integers with one
target sum ("hint") per row and per column. A candidate solution is a
mask deciding, per cell, whether the number is kept (uncrossed) or
crossed out; the mask solves the puzzle when the kept values in every
row and column sum exactly to that line's hint.

Indexing in error messages is 1-based (row 1 is the top row); internal
storage is 0-based row-major.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Optional

MAX_CELLS = 10_000
MAX_VALUE = 1_000_000


class SumpleteError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SumpleteError):
    """Malformed input text. Carries a locator when one is known."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        loc = ""
        if line is not None:
            loc = f" (line {line})"
        elif field is not None:
            loc = f" (field {field!r})"
        super().__init__(message + loc)
        self.line = line
        self.field = field


class InvariantError(SumpleteError):
    """Syntactically valid data that violates an instance invariant."""


class DimensionMismatch(SumpleteError):
    """Mask and instance dimensions disagree."""


# Test hook: when set, called once per cell visited by the sum routines.
# Used to assert the verifier touches O(rows*cols) cells.
cell_visit_hook: Optional[Callable[[], None]] = None


def _as_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvariantError(f"{what} must be an integer, got {x!r}")
    return x


@dataclass(frozen=True)
class SumpleteInstance:
    """An immutable puzzle: grid values plus row and column hints."""

    rows: int
    cols: int
    grid: tuple  # rows x cols tuple of tuples of int
    row_hints: tuple
    col_hints: tuple

    def __post_init__(self):
        r = _as_int(self.rows, "rows")
        c = _as_int(self.cols, "cols")
        if r < 1 or c < 1:
            raise InvariantError(f"dimensions must be positive, got {r}x{c}")
        if r * c > MAX_CELLS:
            raise InvariantError(f"grid has {r * c} cells, limit is {MAX_CELLS}")
        grid = tuple(tuple(row) for row in self.grid)
        if len(grid) != r:
            raise InvariantError(f"grid has {len(grid)} rows, expected {r}")
        for i, row in enumerate(grid):
            if len(row) != c:
                raise InvariantError(f"row {i + 1} has {len(row)} cells, expected {c}")
            for j, v in enumerate(row):
                _as_int(v, f"cell ({i + 1},{j + 1})")
                if not 1 <= v <= MAX_VALUE:
                    raise InvariantError(
                        f"cell ({i + 1},{j + 1}) is {v}, must be in 1..{MAX_VALUE}"
                    )
        row_hints = tuple(self.row_hints)
        col_hints = tuple(self.col_hints)
        if len(row_hints) != r:
            raise InvariantError(f"{len(row_hints)} row hints, expected {r}")
        if len(col_hints) != c:
            raise InvariantError(f"{len(col_hints)} column hints, expected {c}")
        for k, h in enumerate(row_hints):
            if _as_int(h, f"row hint {k + 1}") < 0:
                raise InvariantError(f"row hint {k + 1} is negative")
        for k, h in enumerate(col_hints):
            if _as_int(h, f"column hint {k + 1}") < 0:
                raise InvariantError(f"column hint {k + 1} is negative")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "row_hints", row_hints)
        object.__setattr__(self, "col_hints", col_hints)


@dataclass(frozen=True)
class Mask:
    """Per-cell keep/cross decisions. True means kept (uncrossed)."""

    rows: int
    cols: int
    keep: tuple  # rows x cols tuple of tuples of bool

    def __post_init__(self):
        r = _as_int(self.rows, "rows")
        c = _as_int(self.cols, "cols")
        if r < 1 or c < 1:
            raise InvariantError(f"dimensions must be positive, got {r}x{c}")
        keep = tuple(tuple(bool(x) for x in row) for row in self.keep)
        if len(keep) != r or any(len(row) != c for row in keep):
            raise InvariantError("keep array does not match declared dimensions")
        object.__setattr__(self, "keep", keep)


def _check_dims(inst: SumpleteInstance, m: Mask) -> None:
    if (inst.rows, inst.cols) != (m.rows, m.cols):
        raise DimensionMismatch(
            f"instance is {inst.rows}x{inst.cols}, mask is {m.rows}x{m.cols}"
        )


def row_sums(inst: SumpleteInstance, m: Mask) -> list[int]:
    """Sum of kept values in each row."""
    _check_dims(inst, m)
    hook = cell_visit_hook
    out = []
    for grow, krow in zip(inst.grid, m.keep):
        s = 0
        for v, k in zip(grow, krow):
            if hook is not None:
                hook()
            if k:
                s += v
        out.append(s)
    return out


def col_sums(inst: SumpleteInstance, m: Mask) -> list[int]:
    """Sum of kept values in each column."""
    _check_dims(inst, m)
    hook = cell_visit_hook
    out = [0] * inst.cols
    for grow, krow in zip(inst.grid, m.keep):
        for j, (v, k) in enumerate(zip(grow, krow)):
            if hook is not None:
                hook()
            if k:
                out[j] += v
    return out


def verify(inst: SumpleteInstance, m: Mask) -> bool:
    """True iff every row and column of kept values meets its hint.

    Raises DimensionMismatch rather than returning False when the mask
    does not fit the instance.
    """
    return row_sums(inst, m) == list(inst.row_hints) and col_sums(inst, m) == list(
        inst.col_hints
    )


def is_two_valued(inst: SumpleteInstance, lo: int, hi: int) -> bool:
    """True iff every grid value is lo or hi. lo must be below hi."""
    if not lo < hi:
        raise ValueError(f"lo must be less than hi, got {lo} >= {hi}")
    return all(v == lo or v == hi for row in inst.grid for v in row)


FORMATS = ("json", "grid-text")


def _norm_format(fmt: str) -> str:
    if fmt == "text":
        fmt = "grid-text"
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    return fmt


def serialize_instance(inst: SumpleteInstance, fmt: str = "json") -> bytes:
    """Canonical serialization; byte-identical for equal instances."""
    fmt = _norm_format(fmt)
    if fmt == "json":
        doc = {
            "rows": inst.rows,
            "cols": inst.cols,
            "grid": [list(row) for row in inst.grid],
            "row_hints": list(inst.row_hints),
            "col_hints": list(inst.col_hints),
        }
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode()
    lines = [f"{inst.rows} {inst.cols}"]
    lines += [" ".join(str(v) for v in row) for row in inst.grid]
    lines.append(" ".join(str(h) for h in inst.row_hints))
    lines.append(" ".join(str(h) for h in inst.col_hints))
    return ("\n".join(lines) + "\n").encode()


def _decode(text) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode()
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not valid UTF-8: {e}") from e
    return text


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-empty, non-comment lines paired with their 1-based line numbers."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def _int_fields(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as e:
        raise ParseError(f"expected integers: {e}", line=lineno) from e


def parse_instance(text, fmt: str = "json") -> SumpleteInstance:
    """Parse an instance; inverse of serialize_instance on valid data."""
    fmt = _norm_format(fmt)
    if fmt == "json":
        return _instance_from_json(text)
    lines = _content_lines(_decode(text))
    if not lines:
        raise ParseError("empty input")
    lineno, header = lines[0]
    dims = _int_fields(header, lineno)
    if len(dims) != 2:
        raise ParseError("header must be 'rows cols'", line=lineno)
    r, c = dims
    if len(lines) != 1 + r + 2:
        raise ParseError(
            f"expected {1 + r + 2} content lines for a {r}x{c} instance, got {len(lines)}"
        )
    grid = []
    for lineno, line in lines[1 : 1 + r]:
        row = _int_fields(line, lineno)
        if len(row) != c:
            raise ParseError(f"expected {c} cell values, got {len(row)}", line=lineno)
        grid.append(row)
    lineno, line = lines[1 + r]
    rhints = _int_fields(line, lineno)
    if len(rhints) != r:
        raise ParseError(f"expected {r} row hints, got {len(rhints)}", line=lineno)
    lineno, line = lines[2 + r]
    chints = _int_fields(line, lineno)
    if len(chints) != c:
        raise ParseError(f"expected {c} column hints, got {len(chints)}", line=lineno)
    return SumpleteInstance(r, c, grid, rhints, chints)


def _instance_from_json(text) -> SumpleteInstance:
    try:
        doc = json.loads(_decode(text))
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno) from e
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    for key in ("rows", "cols", "grid", "row_hints", "col_hints"):
        if key not in doc:
            raise ParseError("missing key", field=key)
    return SumpleteInstance(
        doc["rows"], doc["cols"], doc["grid"], doc["row_hints"], doc["col_hints"]
    )


def serialize_mask(m: Mask, fmt: str = "json") -> bytes:
    """Canonical mask serialization. The field is named 'keep' (true =
    uncrossed) to avoid cross-out polarity confusion."""
    fmt = _norm_format(fmt)
    if fmt == "json":
        doc = {"rows": m.rows, "cols": m.cols, "keep": [list(row) for row in m.keep]}
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode()
    lines = [f"{m.rows} {m.cols}"]
    lines += [" ".join("1" if k else "0" for k in row) for row in m.keep]
    return ("\n".join(lines) + "\n").encode()


def parse_mask(text, fmt: str = "json") -> Mask:
    fmt = _norm_format(fmt)
    if fmt == "json":
        try:
            doc = json.loads(_decode(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno) from e
        if not isinstance(doc, dict):
            raise ParseError("top-level JSON value must be an object")
        for key in ("rows", "cols", "keep"):
            if key not in doc:
                raise ParseError("missing key", field=key)
        keep = doc["keep"]
        if not isinstance(keep, list) or not all(
            isinstance(row, list) and all(isinstance(x, bool) for x in row) for row in keep
        ):
            raise ParseError("keep must be a list of lists of booleans", field="keep")
        return Mask(doc["rows"], doc["cols"], keep)
    lines = _content_lines(_decode(text))
    if not lines:
        raise ParseError("empty input")
    lineno, header = lines[0]
    dims = _int_fields(header, lineno)
    if len(dims) != 2:
        raise ParseError("header must be 'rows cols'", line=lineno)
    r, c = dims
    if len(lines) != 1 + r:
        raise ParseError(f"expected {1 + r} content lines, got {len(lines)}")
    keep = []
    for lineno, line in lines[1:]:
        bits = _int_fields(line, lineno)
        if len(bits) != c or any(b not in (0, 1) for b in bits):
            raise ParseError(f"expected {c} values from {{0,1}}", line=lineno)
        keep.append([b == 1 for b in bits])
    return Mask(r, c, keep)
