"""Exact Sumplete search: pruned backtracking solver, solution counter,
and an independent brute-force oracle for differential testing.

The solver works row by row. Each row carries an equality constraint,
so the branching unit is a whole row candidate (a subset of the row's
cells whose kept values hit the row hint); columns are checked by
interval pruning as rows are placed.
"""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field
from typing import Optional

from .core import Mask, SumpleteError, SumpleteInstance, verify


class OracleCapacityError(SumpleteError):
    """Instance exceeds the brute-force oracle's enumeration budget."""


class Status(enum.Enum):
    SOLVED = "solved"
    UNSOLVABLE = "unsolvable"
    RESOURCE_LIMIT = "resource_limit"


@dataclass(frozen=True)
class SolverConfig:
    node_limit: Optional[int] = None
    solution_cap: Optional[int] = 1_000_000
    deterministic: bool = True
    # Test hook: disabling pruning must never change results, only stats.
    prune: bool = True
    # Optional strengthening: per-column subset-sum reachability of the
    # remaining rows (bitset DP). Off by default to keep the default
    # solver easy to audit against the oracle.
    column_reachability: bool = False

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be >= 1")
        if self.solution_cap is not None and self.solution_cap < 1:
            raise ValueError("solution_cap must be >= 1")


@dataclass
class SolveStats:
    nodes_expanded: int = 0
    row_subsets_enumerated: int = 0
    elapsed: float = 0.0


@dataclass
class SolveOutcome:
    status: Status
    witness: Optional[Mask] = None
    stats: SolveStats = field(default_factory=SolveStats)


def row_candidates(values, target: int) -> list[tuple[bool, ...]]:
    """All keep-patterns for one row whose kept values sum to target.

    Ordered lexicographically with cell 1 most significant and
    crossed (False) before kept (True).
    """
    values = list(values)
    c = len(values)
    suffix = [0] * (c + 1)
    for j in range(c - 1, -1, -1):
        suffix[j] = suffix[j + 1] + values[j]
    out: list[tuple[bool, ...]] = []
    prefix: list[bool] = []

    def extend(j: int, remaining: int) -> None:
        if remaining < 0 or remaining > suffix[j]:
            return
        if j == c:
            out.append(tuple(prefix))
            return
        prefix.append(False)
        extend(j + 1, remaining)
        prefix[-1] = True
        extend(j + 1, remaining - values[j])
        prefix.pop()

    extend(0, target)
    return out


def _search(
    inst: SumpleteInstance,
    cfg: SolverConfig,
    max_solutions: Optional[int],
    collect: Optional[list] = None,
):
    """Shared backtracking core for solve and count_solutions.

    Returns (solutions_found, first_witness, exhausted, stats).
    """
    start = time.perf_counter()
    stats = SolveStats()
    r, c = inst.rows, inst.cols
    chints = inst.col_hints

    cands: list[list[tuple[bool, ...]]] = []
    for i in range(r):
        ci = row_candidates(inst.grid[i], inst.row_hints[i])
        stats.row_subsets_enumerated += len(ci)
        cands.append(ci)

    # suffix[i][j]: total of column j over rows i..r-1 (upper bound on
    # what rows below can still contribute).
    suffix = [[0] * c for _ in range(r + 1)]
    for i in range(r - 1, -1, -1):
        for j in range(c):
            suffix[i][j] = suffix[i + 1][j] + inst.grid[i][j]

    reach = None
    if cfg.column_reachability:
        # reach[i][j]: bitset of sums attainable by keeping any subset
        # of column j's cells in rows i..r-1.
        reach = [[1] * c for _ in range(r + 1)]
        for i in range(r - 1, -1, -1):
            for j in range(c):
                below = reach[i + 1][j]
                reach[i][j] = below | (below << inst.grid[i][j])

    colsum = [0] * c
    chosen: list[tuple[bool, ...]] = []
    found = 0
    first: Optional[Mask] = None

    def admissible(i: int) -> bool:
        """Column feasibility after placing rows 0..i."""
        nxt = suffix[i + 1]
        for j in range(c):
            s = colsum[j]
            h = chints[j]
            if cfg.prune and (s > h or s + nxt[j] < h):
                return False
            if reach is not None and (s > h or not (reach[i + 1][j] >> (h - s)) & 1):
                return False
        return True

    def descend(i: int) -> bool:
        """Returns False when a limit or solution cap stopped the search."""
        nonlocal found, first
        if i == r:
            if all(colsum[j] == chints[j] for j in range(c)):
                found += 1
                if first is None:
                    first = Mask(r, c, chosen)
                if collect is not None:
                    collect.append(Mask(r, c, chosen))
                if max_solutions is not None and found >= max_solutions:
                    return False
            return True
        for cand in cands[i]:
            if cfg.node_limit is not None and stats.nodes_expanded >= cfg.node_limit:
                return False
            stats.nodes_expanded += 1
            for j, k in enumerate(cand):
                if k:
                    colsum[j] += inst.grid[i][j]
            chosen.append(cand)
            ok = admissible(i)
            if ok and not descend(i + 1):
                return False
            chosen.pop()
            for j, k in enumerate(cand):
                if k:
                    colsum[j] -= inst.grid[i][j]
        return True

    # exhausted iff the whole tree was walked without tripping a limit
    exhausted = descend(0)
    stats.elapsed = time.perf_counter() - start
    return found, first, exhausted, stats


def solve(inst: SumpleteInstance, cfg: SolverConfig = SolverConfig()) -> SolveOutcome:
    """Find one solution, report unsolvability, or hit a resource limit.

    With deterministic=True the witness is the lexicographically first
    solution under the canonical row-candidate order.
    """
    found, first, exhausted, stats = _search(inst, cfg, max_solutions=1)
    if found:
        assert first is not None and verify(inst, first)
        return SolveOutcome(Status.SOLVED, first, stats)
    if exhausted:
        return SolveOutcome(Status.UNSOLVABLE, None, stats)
    return SolveOutcome(Status.RESOURCE_LIMIT, None, stats)


def count_solutions(
    inst: SumpleteInstance, cfg: SolverConfig = SolverConfig()
) -> tuple[int, bool]:
    """Count distinct solving masks, capped at cfg.solution_cap.

    The second value is True iff the full search space was exhausted.
    """
    found, _first, exhausted, _stats = _search(inst, cfg, max_solutions=cfg.solution_cap)
    return found, exhausted


def enumerate_solutions(
    inst: SumpleteInstance, cfg: SolverConfig = SolverConfig()
) -> list[Mask]:
    """All solving masks in canonical order, up to cfg.solution_cap."""
    solutions: list[Mask] = []
    _search(inst, cfg, max_solutions=cfg.solution_cap, collect=solutions)
    return solutions


# --- Independent oracle -------------------------------------------------
#
# Deliberately shares no search code with solve/_search/row_candidates:
# enumeration is done with plain integer bit scans and itertools.

FLAT_CELL_LIMIT = 24
PRODUCT_LIMIT = 10**8


def _oracle_row_subsets(values, target: int) -> list[tuple[bool, ...]]:
    # itertools.product with (False, True) yields exactly the canonical
    # order: first cell most significant, crossed before kept.
    return [
        pattern
        for pattern in itertools.product((False, True), repeat=len(values))
        if sum(v for v, k in zip(values, pattern) if k) == target
    ]


def brute_force_flat(inst: SumpleteInstance) -> tuple[int, Optional[Mask]]:
    """Enumerate all 2^(rows*cols) masks. Requires rows*cols <= 24."""
    r, c = inst.rows, inst.cols
    n = r * c
    if n > FLAT_CELL_LIMIT:
        raise OracleCapacityError(f"{n} cells exceeds the flat oracle limit {FLAT_CELL_LIMIT}")
    flat = [v for row in inst.grid for v in row]
    count = 0
    first: Optional[Mask] = None
    for bits in range(1 << n):
        # bit (n-1) is cell (1,1) so increasing bits is canonical order
        keep = [(bits >> (n - 1 - k)) & 1 == 1 for k in range(n)]
        rs = [sum(flat[i * c + j] for j in range(c) if keep[i * c + j]) for i in range(r)]
        if rs != list(inst.row_hints):
            continue
        cs = [sum(flat[i * c + j] for i in range(r) if keep[i * c + j]) for j in range(c)]
        if cs != list(inst.col_hints):
            continue
        count += 1
        if first is None:
            first = Mask(r, c, [keep[i * c : (i + 1) * c] for i in range(r)])
    return count, first


def brute_force_rows(inst: SumpleteInstance) -> tuple[int, Optional[Mask]]:
    """Cartesian product of per-row hint-matching patterns, columns
    checked last. Requires the candidate-count product <= 10^8."""
    r, c = inst.rows, inst.cols
    per_row = [_oracle_row_subsets(inst.grid[i], inst.row_hints[i]) for i in range(r)]
    product = 1
    for ci in per_row:
        product *= len(ci)
        if product > PRODUCT_LIMIT:
            raise OracleCapacityError(
                f"row-candidate product exceeds the oracle limit {PRODUCT_LIMIT}"
            )
    count = 0
    first: Optional[Mask] = None
    chints = list(inst.col_hints)
    for combo in itertools.product(*per_row):
        cs = [sum(inst.grid[i][j] for i in range(r) if combo[i][j]) for j in range(c)]
        if cs == chints:
            count += 1
            if first is None:
                first = Mask(r, c, combo)
    return count, first


def brute_force(
    inst: SumpleteInstance, variant: str = "auto"
) -> tuple[int, Optional[Mask]]:
    """Exact solution count and first witness in canonical order.

    variant: "flat" (2^(rows*cols) masks), "rows" (per-row product), or
    "auto" (rows when within budget, else flat).
    """
    if variant == "flat":
        return brute_force_flat(inst)
    if variant == "rows":
        return brute_force_rows(inst)
    if variant != "auto":
        raise ValueError(f"unknown oracle variant {variant!r}")
    try:
        return brute_force_rows(inst)
    except OracleCapacityError:
        return brute_force_flat(inst)
