"""Transformation from regular positive-3-literal XSAT formulas to
two-valued Sumplete instances, with witness mappings in both directions.

Given a regular formula with n variables and n clauses, the produced
grid has n+1 rows and n columns: cell (i,j) is 1 when variable j occurs
in clause i and 3 otherwise, the extra bottom row is all 3s, row hints
are 1 for the clause rows and 2n for the bottom row, and every column
hint is 3. Keeping the 1 at (i,j) corresponds to variable j being the
unique true literal of clause i.
"""

from __future__ import annotations

from .core import InvariantError, Mask, SumpleteInstance, verify
from .xsat import XsatInstance, is_regular, verify_assignment


class NotRegularError(InvariantError):
    """Input formula does not have the required regular shape."""


class InvalidWitnessError(InvariantError):
    """Mask does not solve the reduced instance, so it encodes nothing."""


def _require_regular(phi: XsatInstance) -> None:
    if not is_regular(phi):
        raise NotRegularError(
            "formula must have #clauses == #variables and every variable in exactly 3 clauses"
        )


def reduce_xsat(phi: XsatInstance) -> SumpleteInstance:
    """Build the (n+1) x n two-valued instance encoding the formula."""
    _require_regular(phi)
    n = phi.n_vars
    grid = [[1 if (j + 1) in cl else 3 for j in range(n)] for cl in phi.clauses]
    grid.append([3] * n)
    row_hints = [1] * n + [2 * n]
    col_hints = [3] * n
    return SumpleteInstance(n + 1, n, grid, row_hints, col_hints)


def assignment_to_mask(phi: XsatInstance, a) -> Mask:
    """Encode an assignment: keep cell (i,j) iff variable j occurs in
    clause i and is true; keep bottom-row cell j iff variable j is false.

    The result solves reduce_xsat(phi) exactly when the assignment
    exactly-satisfies the formula.
    """
    _require_regular(phi)
    if len(a) != phi.n_vars:
        raise InvariantError(
            f"assignment has {len(a)} values, formula has {phi.n_vars} variables"
        )
    n = phi.n_vars
    keep = [[(j + 1) in cl and a[j] for j in range(n)] for cl in phi.clauses]
    keep.append([not a[j] for j in range(n)])
    return Mask(n + 1, n, keep)


def mask_to_assignment(phi: XsatInstance, m: Mask) -> tuple:
    """Decode a solving mask back to the assignment it encodes.

    Variable j is true iff some value-1 cell in column j of the clause
    rows is kept. Only masks that actually solve the reduced instance
    are accepted; anything else is rejected rather than guessed at.
    """
    _require_regular(phi)
    inst = reduce_xsat(phi)
    if (m.rows, m.cols) != (inst.rows, inst.cols):
        raise InvalidWitnessError(
            f"mask is {m.rows}x{m.cols}, reduced instance is {inst.rows}x{inst.cols}"
        )
    if not verify(inst, m):
        raise InvalidWitnessError("mask does not solve the reduced instance")
    n = phi.n_vars
    a = tuple(
        any(inst.grid[i][j] == 1 and m.keep[i][j] for i in range(n)) for j in range(n)
    )
    assert verify_assignment(phi, a)
    return a
