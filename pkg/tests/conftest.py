import pytest

from sumplete import Mask, SumpleteInstance, XsatInstance

# 5x5 example puzzle and its published solution (T = kept).
PUZZLE_5X5_GRID = [
    [3, 5, 5, 7, 1],
    [5, 1, 4, 1, 8],
    [4, 7, 2, 5, 2],
    [6, 2, 4, 9, 4],
    [3, 3, 4, 9, 6],
]
PUZZLE_5X5_ROW_HINTS = [13, 14, 11, 6, 15]
PUZZLE_5X5_COL_HINTS = [11, 18, 11, 9, 10]
PUZZLE_5X5_KEEP = [
    [True, True, True, False, False],
    [True, True, False, False, True],
    [False, True, True, False, True],
    [False, True, True, False, False],
    [True, True, False, True, False],
]

# Regular 6-variable exact-sat formula and its known solution.
FORMULA_6_CLAUSES = [(1, 2, 3), (2, 3, 6), (1, 4, 6), (2, 5, 6), (1, 4, 5), (3, 4, 5)]
FORMULA_6_ASSIGNMENT = (False, True, False, True, False, False)

# The reduced 7x6 two-valued instance for FORMULA_6 and its solution mask.
REDUCED_7X6_GRID = [
    [1, 1, 1, 3, 3, 3],
    [3, 1, 1, 3, 3, 1],
    [1, 3, 3, 1, 3, 1],
    [3, 1, 3, 3, 1, 1],
    [1, 3, 3, 1, 1, 3],
    [3, 3, 1, 1, 1, 3],
    [3, 3, 3, 3, 3, 3],
]
REDUCED_7X6_ROW_HINTS = [1, 1, 1, 1, 1, 1, 12]
REDUCED_7X6_COL_HINTS = [3, 3, 3, 3, 3, 3]
REDUCED_7X6_KEEP = [
    [False, True, False, False, False, False],
    [False, True, False, False, False, False],
    [False, False, False, True, False, False],
    [False, True, False, False, False, False],
    [False, False, False, True, False, False],
    [False, False, False, True, False, False],
    [True, False, True, False, True, True],
]


@pytest.fixture
def puzzle_5x5():
    return SumpleteInstance(5, 5, PUZZLE_5X5_GRID, PUZZLE_5X5_ROW_HINTS, PUZZLE_5X5_COL_HINTS)


@pytest.fixture
def puzzle_5x5_solution():
    return Mask(5, 5, PUZZLE_5X5_KEEP)


@pytest.fixture
def formula_6():
    return XsatInstance(6, FORMULA_6_CLAUSES)


@pytest.fixture
def reduced_7x6():
    return SumpleteInstance(
        7, 6, REDUCED_7X6_GRID, REDUCED_7X6_ROW_HINTS, REDUCED_7X6_COL_HINTS
    )


@pytest.fixture
def reduced_7x6_solution():
    return Mask(7, 6, REDUCED_7X6_KEEP)
