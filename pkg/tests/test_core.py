import random

import pytest

import sumplete.core as core
from sumplete import (
    DimensionMismatch,
    InvariantError,
    Mask,
    ParseError,
    SumpleteInstance,
    col_sums,
    is_two_valued,
    parse_instance,
    parse_mask,
    row_sums,
    serialize_instance,
    serialize_mask,
    verify,
)


def all_keep(r, c, value=True):
    return Mask(r, c, [[value] * c for _ in range(r)])


class TestConstruction:
    def test_rejects_zero_cell(self):
        with pytest.raises(InvariantError):
            SumpleteInstance(1, 1, [[0]], [0], [0])

    def test_rejects_oversize_value(self):
        with pytest.raises(InvariantError):
            SumpleteInstance(1, 1, [[10**6 + 1]], [0], [0])

    def test_rejects_too_many_cells(self):
        with pytest.raises(InvariantError):
            SumpleteInstance(101, 101, [[1] * 101] * 101, [0] * 101, [0] * 101)

    def test_rejects_negative_hint(self):
        with pytest.raises(InvariantError):
            SumpleteInstance(1, 1, [[1]], [-1], [0])

    def test_rejects_ragged_grid(self):
        with pytest.raises(InvariantError):
            SumpleteInstance(2, 2, [[1, 2], [3]], [0, 0], [0, 0])

    def test_overlarge_hints_are_legal(self):
        # a hint beyond the line total just makes the puzzle unsolvable
        SumpleteInstance(1, 1, [[1]], [999], [999])


class TestSums:
    def test_row_sums_solved_5x5(self, puzzle_5x5, puzzle_5x5_solution):
        assert row_sums(puzzle_5x5, puzzle_5x5_solution) == [13, 14, 11, 6, 15]

    def test_row_sums_all_crossed(self, puzzle_5x5):
        assert row_sums(puzzle_5x5, all_keep(5, 5, False)) == [0] * 5

    def test_row_sums_all_keep_top_row(self, puzzle_5x5):
        assert row_sums(puzzle_5x5, all_keep(5, 5))[0] == 21  # 3+5+5+7+1

    def test_col_sums_solved_5x5(self, puzzle_5x5, puzzle_5x5_solution):
        assert col_sums(puzzle_5x5, puzzle_5x5_solution)[3] == 9

    def test_col_sums_all_crossed(self, puzzle_5x5):
        assert col_sums(puzzle_5x5, all_keep(5, 5, False)) == [0] * 5

    def test_col_sums_all_keep_first_col(self, puzzle_5x5):
        assert col_sums(puzzle_5x5, all_keep(5, 5))[0] == 21  # 3+5+4+6+3

    def test_dimension_mismatch_is_an_error(self, puzzle_5x5):
        with pytest.raises(DimensionMismatch):
            row_sums(puzzle_5x5, all_keep(4, 5))
        with pytest.raises(DimensionMismatch):
            col_sums(puzzle_5x5, all_keep(5, 4))

    def test_row_total_equals_col_total_randomized(self):
        rng = random.Random(7)
        for _ in range(100):
            r, c = rng.randint(1, 5), rng.randint(1, 5)
            grid = [[rng.randint(1, 9) for _ in range(c)] for _ in range(r)]
            inst = SumpleteInstance(r, c, grid, [0] * r, [0] * c)
            m = Mask(r, c, [[rng.random() < 0.5 for _ in range(c)] for _ in range(r)])
            assert sum(row_sums(inst, m)) == sum(col_sums(inst, m))


class TestVerify:
    def test_solved_5x5(self, puzzle_5x5, puzzle_5x5_solution):
        assert verify(puzzle_5x5, puzzle_5x5_solution)

    def test_all_crossed_against_zero_hints(self):
        inst = SumpleteInstance(1, 1, [[5]], [0], [0])
        assert verify(inst, all_keep(1, 1, False))

    def test_all_keep_5x5_fails(self, puzzle_5x5):
        assert not verify(puzzle_5x5, all_keep(5, 5))

    def test_mismatch_raises_instead_of_false(self, puzzle_5x5):
        with pytest.raises(DimensionMismatch):
            verify(puzzle_5x5, all_keep(4, 4))

    def test_cell_visit_count_is_linear(self, puzzle_5x5, puzzle_5x5_solution):
        visits = 0

        def bump():
            nonlocal visits
            visits += 1

        core.cell_visit_hook = bump
        try:
            verify(puzzle_5x5, puzzle_5x5_solution)
        finally:
            core.cell_visit_hook = None
        # one pass for row sums, one for column sums
        assert visits == 2 * 5 * 5


class TestTwoValued:
    def test_reduced_instance_is_two_valued(self, reduced_7x6):
        assert is_two_valued(reduced_7x6, 1, 3)

    def test_5x5_is_not(self, puzzle_5x5):
        assert not is_two_valued(puzzle_5x5, 1, 3)

    def test_single_cell(self):
        assert is_two_valued(SumpleteInstance(1, 1, [[1]], [0], [0]), 1, 3)

    def test_lo_must_be_below_hi(self, puzzle_5x5):
        with pytest.raises(ValueError):
            is_two_valued(puzzle_5x5, 3, 1)


class TestSerialization:
    @pytest.mark.parametrize("fmt", ["json", "grid-text"])
    def test_round_trip_5x5(self, puzzle_5x5, fmt):
        assert parse_instance(serialize_instance(puzzle_5x5, fmt), fmt) == puzzle_5x5

    @pytest.mark.parametrize("fmt", ["json", "grid-text"])
    def test_empty_input(self, fmt):
        with pytest.raises(ParseError):
            parse_instance(b"", fmt)

    def test_grid_text_zero_cell_is_invariant_error(self):
        text = b"1 1\n0\n0\n0\n"
        with pytest.raises(InvariantError):
            parse_instance(text, "grid-text")

    def test_grid_text_comments_ignored(self, puzzle_5x5):
        data = serialize_instance(puzzle_5x5, "grid-text")
        commented = b"# a puzzle\n" + data + b"# trailing comment\n"
        assert parse_instance(commented, "grid-text") == puzzle_5x5

    def test_json_missing_key_names_field(self):
        with pytest.raises(ParseError, match="grid"):
            parse_instance(b'{"rows":1,"cols":1,"row_hints":[0],"col_hints":[0]}', "json")

    def test_grid_text_bad_token_names_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_instance(b"1 1\nx\n0\n0\n", "grid-text")

    def test_canonical_json_is_stable(self, puzzle_5x5):
        a = serialize_instance(puzzle_5x5, "json")
        b = serialize_instance(parse_instance(a, "json"), "json")
        assert a == b

    @pytest.mark.parametrize("fmt", ["json", "grid-text"])
    def test_round_trip_randomized(self, fmt):
        rng = random.Random(13)
        for _ in range(100):
            r, c = rng.randint(1, 6), rng.randint(1, 6)
            inst = SumpleteInstance(
                r,
                c,
                [[rng.randint(1, 999) for _ in range(c)] for _ in range(r)],
                [rng.randint(0, 50) for _ in range(r)],
                [rng.randint(0, 50) for _ in range(c)],
            )
            assert parse_instance(serialize_instance(inst, fmt), fmt) == inst

    @pytest.mark.parametrize("fmt", ["json", "grid-text"])
    def test_mask_round_trip(self, puzzle_5x5_solution, fmt):
        data = serialize_mask(puzzle_5x5_solution, fmt)
        assert parse_mask(data, fmt) == puzzle_5x5_solution

    def test_mask_json_requires_booleans(self):
        with pytest.raises(ParseError):
            parse_mask(b'{"rows":1,"cols":1,"keep":[[1]]}', "json")
