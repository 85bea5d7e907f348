"""Seeded generation of puzzles and regular/planted XSAT formulas.

All randomness flows through a self-contained 64-bit generator so that
identical seeds give bitwise-identical outputs regardless of platform
or language runtime. The stream is xorshift64* with state seeded by one
splitmix64 scramble of the user seed:

    init:  z = (seed + 0x9E3779B97F4A7C15) mod 2^64
           z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
           z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
           state = z ^ (z >> 31), or 0x9E3779B97F4A7C15 if that is 0
    step:  x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27   (mod 2^64)
           output = (x * 0x2545F4914F6CDD1D) mod 2^64

Bounded draws use rejection sampling (no modulo bias); shuffles are
Fisher-Yates from the top index down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import InvariantError, Mask, SumpleteInstance
from .xsat import XsatInstance, is_regular, verify_assignment

_MASK64 = (1 << 64) - 1


class GenerationError(InvariantError):
    """Retry or repair budget exhausted while generating an instance."""


class Rng:
    """Deterministic xorshift64* stream, splitmix64-initialized."""

    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased via rejection."""
        if n < 1:
            raise ValueError("bound must be >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]

    def chance(self, p: Fraction) -> bool:
        if p.denominator == 1:
            return p.numerator >= 1
        return self.below(p.denominator) < p.numerator


@dataclass(frozen=True)
class GenConfig:
    seed: int
    rows: int
    cols: int
    alphabet: tuple = tuple(range(1, 10))
    keep_prob: Fraction = field(default=Fraction(1, 2))

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InvariantError("rows and cols must be positive")
        alphabet = tuple(self.alphabet)
        if not alphabet or any(not 1 <= v <= 1_000_000 for v in alphabet):
            raise InvariantError("alphabet must be non-empty values in 1..10^6")
        object.__setattr__(self, "alphabet", alphabet)
        p = Fraction(self.keep_prob)
        if not 0 <= p <= 1:
            raise InvariantError("keep_prob must be in [0, 1]")
        object.__setattr__(self, "keep_prob", p)


def gen_puzzle(cfg: GenConfig) -> tuple[SumpleteInstance, Mask]:
    """Random grid with a planted witness; hints are the witness's sums,
    so the pair always verifies. Draw order: grid row-major, then keeps
    row-major."""
    rng = Rng(cfg.seed)
    r, c = cfg.rows, cfg.cols
    grid = [[cfg.alphabet[rng.below(len(cfg.alphabet))] for _ in range(c)] for _ in range(r)]
    keep = [[rng.chance(cfg.keep_prob) for _ in range(c)] for _ in range(r)]
    row_hints = [sum(v for v, k in zip(grow, krow) if k) for grow, krow in zip(grid, keep)]
    col_hints = [sum(grid[i][j] for i in range(r) if keep[i][j]) for j in range(c)]
    return SumpleteInstance(r, c, grid, row_hints, col_hints), Mask(r, c, keep)


def gen_xsat_regular(n: int, seed: int, max_retries: int = 1000) -> XsatInstance:
    """Random regular formula: clause i takes the i-th element of three
    independent permutations of 1..n; redraw all three if any clause
    repeats a variable."""
    if n < 3:
        raise InvariantError("need n >= 3")
    rng = Rng(seed)
    for _ in range(max_retries):
        perms = []
        for _ in range(3):
            p = list(range(1, n + 1))
            rng.shuffle(p)
            perms.append(p)
        clauses = [(perms[0][i], perms[1][i], perms[2][i]) for i in range(n)]
        if all(len(set(cl)) == 3 for cl in clauses):
            phi = XsatInstance(n, clauses)
            assert is_regular(phi)
            return phi
    raise GenerationError(f"no clash-free permutation triple in {max_retries} retries")


def gen_xsat_planted(n: int, seed: int, max_repairs: int = 1000):
    """Regular formula built around a known exactly-satisfying assignment.

    The true set has n/3 variables, each placed in exactly one slot of
    three distinct clauses; false variables fill the remaining two slots
    per clause, three uses each. Clauses that end up repeating a false
    variable are repaired by random slot swaps.
    """
    if n < 3 or n % 3 != 0:
        raise InvariantError("need n >= 3 with n divisible by 3")
    rng = Rng(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    true_vars = order[: n // 3]
    false_vars = order[n // 3 :]

    slots_true = [v for v in true_vars for _ in range(3)]
    rng.shuffle(slots_true)
    fill = [v for v in false_vars for _ in range(3)]
    rng.shuffle(fill)

    # clause i = {slots_true[i], fill[2i], fill[2i+1]}; the only possible
    # clash is fill[2i] == fill[2i+1] since true and false sets are disjoint
    repairs = 0
    i = 0
    while i < n:
        if fill[2 * i] != fill[2 * i + 1]:
            i += 1
            continue
        if repairs >= max_repairs:
            raise GenerationError(f"clash repair budget {max_repairs} exhausted")
        repairs += 1
        s = rng.below(2 * n)
        q, t = divmod(s, 2)
        if q == i:
            continue
        # swap only if both clauses come out clash-free
        if fill[s] != fill[2 * i] and fill[2 * q + (1 - t)] != fill[2 * i + 1]:
            fill[2 * i], fill[s] = fill[s], fill[2 * i]
        i = 0  # recheck from the start; earlier clauses may have changed

    clauses = [(slots_true[i], fill[2 * i], fill[2 * i + 1]) for i in range(n)]
    phi = XsatInstance(n, clauses)
    assignment = tuple((j + 1) in set(true_vars) for j in range(n))
    assert is_regular(phi) and verify_assignment(phi, assignment)
    return phi, assignment


def perturb_hint(inst: SumpleteInstance, seed: int) -> SumpleteInstance:
    """Bump one uniformly chosen hint by +1. Solvability of the result
    is not guaranteed either way."""
    rng = Rng(seed)
    idx = rng.below(inst.rows + inst.cols)
    row_hints = list(inst.row_hints)
    col_hints = list(inst.col_hints)
    if idx < inst.rows:
        row_hints[idx] += 1
    else:
        col_hints[idx - inst.rows] += 1
    return SumpleteInstance(inst.rows, inst.cols, inst.grid, row_hints, col_hints)
