"""Independence ideals of path graphs and the combinatorics around them.

The path on n vertices is x1 - x2 - ... - xn; an independent set contains no
two consecutive vertices.  The size-t independence ideal is generated by the
squarefree monomials x^F over all independent sets F of size t; it is nonzero
exactly when n >= 2t - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple, Optional

from .decomposition import VarPrime
from .ideal import MonomialIdeal
from .monomial import Monomial

# Independent-set counts grow binomially; verification targets n <= 10.
MAX_PATH_VERTICES = 24


class PathCase(str, Enum):
    """Parameter regimes for the (n, t) family."""

    DEGENERATE_T1 = "DEGENERATE_T1"  # t = 1: the ideal is the maximal ideal
    ZERO = "ZERO"                    # n < 2t - 1: no independent t-set exists
    CASE_2T_MINUS_1 = "CASE_2T_MINUS_1"
    CASE_2T = "CASE_2T"
    CASE_GT_2T = "CASE_GT_2T"


class ZeroIdealError(ValueError):
    """Raised by predictions when the parameters give the zero ideal."""

    def __init__(self, n: int, t: int):
        super().__init__(f"no independent sets of size {t} in a path on {n} vertices")
        self.n = n
        self.t = t
        self.case = PathCase.ZERO


def classify(n: int, t: int) -> PathCase:
    if n < 1 or t < 1:
        raise ValueError("n and t must be positive")
    if t == 1:
        return PathCase.DEGENERATE_T1
    if n < 2 * t - 1:
        return PathCase.ZERO
    if n == 2 * t - 1:
        return PathCase.CASE_2T_MINUS_1
    if n == 2 * t:
        return PathCase.CASE_2T
    return PathCase.CASE_GT_2T


@dataclass(frozen=True)
class PathFamilyParams:
    """A grid cell: path length n, set size t, optional power exponent k."""

    n: int
    t: int
    k: Optional[int] = None

    def __post_init__(self):
        if self.n < 1 or self.t < 1:
            raise ValueError("n and t must be positive")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be positive")

    @property
    def case(self) -> PathCase:
        return classify(self.n, self.t)


def independent_sets(n: int, t: int, *, max_n: int = MAX_PATH_VERTICES) -> list[tuple[int, ...]]:
    """All size-t independent sets of the path on n vertices, lexicographic.

    Uses the gap bijection with t-subsets of [n - t + 1], which enumerates in
    lexicographic order without generating invalid candidates.
    """
    if n < 1 or t < 1:
        raise ValueError("n and t must be positive")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the enumeration cap {max_n}")
    if n < 2 * t - 1:
        return []
    return [
        tuple(c + shift for shift, c in enumerate(combo))
        for combo in combinations(range(1, n - t + 2), t)
    ]


@lru_cache(maxsize=None)
def ind_ideal(n: int, t: int) -> MonomialIdeal:
    """The size-t independence ideal of the path on n vertices (zero if none exist)."""
    sets = independent_sets(n, t)
    return MonomialIdeal._from_minimal(
        n, sorted((Monomial.from_support(s, n) for s in sets), key=lambda m: m.sort_key)
    )


def independent_set_count(n: int, t: int) -> int:
    """Closed-form count: C(n - t + 1, t)."""
    if n < 2 * t - 1:
        return 0
    return comb(n - t + 1, t)


def generator_2t(t: int, i: int) -> Monomial:
    """The i-th minimal generator of the ideal for n = 2t.

    It is x1*x3*...*x_{2i-1} times x_{2i+2}*x_{2i+4}*...*x_{2t}: the first i
    odd positions followed by the trailing even positions.  i ranges over
    0..t; i = 0 gives the all-even product, i = t the all-odd one.
    """
    if not 0 <= i <= t:
        raise ValueError(f"generator index {i} out of range [0, {t}]")
    odds = range(1, 2 * i, 2)
    evens = range(2 * i + 2, 2 * t + 1, 2)
    return Monomial.from_support(list(odds) + list(evens), 2 * t)


def complement_components(n: int, prime: VarPrime) -> list[int]:
    """Sizes, left to right, of the runs of consecutive vertices missing from prime."""
    if prime.vars and prime.vars[-1] > n:
        raise ValueError(f"prime {prime} has variables beyond n={n}")
    in_prime = set(prime.vars)
    sizes: list[int] = []
    run = 0
    for v in range(1, n + 1):
        if v in in_prime:
            if run:
                sizes.append(run)
            run = 0
        else:
            run += 1
    if run:
        sizes.append(run)
    return sizes


class ComplementChecks(NamedTuple):
    """Three facts about a parity prime B with complement A in [n].

    size_ok:  |A| == 2t - 2*level.
    meet_ok:  every independent t-set meets B in at least `level` vertices.
    fill_ok:  for every size-`level` subset H of B with no two entries adjacent
              in B's index list, the squarefree monomial on H union A lies in
              the independence ideal.
    """

    size_ok: bool
    meet_ok: bool
    fill_ok: bool


def _nonadjacent_position_subsets(m: int, size: int) -> list[tuple[int, ...]]:
    """Size-`size` subsets of positions 0..m-1 with no two consecutive positions."""
    if size == 0:
        return [()]
    return [
        tuple(p + shift for shift, p in enumerate(combo))
        for combo in combinations(range(m - size + 1), size)
    ]


def parity_complement_checks(n: int, t: int, prime: VarPrime, level: int) -> ComplementChecks:
    """Exhaustively check the complement-size, meet, and fill properties of a prime.

    `prime` plays the role of the index set B; its complement A consists of
    the remaining path vertices.  All three checks are brute force over the
    relevant finite sets.
    """
    if n < 1 or t < 1:
        raise ValueError("n and t must be positive")
    if not 1 <= level <= t:
        raise ValueError(f"level {level} out of range [1, {t}]")
    if prime.vars[-1] > n:
        raise ValueError(f"prime {prime} has variables beyond n={n}")

    b = prime.vars
    a = [v for v in range(1, n + 1) if v not in set(b)]
    size_ok = len(a) == 2 * t - 2 * level

    sets = independent_sets(n, t)
    b_set = set(b)
    meet_ok = all(sum(1 for v in s if v in b_set) >= level for s in sets)

    ideal = ind_ideal(n, t)
    fill_ok = True
    for positions in _nonadjacent_position_subsets(len(b), level):
        h = [b[p] for p in positions]
        if not ideal.contains(Monomial.from_support(h + a, n)):
            fill_ok = False
            break
    return ComplementChecks(size_ok, meet_ok, fill_ok)
