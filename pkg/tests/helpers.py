"""Independent brute-force oracles used to cross-check the library.

Everything here deliberately avoids the library's own algorithms: membership
is raw divisibility over generator lists, minimization is the naive quadratic
pass, equality is exhaustive membership agreement on a finite exponent box,
and witness primes come from enumerating all bounded colon quotients.
"""

from __future__ import annotations

from itertools import combinations, product
from random import Random

from pathideal import Monomial, MonomialIdeal, VarPrime


def naive_minimize(exponent_tuples):
    """Quadratic minimal-generator filter over raw exponent tuples."""
    unique = sorted(set(exponent_tuples))
    kept = []
    for cand in unique:
        dominated = False
        for other in unique:
            if other != cand and all(a <= b for a, b in zip(other, cand)):
                dominated = True
                break
        if not dominated:
            kept.append(cand)
    return sorted(kept)


def naive_member(exponent_tuples, monomial_exponents):
    return any(
        all(a <= b for a, b in zip(g, monomial_exponents)) for g in exponent_tuples
    )


def exponent_box(nvars, bound):
    """All exponent tuples with entries 0..bound."""
    return product(range(bound + 1), repeat=nvars)


def ideals_equal_by_membership(ideal_a: MonomialIdeal, ideal_b: MonomialIdeal) -> bool:
    """Complete equality oracle for small rings: compare membership on a box
    large enough to contain every generator of either ideal."""
    assert ideal_a.nvars == ideal_b.nvars
    bound = 0
    for g in list(ideal_a.gens) + list(ideal_b.gens):
        bound = max(bound, max(g.exponents, default=0))
    gens_a = [g.exponents for g in ideal_a.gens]
    gens_b = [g.exponents for g in ideal_b.gens]
    for exps in exponent_box(ideal_a.nvars, bound):
        if naive_member(gens_a, exps) != naive_member(gens_b, exps):
            return False
    return True


def brute_independent_sets(n, t):
    """Independent t-sets of the n-path by filtering all t-subsets."""
    out = []
    for combo in combinations(range(1, n + 1), t):
        if all(b - a >= 2 for a, b in zip(combo, combo[1:])):
            out.append(combo)
    return out


def brute_witness_primes(ideal: MonomialIdeal, k: int, bound: int):
    """All variable primes of the form I^k : u with u in the exponent box.

    Sound by definition of associated primes; complete for these ideals once
    `bound` reaches the largest exponent a witness needs (k suffices here,
    callers pass k + 1 for margin).
    """
    power = ideal.power(k)
    gens = [g.exponents for g in power.gens]
    nvars = ideal.nvars
    primes = set()
    for exps in exponent_box(nvars, bound):
        if naive_member(gens, exps):
            continue
        quotients = {
            tuple(a - b if a > b else 0 for a, b in zip(g, exps)) for g in gens
        }
        minimal = naive_minimize(quotients)
        if all(sum(1 for e in q if e) == 1 and max(q) == 1 for q in minimal):
            vars_ = tuple(
                sorted(q.index(1) + 1 for q in minimal)
            )
            primes.add(VarPrime(nvars, vars_))
    return primes


def random_squarefree_ideal(rng: Random, nvars: int, max_gens: int) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        size = rng.randint(1, nvars)
        gens.append(Monomial.from_support(rng.sample(range(1, nvars + 1), size), nvars))
    return MonomialIdeal(nvars, gens)


def random_ideal(rng: Random, nvars: int, max_gens: int, max_exp: int) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = [rng.randint(0, max_exp) for _ in range(nvars)]
        if not any(exps):
            exps[rng.randrange(nvars)] = 1
        gens.append(Monomial(exps))
    return MonomialIdeal(nvars, gens)
