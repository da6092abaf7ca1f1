"""Irreducible decomposition of monomial ideals by recursive splitting.

The splitting rule is deterministic: take the first generator (in canonical
order) whose support has at least two variables, peel off its smallest
variable as a pure power, and recurse on the two enlarged ideals.  Results
are memoized per canonical ideal in a bounded LRU cache, components are
pruned to an irredundant set, and associated primes are read off as the
radicals (support sets) of the surviving components.
"""

from __future__ import annotations

import threading
import time
from collections import OrderedDict
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .ideal import MonomialIdeal
from .monomial import Monomial

DEFAULT_CACHE_SIZE = 1 << 16

WITNESS_IN_POWER = "u in I^k"
WITNESS_COLON_TOO_BIG = "colon too big"
WITNESS_COLON_TOO_SMALL = "colon too small"


class DeadlineExceeded(RuntimeError):
    """A decomposition ran past its wall-clock deadline."""


@dataclass(frozen=True)
class VarPrime:
    """A prime ideal generated by a subset of the variables (1-based indices)."""

    nvars: int
    vars: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vars)
        object.__setattr__(self, "vars", vs)
        if not vs:
            raise ValueError("a variable prime needs at least one variable")
        if any(not 1 <= v <= self.nvars for v in vs):
            raise ValueError(f"variable indices {vs} out of range [1, {self.nvars}]")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ValueError(f"variable indices must be strictly increasing, got {vs}")

    @property
    def sort_key(self) -> tuple:
        return (len(self.vars), self.vars)

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal._from_minimal(
            self.nvars, (Monomial.variable(i, self.nvars) for i in self.vars)
        )

    def __str__(self) -> str:
        return "<" + ",".join(f"x{i}" for i in self.vars) + ">"


@dataclass(frozen=True)
class IrreducibleComponent:
    """An ideal generated by pure variable powers: <x_i^a : (i, a) in powers>."""

    nvars: int
    powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        items = tuple(sorted(dict(self.powers).items()))
        object.__setattr__(self, "powers", items)
        if not items:
            raise ValueError("an irreducible component needs at least one variable power")
        for i, a in items:
            if not 1 <= i <= self.nvars:
                raise ValueError(f"variable index {i} out of range [1, {self.nvars}]")
            if a < 1:
                raise ValueError(f"pure power exponent must be >= 1, got x{i}^{a}")

    @classmethod
    def from_map(cls, nvars: int, powers: Mapping[int, int]) -> IrreducibleComponent:
        return cls(nvars, tuple(powers.items()))

    @property
    def sort_key(self) -> tuple:
        return (len(self.powers), self.powers)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.powers)

    def support_mask(self) -> int:
        mask = 0
        for i, _ in self.powers:
            mask |= 1 << i
        return mask

    def radical_prime(self) -> VarPrime:
        return VarPrime(self.nvars, self.support())

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal._from_minimal(
            self.nvars, (Monomial.variable(i, self.nvars, a) for i, a in self.powers)
        )

    def ideal_contains(self, other: IrreducibleComponent) -> bool:
        """True iff other is a subset of self as ideals (componentwise exponent test)."""
        mine = dict(self.powers)
        for i, b in other.powers:
            a = mine.get(i)
            if a is None or a > b:
                return False
        return True

    def gens_text(self) -> list[str]:
        return [f"x{i}^{a}" if a > 1 else f"x{i}" for i, a in self.powers]

    def __str__(self) -> str:
        return "<" + ",".join(self.gens_text()) + ">"


class DecompositionCache:
    """Bounded, thread-safe LRU memo keyed on the canonical ideal.

    The splitting recursion revisits identical subideals heavily; the cap
    bounds memory on large powers, with least-recently-used eviction.
    """

    def __init__(self, maxsize: int = DEFAULT_CACHE_SIZE):
        if maxsize < 1:
            raise ValueError("cache size must be positive")
        self.maxsize = maxsize
        self._data: OrderedDict[MonomialIdeal, tuple[IrreducibleComponent, ...]] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: MonomialIdeal) -> Optional[tuple[IrreducibleComponent, ...]]:
        with self._lock:
            value = self._data.get(key)
            if value is None:
                self.misses += 1
                return None
            self._data.move_to_end(key)
            self.hits += 1
            return value

    def put(self, key: MonomialIdeal, value: tuple[IrreducibleComponent, ...]) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        return len(self._data)


_default_cache = DecompositionCache()


def _prune_contained(components: Iterable[IrreducibleComponent]) -> list[IrreducibleComponent]:
    """Drop duplicates and every component that contains another component.

    For pure-power components this containment prune is complete: an
    intersection of such components lies inside Q only if one of them does
    (take the lcm of per-component witnesses outside Q), so what survives is
    already irredundant.
    """
    unique = sorted(set(components), key=lambda c: c.sort_key)
    masks = [c.support_mask() for c in unique]
    kept: list[IrreducibleComponent] = []
    for i, c in enumerate(unique):
        redundant = False
        for j, other in enumerate(unique):
            # distinct components are distinct ideals, so containment is strict;
            # c can only contain other if other's support is a subset of c's
            if i != j and masks[i] & masks[j] == masks[j] and c.ideal_contains(other):
                redundant = True
                break
        if not redundant:
            kept.append(c)
    return kept


def intersect_components(
    components: Sequence[IrreducibleComponent], nvars: int
) -> MonomialIdeal:
    """Intersection of a family of components; zero components -> zero ideal is not
    meaningful here, so an empty family is rejected."""
    if not components:
        raise ValueError("cannot intersect an empty family of components")
    ideals = [c.as_ideal() for c in components]
    return reduce(lambda a, b: a.intersect(b), ideals)


def irredundant_filter(
    components: Iterable[IrreducibleComponent], ideal: MonomialIdeal
) -> tuple[IrreducibleComponent, ...]:
    """Reduce a decomposition of `ideal` to an irredundant one.

    First pass: pairwise pure-power containment (cheap).  Second pass: drop
    any component whose removal leaves the intersection equal to `ideal`,
    recomputing after each removal.  The second pass is an exact safeguard;
    after the first it does not fire for pure-power components.
    """
    kept = _prune_contained(components)
    changed = True
    while changed and len(kept) > 1:
        changed = False
        # prefix[i] = intersection of kept[:i], suffix[i] = intersection of kept[i+1:]
        n = len(kept)
        prefix: list[Optional[MonomialIdeal]] = [None] * (n + 1)
        suffix: list[Optional[MonomialIdeal]] = [None] * (n + 1)
        for i, c in enumerate(kept):
            ci = c.as_ideal()
            prefix[i + 1] = ci if prefix[i] is None else prefix[i].intersect(ci)
        for i in range(n - 1, -1, -1):
            ci = kept[i].as_ideal()
            suffix[i] = ci if suffix[i + 1] is None else suffix[i + 1].intersect(ci)
        for i in range(n):
            left = prefix[i]
            right = suffix[i + 1]
            if left is None:
                others = right
            elif right is None:
                others = left
            else:
                others = left.intersect(right)
            if others == ideal:
                del kept[i]
                changed = True
                break
    return tuple(sorted(kept, key=lambda c: c.sort_key))


def _split_pivot(ideal: MonomialIdeal) -> Optional[tuple[Monomial, int, int]]:
    """First mixed-support generator with its smallest variable and exponent."""
    for g in ideal.gens:
        support = [i for i, e in enumerate(g.exponents, start=1) if e > 0]
        if len(support) >= 2:
            i = support[0]
            return g, i, g.exponents[i - 1]
    return None


def irreducible_decomposition(
    ideal: MonomialIdeal,
    *,
    cache: Optional[DecompositionCache] = None,
    deadline: Optional[float] = None,
) -> tuple[IrreducibleComponent, ...]:
    """Irredundant irreducible decomposition of a nonzero monomial ideal.

    Deterministic: independent of cache state and thread count.  `deadline`
    is an optional time.monotonic() timestamp; crossing it raises
    DeadlineExceeded.
    """
    if ideal.is_zero:
        raise ValueError("the zero ideal has no irreducible decomposition")
    if cache is None:
        cache = _default_cache

    # Iterative post-order over the splitting tree.  Each frame pins its
    # children's results so LRU eviction can never force recomputation of a
    # value an in-flight parent still needs.
    # frame = [ideal, children (None until expanded), collected child results]
    root_result: Optional[tuple[IrreducibleComponent, ...]] = None
    stack: list[list] = [[ideal, None, []]]
    while stack:
        if deadline is not None and time.monotonic() > deadline:
            raise DeadlineExceeded("decomposition exceeded its time budget")
        frame = stack[-1]
        current, children, results = frame

        def finish(value: tuple[IrreducibleComponent, ...]) -> None:
            nonlocal root_result
            stack.pop()
            if stack:
                stack[-1][2].append(value)
            else:
                root_result = value

        if children is None:
            cached = cache.get(current)
            if cached is not None:
                finish(cached)
                continue
            pivot = _split_pivot(current)
            if pivot is None:
                # every generator is a pure variable power: irreducible already
                comp = IrreducibleComponent(
                    current.nvars,
                    tuple(
                        (i, e)
                        for g in current.gens
                        for i, e in enumerate(g.exponents, start=1)
                        if e > 0
                    ),
                )
                value = (comp,)
                cache.put(current, value)
                finish(value)
                continue
            g, i, a = pivot
            xi = Monomial.variable(i, current.nvars, a)
            frame[1] = (current._with_generator(xi), current._with_generator(g.quotient(xi)))
            continue
        if len(results) < len(children):
            stack.append([children[len(results)], None, []])
            continue
        merged = tuple(_prune_contained(results[0] + results[1]))
        cache.put(current, merged)
        finish(merged)

    assert root_result is not None
    # containment pruning is complete for pure-power components (see
    # _prune_contained), so the merged result is already irredundant
    return tuple(sorted(root_result, key=lambda c: c.sort_key))


def associated_primes(
    ideal: MonomialIdeal,
    *,
    cache: Optional[DecompositionCache] = None,
    deadline: Optional[float] = None,
) -> tuple[VarPrime, ...]:
    """Associated primes: radicals of the irredundant irreducible components."""
    components = irreducible_decomposition(ideal, cache=cache, deadline=deadline)
    primes = {c.radical_prime() for c in components}
    return tuple(sorted(primes, key=lambda p: p.sort_key))


@dataclass(frozen=True)
class WitnessCheck:
    """Outcome of a colon-witness check, with a reason code on failure."""

    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(
    ideal: MonomialIdeal,
    k: int,
    u: Monomial,
    prime: VarPrime,
    *,
    power: Optional[MonomialIdeal] = None,
) -> WitnessCheck:
    """Check that u realizes prime as I^k : u with u outside I^k.

    `power` may carry a precomputed I^k to avoid recomputation in sweeps.
    """
    if k < 1:
        raise ValueError("power exponent must be >= 1")
    ik = power if power is not None else ideal.power(k)
    if ik.contains(u):
        return WitnessCheck(False, WITNESS_IN_POWER)
    colon = ik.colon_monomial(u)
    prime_ideal = prime.as_ideal()
    if not colon.is_subset(prime_ideal):
        return WitnessCheck(False, WITNESS_COLON_TOO_BIG)
    if not prime_ideal.is_subset(colon):
        return WitnessCheck(False, WITNESS_COLON_TOO_SMALL)
    return WitnessCheck(True)


def minimal_primes_squarefree(ideal: MonomialIdeal) -> tuple[VarPrime, ...]:
    """Minimal primes of a squarefree monomial ideal by exhaustive transversal search.

    Independent of the splitting engine: enumerates all variable subsets and
    keeps the inclusion-minimal ones hitting every generator's support.
    """
    if ideal.is_zero:
        raise ValueError("the zero ideal has no minimal primes")
    if not ideal.is_squarefree:
        raise ValueError("minimal_primes_squarefree requires a squarefree ideal")
    supports = [g.support() for g in ideal.gens]
    universe = range(1, ideal.nvars + 1)

    def hits_all(subset: frozenset[int]) -> bool:
        return all(subset & s for s in supports)

    found: list[VarPrime] = []
    for size in range(1, ideal.nvars + 1):
        for combo in combinations(universe, size):
            subset = frozenset(combo)
            if not hits_all(subset):
                continue
            if any(hits_all(subset - {v}) for v in combo):
                continue
            found.append(VarPrime(ideal.nvars, combo))
    return tuple(sorted(found, key=lambda p: p.sort_key))
