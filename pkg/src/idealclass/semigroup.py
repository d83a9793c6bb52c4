"""Numerical semigroups: construction, invariants, distinguished gaps, census.

A numerical semigroup is stored through its gap set.  Membership of small
integers is a bitmask over ``[0, conductor)``; every integer at or above the
conductor is a member implicitly, so no table ever has to grow.
"""
from __future__ import annotations

from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Iterator

from .errors import EmptyForN, NotAGapSet, NotCoprime, ResourceLimit

__all__ = [
    "NumericalSemigroup",
    "from_generators",
    "from_gaps",
    "pseudo_frobenius",
    "special_gaps",
    "unitary_extensions",
    "is_symmetric",
    "is_pseudo_symmetric",
    "is_irreducible",
    "over_semigroups",
    "intersect",
    "intersection_of_unitary_extensions",
    "enumerate_by_genus",
    "NATURALS",
]


class NumericalSemigroup:
    """Cofinite submonoid of (N, +), identified by its gap set.

    Instances are immutable and hashable; two semigroups are equal iff they
    have the same gaps.  Use :func:`from_generators` or :func:`from_gaps`
    rather than calling the constructor with unchecked data.
    """

    def __init__(self, gaps: Iterable[int]):
        gaps = tuple(sorted(set(int(g) for g in gaps)))
        if gaps and gaps[0] <= 0:
            raise NotAGapSet(f"gaps must be positive integers, got {gaps[0]}")
        self.gaps = gaps
        self.genus = len(gaps)
        self.frobenius = gaps[-1] if gaps else -1
        self.conductor = self.frobenius + 1
        gap_bits = 0
        for g in gaps:
            gap_bits |= 1 << g
        # bit i set <=> i in S, for 0 <= i < conductor
        self.mask = ((1 << self.conductor) - 1) & ~gap_bits
        self._check_closed()

    def _check_closed(self) -> None:
        small = self.small_elements
        for i, a in enumerate(small):
            if a == 0:
                continue
            for b in small[i:]:
                if a + b > self.frobenius:
                    break
                if a + b not in self:
                    raise NotAGapSet(
                        f"{a} and {b} are members but their sum {a + b} is listed as a gap"
                    )

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self.mask >> n & 1)

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self):
        return hash(self.gaps)

    def __lt__(self, other: NumericalSemigroup) -> bool:
        return (self.genus, self.gaps) < (other.genus, other.gaps)

    def __repr__(self):
        return f"NumericalSemigroup({self.angle()})"

    def __str__(self):
        return self.describe()

    @property
    def is_naturals(self) -> bool:
        return self.genus == 0

    @cached_property
    def small_elements(self) -> tuple[int, ...]:
        """Members of S below the conductor (always includes 0)."""
        return tuple(i for i in range(max(self.conductor, 1)) if i in self)

    @cached_property
    def multiplicity(self) -> int:
        n = 1
        while n not in self:
            n += 1
        return n

    @cached_property
    def min_generators(self) -> tuple[int, ...]:
        # every minimal generator is at most C(S) + m(S) (equality only for N)
        m = self.multiplicity
        members = [x for x in range(1, self.conductor + m + 1) if x in self]
        gens = []
        for x in members:
            if not any(x - y in self for y in members if y <= x // 2):
                gens.append(x)
        return tuple(gens)

    def angle(self) -> str:
        return "⟨" + ",".join(map(str, self.min_generators)) + "⟩"

    def set_notation(self) -> str:
        """Render as ``{0,5,7} ∪ (14+ℕ)``; ℕ itself renders as ``ℕ``."""
        if self.is_naturals:
            return "ℕ"
        small = ",".join(map(str, self.small_elements))
        return "{" + small + "} ∪ (" + str(self.conductor) + "+ℕ)"

    def describe(self) -> str:
        t = 0 if self.is_naturals else len(pseudo_frobenius(self))
        return (
            f"{self.angle()} | gaps={{{','.join(map(str, self.gaps))}}} | "
            f"F={self.frobenius} g={self.genus} m={self.multiplicity} t={t}"
        )

    def with_element(self, x: int) -> NumericalSemigroup:
        """Return S ∪ {x}; raises NotAGapSet if that is not closed."""
        return NumericalSemigroup(g for g in self.gaps if g != x)

    def without_element(self, x: int) -> NumericalSemigroup:
        """Return S ∖ {x}; x must be a minimal generator for the result to be a semigroup."""
        return NumericalSemigroup(self.gaps + (x,))


NATURALS = NumericalSemigroup(())


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Numerical semigroup generated by ``gens`` (need not be minimal)."""
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    d = reduce(gcd, gens)
    if d != 1:
        raise NotCoprime(f"gcd{tuple(gens)} = {d}; the monoid is not cofinite")
    m = gens[0]
    # sieve until m consecutive members appear; everything after is then a member
    member = [True]
    gaps = []
    run = 1
    n = 0
    while run < m:
        n += 1
        ok = any(n >= a and member[n - a] for a in gens)
        member.append(ok)
        if ok:
            run += 1
        else:
            run = 0
            gaps.append(n)
    return NumericalSemigroup(gaps)


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Semigroup whose gap set is exactly ``gaps``; raises NotAGapSet otherwise."""
    return NumericalSemigroup(gaps)


def _require_gaps(S: NumericalSemigroup) -> None:
    if S.is_naturals:
        raise EmptyForN("S = N has no gaps")


def pseudo_frobenius(S: NumericalSemigroup) -> tuple[int, ...]:
    """Gaps h with h + s in S for every nonzero s in S."""
    _require_gaps(S)
    nonzero = [s for s in S.small_elements if s > 0] + [S.conductor]
    return tuple(h for h in S.gaps if all(h + s in S for s in nonzero))


def special_gaps(S: NumericalSemigroup) -> tuple[int, ...]:
    return tuple(h for h in pseudo_frobenius(S) if 2 * h in S and 3 * h in S)


def unitary_extensions(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    return [S.with_element(h) for h in special_gaps(S)]


def is_symmetric(S: NumericalSemigroup) -> bool:
    _require_gaps(S)
    # for negative z, F - z > F is always in S
    return all(S.frobenius - z in S for z in S.gaps)


def is_pseudo_symmetric(S: NumericalSemigroup) -> bool:
    _require_gaps(S)
    F = S.frobenius
    if F % 2:
        return False
    return all(F - z in S for z in S.gaps if 2 * z != F)


def is_irreducible(S: NumericalSemigroup) -> bool:
    return len(special_gaps(S)) <= 1


def intersect(S: NumericalSemigroup, T: NumericalSemigroup) -> NumericalSemigroup:
    return NumericalSemigroup(set(S.gaps) | set(T.gaps))


def intersection_of_unitary_extensions(S: NumericalSemigroup) -> NumericalSemigroup:
    """Intersect every unitary extension of S (S must not be N)."""
    return reduce(intersect, unitary_extensions(S))


def over_semigroups(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    """All T with S ⊆ T ⊆ N, sorted by (genus, gaps); S is last, N first."""
    seen = {S}
    frontier = [S]
    while frontier:
        nxt = []
        for T in frontier:
            if T.is_naturals:
                continue
            for U in unitary_extensions(T):
                if U not in seen:
                    seen.add(U)
                    nxt.append(U)
        frontier = nxt
    return sorted(seen)


def iter_semigroup_tree(g_max: int, node_budget: int | None = None) -> Iterator[NumericalSemigroup]:
    """Breadth-first walk of the semigroup tree down to genus ``g_max``.

    Children of S are S ∖ {a} for the minimal generators a > F(S), so each
    semigroup is produced exactly once.
    """
    if g_max < 0:
        raise ValueError("g_max must be non-negative")
    level = [NATURALS]
    produced = 0
    for genus in range(g_max + 1):
        nxt = []
        for S in level:
            produced += 1
            if node_budget is not None and produced > node_budget:
                raise ResourceLimit(f"semigroup tree exceeded {node_budget} nodes")
            yield S
            if genus < g_max:
                nxt.extend(S.without_element(a) for a in S.min_generators if a > S.frobenius)
        level = sorted(nxt)


def enumerate_by_genus(g_max: int, node_budget: int | None = None) -> list[NumericalSemigroup]:
    """Every numerical semigroup of genus at most ``g_max``, ordered by (genus, gaps)."""
    return list(iter_semigroup_tree(g_max, node_budget))
