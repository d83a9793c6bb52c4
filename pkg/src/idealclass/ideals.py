"""Normalized ideals of a numerical semigroup and their inclusion poset.

An ideal I with min(I) = 0 contains S and every integer from C(S) on, so it
is stored as a bitmask over ``[0, C(S))`` exactly like the semigroup itself.
Sums and containment then reduce to shifts, ORs and ANDs.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    AmbientMismatch,
    EmptyForN,
    NotAGapPoset,
    NotAnInclusionPoset,
    NotMinimalGenerator,
    ResourceLimit,
    SemigroupError,
)
from .gap_poset import AbstractPoset, find_poset_isomorphism, reconstruct
from .semigroup import NumericalSemigroup

__all__ = [
    "NormalizedIdeal",
    "InclusionPoset",
    "ideal_from_generators",
    "minimal_generators",
    "remove_element",
    "add_ideals",
    "enumerate_normalized_ideals",
    "covers_inclusion",
    "covered_count",
    "gap_ideals",
    "build_inclusion_poset",
    "recover_from_inclusion_poset",
]


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class NormalizedIdeal:
    """Ideal I of ``semigroup`` with min(I) = 0.

    ``mask`` has bit i set iff i ∈ I, for 0 ≤ i < C(S); larger integers are
    members implicitly.  Equality is equality of ambient and mask.
    """

    def __init__(self, semigroup: NumericalSemigroup, mask: int, check: bool = True):
        self.semigroup = semigroup
        self.mask = mask & ((1 << semigroup.conductor) - 1)
        if check:
            self._validate()

    def _validate(self) -> None:
        S = self.semigroup
        if S.conductor and not self.mask & 1:
            raise SemigroupError("a normalized ideal must contain 0")
        if _shift_sum(self.mask, S.mask, S.conductor) != self.mask:
            raise SemigroupError("set is not closed under adding elements of S")

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.semigroup.conductor:
            return True
        return bool(self.mask >> n & 1)

    def __eq__(self, other):
        if not isinstance(other, NormalizedIdeal):
            return NotImplemented
        return self.semigroup == other.semigroup and self.mask == other.mask

    def __hash__(self):
        return hash((self.semigroup, self.mask))

    def __le__(self, other: NormalizedIdeal) -> bool:
        _same_ambient(self, other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: NormalizedIdeal) -> bool:
        return self <= other and self.mask != other.mask

    def __add__(self, other: NormalizedIdeal) -> NormalizedIdeal:
        return add_ideals(self, other)

    def __repr__(self):
        return f"NormalizedIdeal({{{self.label}}}+{self.semigroup.angle()})"

    @property
    def small_elements(self) -> tuple[int, ...]:
        """Members below the conductor of the ambient semigroup."""
        return tuple(_bits(self.mask)) or (0,)

    @cached_property
    def min_generators(self) -> tuple[int, ...]:
        S = self.semigroup
        plus_nonzero = 0
        for s in S.small_elements:
            if s:
                plus_nonzero |= self.mask << s
        gens = self.mask & ~plus_nonzero & ((1 << S.conductor) - 1)
        return tuple(_bits(gens)) or (0,)

    @property
    def label(self) -> str:
        return ",".join(map(str, self.min_generators))

    def difference_size(self, other: NormalizedIdeal) -> int:
        """|self ∖ other|; finite because both contain every integer ≥ C(S)."""
        _same_ambient(self, other)
        return bin(self.mask & ~other.mask).count("1")

    def is_semigroup(self) -> bool:
        return add_ideals(self, self) == self

    def to_semigroup(self) -> NumericalSemigroup:
        C = self.semigroup.conductor
        return NumericalSemigroup(x for x in range(1, C) if not self.mask >> x & 1)


def _shift_sum(a: int, b: int, conductor: int) -> int:
    """Small part of A + B for masks over [0, conductor)."""
    full = (1 << conductor) - 1
    out = 0
    for x in _bits(a):
        out |= b << x
    return out & full


def _same_ambient(I: NormalizedIdeal, J: NormalizedIdeal) -> None:
    if I.semigroup != J.semigroup:
        raise AmbientMismatch(
            f"ideals live in different semigroups: {I.semigroup.angle()} vs {J.semigroup.angle()}"
        )


def ideal_from_generators(S: NumericalSemigroup, gens: Iterable[int]) -> NormalizedIdeal:
    """The ideal gens + S; ``gens`` must contain 0 and may be redundant."""
    gens = set(int(g) for g in gens)
    if 0 not in gens:
        raise SemigroupError("generators of a normalized ideal must include 0")
    if min(gens) < 0:
        raise SemigroupError("generators must be non-negative")
    mask = 0
    for g in gens:
        mask |= S.mask << g
    return NormalizedIdeal(S, mask, check=False)


def principal(S: NumericalSemigroup) -> NormalizedIdeal:
    """S viewed as an element of its own ideal monoid (the identity)."""
    return NormalizedIdeal(S, S.mask, check=False)


def minimal_generators(I: NormalizedIdeal) -> tuple[int, ...]:
    return I.min_generators


def remove_element(I: NormalizedIdeal, x: int) -> NormalizedIdeal:
    """I ∖ {x}; only an ideal when x is a nonzero minimal generator of I."""
    if x == 0 or x not in I:
        raise SemigroupError(f"{x} is not a nonzero element of the ideal")
    if x not in I.min_generators:
        raise NotMinimalGenerator(f"{x} is not a minimal generator of {{{I.label}}}+S")
    return NormalizedIdeal(I.semigroup, I.mask & ~(1 << x), check=False)


def add_ideals(I: NormalizedIdeal, J: NormalizedIdeal) -> NormalizedIdeal:
    _same_ambient(I, J)
    S = I.semigroup
    return NormalizedIdeal(S, _shift_sum(I.mask, J.mask, S.conductor), check=False)


def enumerate_normalized_ideals(S: NumericalSemigroup, limit: int | None = None) -> list[NormalizedIdeal]:
    """All normalized ideals of S, one per antichain of (G(S), ≤_S).

    Antichains are grown in increasing gap order, so S itself comes first and
    the output order is deterministic.  Raises ResourceLimit when more than
    ``limit`` ideals would be produced.
    """
    gaps = S.gaps
    full = (1 << S.conductor) - 1
    up = [(S.mask << g) & full for g in gaps]
    out: list[NormalizedIdeal] = []

    def walk(start: int, mask: int) -> None:
        if limit is not None and len(out) >= limit:
            raise ResourceLimit(f"more than {limit} normalized ideals")
        out.append(NormalizedIdeal(S, mask, check=False))
        for k in range(start, len(gaps)):
            # gaps are visited in increasing order, so gaps[k] is comparable to a
            # chosen gap iff it already lies in the generated ideal
            if not mask >> gaps[k] & 1:
                walk(k + 1, mask | up[k])

    walk(0, S.mask)
    return out


def covers_inclusion(I: NormalizedIdeal, J: NormalizedIdeal) -> bool:
    """True iff J ⊊ I and |I ∖ J| = 1."""
    return J < I and I.difference_size(J) == 1


def covered_count(I: NormalizedIdeal) -> int:
    """Number of normalized ideals covered by I under inclusion."""
    return len([g for g in I.min_generators if g])


def gap_ideals(S: NumericalSemigroup) -> list[NormalizedIdeal]:
    """The ideals {0, g} + S, one per gap g, in increasing gap order."""
    if S.is_naturals:
        raise EmptyForN("N has no gaps")
    return [ideal_from_generators(S, (0, g)) for g in S.gaps]


class InclusionPoset(AbstractPoset):
    """(𝔍₀(S), ⊆) with nodes labelled by their minimal generators."""

    def __init__(self, semigroup: NumericalSemigroup, ideals: list[NormalizedIdeal]):
        self.semigroup = semigroup
        self.ideals = list(ideals)
        masks = [I.mask for I in self.ideals]
        leq = [[a & ~b == 0 for b in masks] for a in masks]
        super().__init__([I.label for I in self.ideals], leq)


def build_inclusion_poset(S: NumericalSemigroup, limit: int | None = None) -> InclusionPoset:
    return InclusionPoset(S, enumerate_normalized_ideals(S, limit))


def recover_from_inclusion_poset(P: AbstractPoset) -> NumericalSemigroup:
    """Recover S from any poset isomorphic to (𝔍₀(S), ⊆).

    The ideals {0, g} + S are exactly the nodes covering a single node; under
    reversed inclusion they form a copy of the gap poset, which is handed to
    :func:`reconstruct`.  The answer is validated by rebuilding its inclusion
    poset.
    """
    n = len(P)
    if n == 0:
        raise NotAnInclusionPoset("the empty poset has no bottom element")
    covered = np.zeros(n, dtype=int)
    for _, upper in P.covers:
        covered[upper] += 1
    principal_nodes = [i for i in range(n) if covered[i] == 1]
    try:
        S = reconstruct(P.induced(principal_nodes).reversed())
    except NotAGapPoset as exc:
        raise NotAnInclusionPoset(f"nodes covering one node do not form a gap poset: {exc}") from exc
    try:
        Q = build_inclusion_poset(S, limit=n)
    except ResourceLimit:
        Q = None
    if Q is None or len(Q) != n or find_poset_isomorphism(Q, P) is None:
        raise NotAnInclusionPoset(f"inclusion poset of {S.angle()} is not isomorphic to the input")
    return S
