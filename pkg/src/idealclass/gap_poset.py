"""Finite posets, the gap poset (G(S), ≤_S), and recovering S from it.

``a ≤_S b`` means ``b - a ∈ S``.  For a gap h, the number of gaps below h
(h included) is written ``nd(h)``; it equals ``|S ∩ [0, h]|`` and is constant
exactly on the maximal intervals of consecutive gaps ("deserts").  Knowing
nd on an abstract copy of the gap poset is enough to rebuild S, which is
what :func:`reconstruct` does.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import groupby
from typing import Hashable, Iterable, Sequence

import numpy as np

from . import _iso
from .errors import EmptyPoset, NotAGapPoset, NotAGapSet, NotAPoset
from .semigroup import NATURALS, NumericalSemigroup

__all__ = [
    "AbstractPoset",
    "GapPoset",
    "NdProfile",
    "build_gap_poset",
    "nd_profile",
    "reconstruct",
    "find_poset_isomorphism",
    "poset_isomorphic",
    "hasse_covers",
    "component_count",
    "minimals",
]


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a square boolean matrix (Warshall)."""
    rel = np.array(rel, dtype=bool)
    np.fill_diagonal(rel, True)
    for k in range(rel.shape[0]):
        rel |= np.outer(rel[:, k], rel[k, :])
    return rel


class AbstractPoset:
    """Finite partial order on ``elements``; ``leq[i, j]`` means element i ≤ element j.

    The relation is validated at construction (reflexive, antisymmetric,
    transitive).  Use :meth:`from_pairs` to build one from a generating
    relation.
    """

    def __init__(self, elements: Sequence[Hashable], leq):
        self.elements = tuple(elements)
        n = len(self.elements)
        leq = np.array(leq, dtype=bool).reshape(n, n)
        leq.setflags(write=False)
        self.leq = leq
        self._validate()

    def _validate(self) -> None:
        leq = self.leq
        n = len(self)
        if n and not leq.diagonal().all():
            raise NotAPoset("relation is not reflexive")
        both = leq & leq.T
        both[np.diag_indices(n)] = False
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise NotAPoset(f"antisymmetry fails for {self.elements[i]!r} and {self.elements[j]!r}")
        if n and ((leq.astype(np.int64) @ leq.astype(np.int64) > 0) & ~leq).any():
            raise NotAPoset("relation is not transitive")

    @classmethod
    def from_pairs(cls, elements: Sequence[Hashable], pairs: Iterable[tuple[int, int]]) -> AbstractPoset:
        """Poset generated by index pairs ``(i, j)`` meaning i ≤ j (closure applied)."""
        n = len(elements)
        rel = np.zeros((n, n), dtype=bool)
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise NotAPoset(f"pair {(i, j)} out of range for {n} elements")
            rel[i, j] = True
        return cls(elements, transitive_closure(rel))

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"{type(self).__name__}(n={len(self)}, covers={len(self.covers)})"

    def __eq__(self, other):
        if not isinstance(other, AbstractPoset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.leq, other.leq)

    __hash__ = None

    def less(self, i: int, j: int) -> bool:
        return i != j and bool(self.leq[i, j])

    @cached_property
    def down_sizes(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.leq.sum(axis=0))

    @cached_property
    def up_sizes(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.leq.sum(axis=1))

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Index pairs (i, j) with i ⋖ j."""
        n = len(self)
        if not n:
            return []
        lt = self.leq.copy()
        np.fill_diagonal(lt, False)
        lt_i = lt.astype(np.int64)
        cov = lt & ~(lt_i @ lt_i > 0)
        return [(int(i), int(j)) for i, j in np.argwhere(cov)]

    def relabeled(self, perm: Sequence[int], elements: Sequence[Hashable] | None = None) -> AbstractPoset:
        """Copy in which old element ``k`` becomes new element ``perm[k]``."""
        n = len(self)
        inv = [0] * n
        for k, p in enumerate(perm):
            inv[p] = k
        leq = self.leq[np.ix_(inv, inv)]
        if elements is None:
            elements = [self.elements[k] for k in inv]
        return AbstractPoset(elements, leq)

    def erase_labels(self) -> AbstractPoset:
        return AbstractPoset([str(i) for i in range(len(self))], self.leq)

    def reversed(self) -> AbstractPoset:
        return AbstractPoset(self.elements, self.leq.T)

    def induced(self, indices: Sequence[int]) -> AbstractPoset:
        idx = list(indices)
        return AbstractPoset([self.elements[i] for i in idx], self.leq[np.ix_(idx, idx)])


class GapPoset(AbstractPoset):
    """(G(S), ≤_S), with the gaps themselves as element labels."""

    def __init__(self, semigroup: NumericalSemigroup):
        gaps = semigroup.gaps
        leq = [[b - a in semigroup for b in gaps] for a in gaps]
        self.semigroup = semigroup
        super().__init__(gaps, leq)


@dataclass(frozen=True)
class NdProfile:
    """Down-set sizes per element and their grouping into deserts.

    ``deserts`` lists element indices grouped by equal nd value, in increasing
    order of nd; ``values`` holds that nd value for each desert.
    """

    nd: tuple[int, ...]
    deserts: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]

    def multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.nd))


def build_gap_poset(S: NumericalSemigroup) -> GapPoset:
    if S.is_naturals:
        raise EmptyPoset("N has no gaps, so its gap poset is empty")
    return GapPoset(S)


def nd_profile(P: AbstractPoset) -> NdProfile:
    nd = P.down_sizes
    order = sorted(range(len(P)), key=lambda i: (nd[i], i))
    deserts = []
    values = []
    for v, grp in groupby(order, key=lambda i: nd[i]):
        deserts.append(tuple(grp))
        values.append(v)
    return NdProfile(nd, tuple(deserts), tuple(values))


def minimals(P: AbstractPoset) -> list[int]:
    return [i for i, d in enumerate(P.down_sizes) if d == 1]


def _semigroup_from_nd(values: Sequence[int], sizes: Sequence[int]) -> NumericalSemigroup:
    """Lay out deserts and element runs from nd values and desert sizes.

    Between desert i (nd value v_i) and desert i+1 sits the run of elements
    ``v_i + d, ..., v_{i+1} + d - 1`` where d counts the gaps with nd ≤ v_i.
    """
    if values[0] != 1:
        raise NotAGapPoset(f"minimal elements must have nd 1, smallest nd is {values[0]}")
    members = {0}
    d = sizes[0]
    for i in range(1, len(values)):
        members.update(range(values[i - 1] + d, values[i] + d))
        d += sizes[i]
    # the last desert ends right before the conductor
    conductor = len(members) + d
    return NumericalSemigroup(x for x in range(1, conductor) if x not in members)


def reconstruct(P: AbstractPoset) -> NumericalSemigroup:
    """The unique numerical semigroup whose gap poset is isomorphic to ``P``.

    Raises NotAGapPoset when no semigroup realises ``P``.
    """
    if len(P) == 0:
        return NATURALS
    prof = nd_profile(P)
    sizes = [len(d) for d in prof.deserts]
    try:
        S = _semigroup_from_nd(prof.values, sizes)
    except NotAGapSet as exc:
        raise NotAGapPoset(f"nd profile does not describe a semigroup: {exc}") from exc
    if S.multiplicity != len(minimals(P)) + 1:
        raise NotAGapPoset("multiplicity disagrees with the number of minimal elements")
    if find_poset_isomorphism(GapPoset(S), P) is None:
        raise NotAGapPoset(f"candidate {S.angle()} has a gap poset not isomorphic to the input")
    return S


def _poset_signature(P: AbstractPoset):
    n = len(P)
    lt = P.leq.copy()
    np.fill_diagonal(lt, False)
    below = [np.flatnonzero(lt[:, x]).tolist() for x in range(n)]
    above = [np.flatnonzero(lt[x, :]).tolist() for x in range(n)]

    def sig(colors, x):
        return (
            tuple(sorted(colors[y] for y in below[x])),
            tuple(sorted(colors[y] for y in above[x])),
        )

    return sig


def find_poset_isomorphism(P: AbstractPoset, Q: AbstractPoset) -> list[int] | None:
    """An order isomorphism P → Q as an index list, or None."""
    if len(P) != len(Q):
        return None
    inv_p = list(zip(P.down_sizes, P.up_sizes))
    inv_q = list(zip(Q.down_sizes, Q.up_sizes))

    def accept(f):
        return np.array_equal(P.leq, Q.leq[np.ix_(f, f)])

    return _iso.find_isomorphism(inv_p, inv_q, _poset_signature(P), _poset_signature(Q), accept)


def poset_isomorphic(P: AbstractPoset, Q: AbstractPoset) -> bool:
    return find_poset_isomorphism(P, Q) is not None


def hasse_covers(P: AbstractPoset) -> list[tuple[int, int]]:
    return list(P.covers)


def _components(n: int, edges: Iterable[tuple[int, int]]) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            count -= 1
    return count


def component_count(P: AbstractPoset) -> int:
    """Connected components of the undirected Hasse diagram."""
    if isinstance(P, GapPoset) and P.semigroup.is_naturals:
        raise EmptyPoset("N has no gaps")
    return _components(len(P), P.covers)
