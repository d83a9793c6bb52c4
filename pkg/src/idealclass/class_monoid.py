"""The ideal class monoid (𝔍₀(S), +) and recovery of S from its Cayley table.

Monoids are handled as Cayley tables of element indices.  The concrete
:class:`IdealClassMonoid` additionally remembers the ideal behind each index.
Every structural query (⪯, quarks, irreducibles, idempotents, the C_E and
T↓ substructures) works on the bare table, so it applies equally to a table
read from disk.
"""
from __future__ import annotations

from functools import cached_property, reduce
from typing import Sequence

import numpy as np

from . import _iso
from .errors import (
    AbstractOnly,
    MalformedTable,
    NotAClassMonoid,
    NotAGapSet,
    NotIdempotent,
    NotNested,
    ResourceLimit,
)
from .ideals import NormalizedIdeal, enumerate_normalized_ideals
from .semigroup import NATURALS, NumericalSemigroup, intersect

__all__ = [
    "AbstractMonoid",
    "IdealClassMonoid",
    "build_class_monoid",
    "preceq_matrix",
    "quarks",
    "irreducibles",
    "idempotents",
    "as_over_semigroups",
    "unitary_extension_elements",
    "sub_C_E",
    "sub_T_down",
    "slice_monoid",
    "generated_submonoid",
    "find_monoid_isomorphism",
    "monoid_isomorphic",
    "genus_of_abstract",
    "recover_from_abstract_monoid",
]


class AbstractMonoid:
    """Finite commutative monoid given by its Cayley table.

    The identity is discovered, not assumed to be index 0.  ``members`` is
    set on submonoids and records, for each local index, the index of the
    same element in the monoid it was cut out of.
    """

    def __init__(self, table, members: Sequence[int] | None = None, check: bool = True):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise MalformedTable(f"table must be a non-empty square matrix, got shape {table.shape}")
        table.setflags(write=False)
        self.table = table
        self.members = None if members is None else tuple(members)
        if check:
            self._validate()
        self.identity = self._find_identity()

    def __len__(self):
        return self.table.shape[0]

    def __repr__(self):
        return f"{type(self).__name__}(size={len(self)})"

    def _validate(self) -> None:
        T = self.table
        n = len(self)
        if T.min() < 0 or T.max() >= n:
            i, j = map(int, np.argwhere((T < 0) | (T >= n))[0])
            raise MalformedTable(f"entry ({i}, {j}) = {T[i, j]} is not an element index")
        bad = np.argwhere(T != T.T)
        if len(bad):
            i, j = map(int, bad[0])
            raise MalformedTable(f"not commutative: {i}+{j}={T[i, j]} but {j}+{i}={T[j, i]}")
        left = T[T]  # left[a, b, c] = (a+b)+c
        right = T[np.arange(n)[:, None, None], T[None, :, :]]  # a+(b+c)
        bad = np.argwhere(left != right)
        if len(bad):
            a, b, c = map(int, bad[0])
            raise MalformedTable(f"not associative on the triple ({a}, {b}, {c})")
        if self._find_identity() is None:
            raise MalformedTable("no identity element")

    def _find_identity(self) -> int | None:
        rows = np.all(self.table == np.arange(len(self))[None, :], axis=1)
        hits = np.flatnonzero(rows)
        return int(hits[0]) if len(hits) else None

    def add(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def preceq(self) -> np.ndarray:
        """``preceq[a, b]`` iff a + c = b for some c."""
        n = len(self)
        out = np.zeros((n, n), dtype=bool)
        for a in range(n):
            out[a, self.table[a]] = True
        out.setflags(write=False)
        return out

    def relabeled(self, perm: Sequence[int]) -> AbstractMonoid:
        """Copy in which old element ``k`` becomes new element ``perm[k]``."""
        perm = np.asarray(perm)
        inv = np.argsort(perm)
        return AbstractMonoid(perm[self.table[np.ix_(inv, inv)]], check=False)

    def to_abstract(self) -> AbstractMonoid:
        return AbstractMonoid(self.table, check=False)


class IdealClassMonoid(AbstractMonoid):
    """(𝔍₀(S), +) with index 0 the identity S."""

    def __init__(self, semigroup: NumericalSemigroup, elements: list[NormalizedIdeal]):
        self.semigroup = semigroup
        self.elements = list(elements)
        index = {I.mask: k for k, I in enumerate(self.elements)}
        table = [[index[(I + J).mask] for J in self.elements] for I in self.elements]
        super().__init__(table, check=False)

    def labels(self) -> list[str]:
        return [I.label for I in self.elements]


def build_class_monoid(S: NumericalSemigroup, limit: int | None = None) -> IdealClassMonoid:
    return IdealClassMonoid(S, enumerate_normalized_ideals(S, limit))


def preceq_matrix(M: AbstractMonoid) -> np.ndarray:
    return M.preceq


def quarks(M: AbstractMonoid) -> list[int]:
    """Non-identity x with no y ∉ {x, identity} such that y ⪯ x."""
    e = M.identity
    P = M.preceq
    n = len(M)
    return [x for x in range(n) if x != e and not any(P[y, x] for y in range(n) if y not in (x, e))]


def irreducibles(M: AbstractMonoid) -> list[int]:
    """Non-identity x that are not a sum of two elements both different from x."""
    T = M.table
    n = len(M)
    out = []
    for x in range(n):
        if x == M.identity:
            continue
        others = [y for y in range(n) if y != x]
        if not (T[np.ix_(others, others)] == x).any():
            out.append(x)
    return out


def idempotents(M: AbstractMonoid) -> list[int]:
    return [x for x in range(len(M)) if M.table[x, x] == x]


def as_over_semigroups(M: AbstractMonoid) -> list[NumericalSemigroup]:
    """The idempotents of a concrete class monoid, read as over-semigroups of S."""
    if not isinstance(M, IdealClassMonoid):
        raise AbstractOnly("only a monoid built from a semigroup has concrete elements")
    return [M.elements[x].to_semigroup() for x in idempotents(M)]


def unitary_extension_elements(M: AbstractMonoid) -> list[int]:
    idem = set(idempotents(M))
    return [x for x in quarks(M) if x in idem]


def _restrict(M: AbstractMonoid, members: list[int]) -> AbstractMonoid:
    local = {x: k for k, x in enumerate(members)}
    sub = M.table[np.ix_(members, members)]
    try:
        table = [[local[int(v)] for v in row] for row in sub]
    except KeyError as exc:
        raise MalformedTable(f"subset is not closed: produces {exc.args[0]}") from None
    return AbstractMonoid(table, members=members, check=False)


def _require_idempotent(M: AbstractMonoid, E: int) -> None:
    if M.table[E, E] != E:
        raise NotIdempotent(f"element {E} is not idempotent")


def sub_C_E(M: AbstractMonoid, E: int) -> AbstractMonoid:
    """{x : x + E = x}, a monoid with identity E (not a submonoid unless E is the identity)."""
    _require_idempotent(M, E)
    return _restrict(M, [x for x in range(len(M)) if M.table[x, E] == x])


def sub_T_down(M: AbstractMonoid, T: int) -> AbstractMonoid:
    """{x : x + T = T}, a submonoid sharing the identity of M."""
    _require_idempotent(M, T)
    return _restrict(M, [x for x in range(len(M)) if M.table[x, T] == T])


def slice_monoid(M: AbstractMonoid, T: int, T2: int) -> AbstractMonoid:
    """T2↓ ∩ C_T for idempotents with T + T2 = T2; its identity is T."""
    _require_idempotent(M, T)
    _require_idempotent(M, T2)
    if M.table[T, T2] != T2:
        raise NotNested(f"{T} + {T2} != {T2}")
    tab = M.table
    return _restrict(M, [x for x in range(len(M)) if tab[x, T2] == T2 and tab[x, T] == x])


def generated_submonoid(M: AbstractMonoid, gens: Sequence[int]) -> set[int]:
    seen = {M.identity}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = M.add(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _power_index(M: AbstractMonoid, x: int) -> int:
    """Number of steps until x, 2x, 3x, ... first repeats."""
    seen = {}
    y = x
    k = 0
    while y not in seen:
        seen[y] = k
        y = M.add(y, x)
        k += 1
    return k


def _element_invariants(M: AbstractMonoid) -> list[tuple]:
    P = M.preceq
    down = P.sum(axis=0)
    up = P.sum(axis=1)
    idem = set(idempotents(M))
    qs = set(quarks(M))
    irr = set(irreducibles(M))
    stab = (M.table == np.arange(len(M))[:, None]).sum(axis=1)
    return [
        (
            int(x == M.identity),
            int(x in idem),
            int(x in qs),
            int(x in irr),
            int(down[x]),
            int(up[x]),
            int(stab[x]),
            _power_index(M, x),
        )
        for x in range(len(M))
    ]


def _monoid_signature(M: AbstractMonoid):
    rows = M.table.tolist()

    def sig(colors, a):
        return tuple(sorted((colors[b], colors[c]) for b, c in enumerate(rows[a])))

    return sig


def find_monoid_isomorphism(A: AbstractMonoid, B: AbstractMonoid) -> list[int] | None:
    """A table-preserving bijection A → B as an index list, or None."""
    if len(A) != len(B):
        return None
    TA, TB = A.table, B.table

    def accept(f):
        f = np.asarray(f)
        return np.array_equal(f[TA], TB[np.ix_(f, f)])

    return _iso.find_isomorphism(
        _element_invariants(A), _element_invariants(B),
        _monoid_signature(A), _monoid_signature(B), accept,
    )


def monoid_isomorphic(A: AbstractMonoid, B: AbstractMonoid) -> bool:
    return find_monoid_isomorphism(A, B) is not None


def genus_of_abstract(M: AbstractMonoid) -> int:
    """Longest strictly ascending ⪯-chain, counted in elements, minus one."""
    P = M.preceq
    n = len(M)
    strict = P & ~np.eye(n, dtype=bool)
    if (strict & strict.T).any():
        raise NotAClassMonoid("⪯ is not antisymmetric")
    down = P.sum(axis=0)
    longest = [1] * n
    for b in sorted(range(n), key=lambda x: down[x]):
        below = np.flatnonzero(strict[:, b])
        if len(below):
            longest[b] = 1 + max(longest[a] for a in below)
    return max(longest) - 1


def recover_from_abstract_monoid(M: AbstractMonoid) -> NumericalSemigroup:
    """The unique S with (𝔍₀(S), +) isomorphic to ``M``.

    Induction on the genus: idempotent quarks are the unitary extensions of
    S, each recovered from its C_E.  With two or more of them S is their
    intersection; with exactly one, S is irreducible and its Frobenius number
    is 2g - 1 (one quark, symmetric) or 2g - 2 (two quarks, pseudo-symmetric),
    which is removed from the unique extension.  The result is checked by
    rebuilding its class monoid.
    """
    n = len(M)
    S = _recover(M, tuple(range(n)), {})
    try:
        rebuilt = build_class_monoid(S, limit=n)
    except ResourceLimit:
        rebuilt = None
    if rebuilt is None or len(rebuilt) != n or find_monoid_isomorphism(rebuilt, M) is None:
        raise NotAClassMonoid(f"class monoid of {S.angle()} is not isomorphic to the input")
    return S


def _recover(M: AbstractMonoid, top: tuple[int, ...], memo: dict) -> NumericalSemigroup:
    # ``top`` maps local indices to indices of the outermost table, so the same
    # C_E reached along different paths is solved once
    key = frozenset(top)
    if key in memo:
        return memo[key]
    if len(M) == 1:
        memo[key] = NATURALS
        return NATURALS
    g = genus_of_abstract(M)
    ext = unitary_extension_elements(M)
    if not ext:
        raise NotAClassMonoid("no idempotent quark, so no unitary extension")
    overs = []
    for E in ext:
        sub = sub_C_E(M, E)
        O = _recover(sub, tuple(top[x] for x in sub.members), memo)
        if O.genus != g - 1:
            raise NotAClassMonoid(f"unitary extension has genus {O.genus}, expected {g - 1}")
        overs.append(O)
    if len(set(overs)) != len(overs):
        raise NotAClassMonoid("two idempotent quarks recover the same extension")
    if len(overs) >= 2:
        S = reduce(intersect, overs)
    else:
        q = len(quarks(M))
        if q == 1:
            F = 2 * g - 1
        elif q == 2:
            F = 2 * g - 2
        else:
            raise NotAClassMonoid(f"single idempotent quark but {q} quarks")
        (O,) = overs
        if F <= O.frobenius:
            raise NotAClassMonoid(f"Frobenius candidate {F} does not exceed F of the extension")
        try:
            S = O.without_element(F)
        except NotAGapSet as exc:
            raise NotAClassMonoid(str(exc)) from None
    if S.genus != g:
        raise NotAClassMonoid(f"recovered genus {S.genus}, expected {g}")
    memo[key] = S
    return S
