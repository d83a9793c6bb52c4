"""Colour refinement plus individualisation, shared by the poset and monoid isomorphism tests.

Both structures are handled the same way: each side gets an initial colouring
from cheap invariants, colours are refined jointly (so colour ids are
comparable across the two sides) until stable, and remaining ambiguity is
resolved by backtracking over the smallest non-trivial colour class.
"""
from __future__ import annotations

from collections import Counter
from typing import Callable, Hashable, Sequence

Signature = Callable[[Sequence[int], int], Hashable]


def _refine(ca, cb, sig_a: Signature, sig_b: Signature):
    while True:
        ka = [(ca[x], sig_a(ca, x)) for x in range(len(ca))]
        kb = [(cb[x], sig_b(cb, x)) for x in range(len(cb))]
        ids = {k: i for i, k in enumerate(sorted(set(ka) | set(kb)))}
        na = [ids[k] for k in ka]
        nb = [ids[k] for k in kb]
        if Counter(na) != Counter(nb):
            return None
        if len(ids) == len(set(ca) | set(cb)):
            return na, nb
        ca, cb = na, nb


def _initial(inv_a, inv_b):
    ids = {k: i for i, k in enumerate(sorted(set(inv_a) | set(inv_b)))}
    return [ids[k] for k in inv_a], [ids[k] for k in inv_b]


def find_isomorphism(
    inv_a: Sequence[Hashable],
    inv_b: Sequence[Hashable],
    sig_a: Signature,
    sig_b: Signature,
    accept: Callable[[list[int]], bool],
) -> list[int] | None:
    """Return a bijection ``f`` (as a list, ``f[x]`` in B) accepted by ``accept``, or None.

    ``inv_*`` are sortable isomorphism invariants per element, ``sig_*`` map
    a colouring and an element to a signature that must be preserved by any
    isomorphism.
    """
    if len(inv_a) != len(inv_b):
        return None
    if Counter(inv_a) != Counter(inv_b):
        return None
    if not inv_a:
        return [] if accept([]) else None
    ca, cb = _initial(inv_a, inv_b)
    return _search(ca, cb, sig_a, sig_b, accept)


def _search(ca, cb, sig_a, sig_b, accept):
    refined = _refine(ca, cb, sig_a, sig_b)
    if refined is None:
        return None
    ca, cb = refined
    sizes = Counter(ca)
    if all(v == 1 for v in sizes.values()):
        where = {c: y for y, c in enumerate(cb)}
        f = [where[c] for c in ca]
        return f if accept(f) else None
    target = min((v, c) for c, v in sizes.items() if v > 1)[1]
    x = ca.index(target)
    fresh = max(sizes) + 1
    for y in (y for y, c in enumerate(cb) if c == target):
        na = list(ca)
        nb = list(cb)
        na[x] = fresh
        nb[y] = fresh
        f = _search(na, nb, sig_a, sig_b, accept)
        if f is not None:
            return f
    return None
