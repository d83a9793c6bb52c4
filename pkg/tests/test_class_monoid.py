import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idealclass import (
    AbstractMonoid,
    AbstractOnly,
    MalformedTable,
    NATURALS,
    NotAClassMonoid,
    NotIdempotent,
    NotNested,
    as_over_semigroups,
    build_class_monoid,
    enumerate_by_genus,
    find_monoid_isomorphism,
    from_generators,
    generated_submonoid,
    genus_of_abstract,
    ideal_from_generators,
    idempotents,
    irreducibles,
    monoid_isomorphic,
    over_semigroups,
    quarks,
    recover_from_abstract_monoid,
    slice_monoid,
    special_gaps,
    sub_C_E,
    sub_T_down,
    unitary_extension_elements,
    unitary_extensions,
    enumerate_normalized_ideals,
)

from oracles import Brute, brute_monoid_iso

S345 = from_generators([3, 4, 5])
S469 = from_generators([4, 6, 9])
S4567 = from_generators([4, 5, 6, 7])
CENSUS5 = enumerate_by_genus(5)


def idx(M, gens):
    return M.elements.index(ideal_from_generators(M.semigroup, gens))


def as_set(I, bound):
    return frozenset(x for x in range(bound) if x in I)


def shuffled(M, seed):
    perm = list(range(len(M)))
    random.Random(seed).shuffle(perm)
    return M.relabeled(perm), perm


def test_sizes():
    assert len(build_class_monoid(S345)) == 4
    assert len(build_class_monoid(S4567)) == 8
    assert len(build_class_monoid(NATURALS)) == 1


def test_table_axioms_and_brute_force():
    for S in CENSUS5:
        M = build_class_monoid(S)
        T = M.table
        n = len(M)
        assert M.identity == 0
        assert list(T[0]) == list(range(n))
        assert np.array_equal(T, T.T)
        assert all(T[T[a, b], c] == T[a, T[b, c]] for a in range(n) for b in range(n) for c in range(n))
        b = Brute(S.gaps)
        C = max(S.conductor, 1)
        for i, I in enumerate(M.elements):
            for j, J in enumerate(M.elements):
                assert as_set(M.elements[T[i, j]], C) == b.add(as_set(I, C), as_set(J, C))


def test_quarks():
    M = build_class_monoid(S345)
    assert sorted(quarks(M)) == sorted([idx(M, [0, 1]), idx(M, [0, 2])])
    M23 = build_class_monoid(from_generators([2, 3]))
    assert len(quarks(M23)) == 1
    for S in CENSUS5:
        M = build_class_monoid(S)
        assert set(quarks(M)) <= set(irreducibles(M))


def test_quark_counts_follow_symmetry_class():
    from idealclass import is_pseudo_symmetric, is_symmetric

    for S in enumerate_by_genus(6)[1:]:
        q = len(quarks(build_class_monoid(S)))
        if is_symmetric(S):
            assert q == 1
        elif is_pseudo_symmetric(S):
            assert q == 2


def test_irreducibles():
    M = build_class_monoid(S4567)
    assert len(irreducibles(M)) == 3
    assert M.identity not in irreducibles(M)
    for S in enumerate_by_genus(6):
        M = build_class_monoid(S)
        assert generated_submonoid(M, irreducibles(M)) == set(range(len(M)))


def test_irreducible_definitions_agree():
    # "not J + K with J, K ≺ I and J, K ≠ S" against "not J + K with J, K ≠ I"
    for S in CENSUS5:
        M = build_class_monoid(S)
        T, P, e = M.table, M.preceq, M.identity
        n = len(M)
        for x in range(n):
            if x == e:
                continue
            below = [y for y in range(n) if P[y, x] and y not in (x, e)]
            strict = not any(T[a, b] == x for a in below for b in below)
            assert strict == (x in irreducibles(M))


def test_idempotents_are_over_semigroups():
    M = build_class_monoid(S345)
    assert sorted(idempotents(M)) == sorted([0, idx(M, [0, 2]), idx(M, [0, 1, 2])])
    for S in enumerate_by_genus(6):
        M = build_class_monoid(S)
        assert M.identity in idempotents(M)
        assert sorted(as_over_semigroups(M)) == over_semigroups(S)
    with pytest.raises(AbstractOnly):
        as_over_semigroups(build_class_monoid(S345).to_abstract())


def test_unitary_extension_elements():
    M = build_class_monoid(S345)
    assert unitary_extension_elements(M) == [idx(M, [0, 2])]
    M23 = build_class_monoid(from_generators([2, 3]))
    assert [M23.elements[x].to_semigroup() for x in unitary_extension_elements(M23)] == [NATURALS]
    for S in enumerate_by_genus(6)[1:]:
        M = build_class_monoid(S)
        ext = unitary_extension_elements(M)
        assert len(ext) == len(special_gaps(S))
        assert sorted(M.elements[x].to_semigroup() for x in ext) == sorted(unitary_extensions(S))


def test_sub_C_E():
    M = build_class_monoid(S345)
    C = sub_C_E(M, 0)
    assert np.array_equal(C.table, M.table)
    E = idx(M, [0, 2])
    sub = sub_C_E(M, E)
    assert monoid_isomorphic(sub, build_class_monoid(from_generators([2, 3])))
    assert sub.identity == sub.members.index(E)
    with pytest.raises(NotIdempotent):
        sub_C_E(M, idx(M, [0, 1]))


def test_C_E_equals_ideals_of_E():
    for S in enumerate_by_genus(6):
        M = build_class_monoid(S)
        bound = max(S.conductor, 1)
        for E in idempotents(M):
            O = M.elements[E].to_semigroup()
            sub = sub_C_E(M, E)
            mine = {as_set(M.elements[x], bound) for x in sub.members}
            theirs = {as_set(I, bound) for I in enumerate_normalized_ideals(O)}
            assert mine == theirs


def test_sub_T_down():
    M = build_class_monoid(S469)
    top = [k for k, I in enumerate(M.elements) if I.mask == (1 << S469.conductor) - 1][0]
    assert sub_T_down(M, 0).members == (0,)
    assert sub_T_down(M, top).members == tuple(range(len(M)))
    for S in CENSUS5:
        M = build_class_monoid(S)
        for T in idempotents(M):
            down = set(sub_T_down(M, T).members)
            assert down == {x for x in range(len(M)) if M.elements[x] <= M.elements[T]}
            assert sub_T_down(M, T).identity == sub_T_down(M, T).members.index(M.identity)


def test_slice_monoid_example():
    M = build_class_monoid(S469)
    i1 = idx(M, [0, 7])
    i2 = idx(M, [0, 2, 3, 5])
    assert M.table[i1, i1] == i1 and M.table[i2, i2] == i2
    assert M.elements[i1] <= M.elements[i2]
    sl = slice_monoid(M, i1, i2)
    assert len(sl) == 8
    assert genus_of_abstract(sl) + 1 == 4
    assert len(irreducibles(sl)) == 4
    assert sl.members[sl.identity] == i1
    assert not monoid_isomorphic(sl, build_class_monoid(S4567))
    with pytest.raises(NotAClassMonoid):
        recover_from_abstract_monoid(sl.to_abstract())
    with pytest.raises(NotNested):
        slice_monoid(M, i2, i1)


def test_slice_monoid_trivial_cases():
    M = build_class_monoid(S469)
    top = [k for k, I in enumerate(M.elements) if I.mask == (1 << S469.conductor) - 1][0]
    assert slice_monoid(M, 0, 0).members == (0,)
    assert slice_monoid(M, 0, top).members == tuple(range(len(M)))


def test_monoid_isomorphism_examples():
    A = build_class_monoid(S345)
    assert not monoid_isomorphic(A, build_class_monoid(from_generators([2, 5])))
    assert monoid_isomorphic(A, A)
    f = find_monoid_isomorphism(A, A)
    assert all(f[A.table[a, b]] == A.table[f[a], f[b]] for a in range(4) for b in range(4))


def test_isomorphism_agrees_with_exhaustive_search():
    tables = [build_class_monoid(S) for S in enumerate_by_genus(4) if len(build_class_monoid(S)) <= 6]
    tables += [shuffled(M, 1)[0] for M in tables]
    for A in tables:
        for B in tables:
            assert monoid_isomorphic(A, B) == brute_monoid_iso(A.table.tolist(), B.table.tolist())


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(enumerate_by_genus(5)), st.randoms(use_true_random=False))
def test_isomorphisms_preserve_distinguished_elements(S, rnd):
    M = build_class_monoid(S)
    perm = list(range(len(M)))
    rnd.shuffle(perm)
    N = M.relabeled(perm)
    f = find_monoid_isomorphism(M, N)
    assert f is not None
    for fn in (quarks, irreducibles, idempotents, unitary_extension_elements):
        assert sorted(f[x] for x in fn(M)) == sorted(fn(N))
    # f(C_O) = C_f(O)
    for O in idempotents(M):
        assert sorted(f[x] for x in sub_C_E(M, O).members) == sorted(sub_C_E(N, f[O]).members)


def test_preceq_properties():
    witnessed_converse_failure = False
    for S in enumerate_by_genus(6):
        M = build_class_monoid(S)
        P = M.preceq
        n = len(M)
        assert P.diagonal().all()
        Pi = P.astype(int)
        assert not ((Pi @ Pi > 0) & ~P).any()
        for a in range(n):
            for b in range(n):
                sub = M.elements[a] <= M.elements[b]
                if P[a, b]:
                    assert sub
                elif sub:
                    witnessed_converse_failure = True
    assert witnessed_converse_failure


def test_preceq_cover_is_not_inclusion_cover():
    S = from_generators([5, 9, 17, 21])
    M = build_class_monoid(S)
    I = idx(M, [0, 3])
    J = idx(M, [0, 12])
    P = M.preceq
    assert P[J, I] and J != I
    assert not any(P[J, K] and P[K, I] for K in range(len(M)) if K not in (I, J))
    assert M.elements[I].difference_size(M.elements[J]) == 3


def test_genus_of_abstract():
    assert genus_of_abstract(build_class_monoid(NATURALS)) == 0
    assert genus_of_abstract(build_class_monoid(S4567)) == 3
    for S in enumerate_by_genus(6):
        assert genus_of_abstract(build_class_monoid(S)) == S.genus


def test_recover_examples():
    assert recover_from_abstract_monoid(shuffled(build_class_monoid(S345), 0)[0]) == S345
    assert recover_from_abstract_monoid(AbstractMonoid([[0]])) == NATURALS
    assert recover_from_abstract_monoid(shuffled(build_class_monoid(S469), 0)[0]) == S469
    S = from_generators([6, 7, 8, 11])  # not irreducible, SG = {9, 10}
    assert recover_from_abstract_monoid(shuffled(build_class_monoid(S), 0)[0]) == S


def test_recover_rejects_non_class_monoids():
    # Z/2: the identity is the only idempotent
    with pytest.raises(NotAClassMonoid):
        recover_from_abstract_monoid(AbstractMonoid([[0, 1], [1, 0]]))
    # subsets of {x, y} under union: two idempotent quarks, but genus 2 forces <3,4,5>
    union = [[a | b for b in range(4)] for a in range(4)]
    with pytest.raises(NotAClassMonoid):
        recover_from_abstract_monoid(AbstractMonoid(union))


def test_idempotent_chains_are_two_generated():
    # a chain of k+1 idempotents under max is the class monoid of <2, 2k+1>
    for k in range(1, 5):
        chain = [[max(a, b) for b in range(k + 1)] for a in range(k + 1)]
        assert recover_from_abstract_monoid(AbstractMonoid(chain)) == from_generators([2, 2 * k + 1])


def test_recover_round_trip_genus_5():
    for k, S in enumerate(CENSUS5):
        N, _ = shuffled(build_class_monoid(S), k)
        assert recover_from_abstract_monoid(N) == S


def test_monoid_rigidity_genus_5():
    ms = [build_class_monoid(S) for S in CENSUS5]
    for A, B in combinations(ms, 2):
        assert not monoid_isomorphic(A, B)


def test_malformed_tables():
    with pytest.raises(MalformedTable):
        AbstractMonoid([[0, 1], [0, 1]])  # not commutative
    with pytest.raises(MalformedTable):
        AbstractMonoid([[0, 1, 2], [1, 2, 0], [2, 0, 0]])  # no associativity
    with pytest.raises(MalformedTable):
        AbstractMonoid([[1, 1], [1, 1]])  # no identity
    with pytest.raises(MalformedTable):
        AbstractMonoid([[0, 5], [5, 0]])
    with pytest.raises(MalformedTable):
        AbstractMonoid(np.zeros((2, 3)))


def test_identity_need_not_be_index_zero():
    M = build_class_monoid(S345)
    N, perm = shuffled(M, 4)
    assert N.identity == perm[0]
