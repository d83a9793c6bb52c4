"""Recover S from the inclusion order on its normalized ideals."""
import random

from idealclass import build_inclusion_poset, from_generators, recover_from_inclusion_poset

for gens in ([3, 4, 5], [4, 6, 9], [2, 7]):
    S = from_generators(gens)
    P = build_inclusion_poset(S)
    print(f"{S.angle()}: {len(P)} ideals, covers:")
    for i, j in sorted(P.covers):
        print(f"   {P.elements[i]:>10}  ⊂  {P.elements[j]}")
    perm = list(range(len(P)))
    random.Random(len(P)).shuffle(perm)
    T = recover_from_inclusion_poset(P.relabeled(perm).erase_labels())
    print("   recovered from the unlabeled poset:", T.angle())
    assert T == S
