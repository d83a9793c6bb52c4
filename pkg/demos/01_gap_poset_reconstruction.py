"""Rebuild a numerical semigroup from the bare shape of its gap poset.

We take S = {0,5,7,10,11,12} ∪ (14+ℕ), build the poset of its gaps under
a ≤_S b (b - a ∈ S), scramble the labels, and recover S from the shape alone.
"""
import random

from idealclass import build_gap_poset, from_gaps, hasse_covers, nd_profile, reconstruct

S = from_gaps([1, 2, 3, 4, 6, 8, 9, 13])
print("start:", S.describe())

P = build_gap_poset(S)
print("Hasse edges:", [(P.elements[i], P.elements[j]) for i, j in hasse_covers(P)])

# forget which node is which gap
perm = list(range(len(P)))
random.Random(0).shuffle(perm)
anonymous = P.relabeled(perm).erase_labels()

prof = nd_profile(anonymous)
print("down-set sizes (sorted):", prof.multiset())
print("distinct values, one per run of consecutive gaps:", prof.values)

T = reconstruct(anonymous)
print("recovered:", T.set_notation())
assert T == S
