"""Where the monoid order ⪯ parts ways with inclusion, and a monoid that no semigroup owns."""
from idealclass import (
    NotAClassMonoid,
    build_class_monoid,
    from_generators,
    genus_of_abstract,
    ideal_from_generators,
    irreducibles,
    recover_from_abstract_monoid,
    slice_monoid,
)

S = from_generators([5, 9, 17, 21])
M = build_class_monoid(S)
I = M.elements.index(ideal_from_generators(S, [0, 3]))
J = M.elements.index(ideal_from_generators(S, [0, 12]))
print(f"{S.angle()}: {len(M)} ideals")
print("J ⪯ I:", bool(M.preceq[J, I]))
between = [K for K in range(len(M)) if K not in (I, J) and M.preceq[J, K] and M.preceq[K, I]]
print("elements strictly between them under ⪯:", between)
print("yet I∖J has", M.elements[I].difference_size(M.elements[J]), "elements")

S = from_generators([4, 6, 9])
M = build_class_monoid(S)
i1 = M.elements.index(ideal_from_generators(S, [0, 7]))
i2 = M.elements.index(ideal_from_generators(S, [0, 2, 3, 5]))
sl = slice_monoid(M, i1, i2)
print()
print(f"slice between {M.labels()[i1]} and {M.labels()[i2]} in {S.angle()}:")
print("  size", len(sl), "| ⪯-height", genus_of_abstract(sl) + 1, "| irreducibles", len(irreducibles(sl)))
try:
    recover_from_abstract_monoid(sl.to_abstract())
except NotAClassMonoid as exc:
    print("  not the class monoid of any numerical semigroup:", exc)
