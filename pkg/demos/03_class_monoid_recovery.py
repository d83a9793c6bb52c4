"""The ideal class monoid of ⟨4,5,6,7⟩, its distinguished elements, and recovery."""
import random

from idealclass import (
    build_class_monoid,
    from_generators,
    genus_of_abstract,
    idempotents,
    irreducibles,
    quarks,
    recover_from_abstract_monoid,
)

S = from_generators([4, 5, 6, 7])
M = build_class_monoid(S)
labels = M.labels()
print(f"{S.angle()} has {len(M)} ideal classes")
print("idempotents:", [labels[i] for i in idempotents(M)])
print("quarks:     ", [labels[i] for i in quarks(M)])
print("irreducibles:", [labels[i] for i in irreducibles(M)])
print("genus read off the ⪯ order:", genus_of_abstract(M))

perm = list(range(len(M)))
random.Random(1).shuffle(perm)
table = M.relabeled(perm).to_abstract()
print("shuffled Cayley table:")
for row in table.table:
    print("  ", " ".join(str(x) for x in row))
T = recover_from_abstract_monoid(table)
print("recovered:", T.angle())
assert T == S
