"""Coset classes of a wide subgroupoid and the coset-space action groupoid."""
from __future__ import annotations

from slicegroupoids import (
    SubgroupoidSelection,
    action_groupoid,
    coset_action_groupoid,
    cyclic_group,
    projection,
    sliced_coset_groupoid,
)
from slicegroupoids.coset import check_rho_H_laws, projection_checks

Z4 = cyclic_group(4)
H = SubgroupoidSelection(Z4, {Z4.morphism("e"), Z4.morphism("a2")}, "Even")

# %% The classes are the right cosets {h . g}
C = coset_action_groupoid(Z4, H)
for i, c in enumerate(C.relation.classes):
    print(C.relation.label(i), "=", [Z4.mname(g) for g in c.members])
print("rho is a contravariant functor:", bool(check_rho_H_laws(C.relation)))
print(C.groupoid.n_objects, "objects,", C.groupoid.n_morphisms, "morphisms")

# %% The projection from G//G hits every morphism and lifts at every object.
# It is not full hom-set by hom-set once H has a non-identity arrow: Hom(e, e) has one
# element upstairs and two downstairs here.
A = action_groupoid(Z4)
for name, v in projection_checks(A, C).items():
    print(f"  {name}: {bool(v)}")
P = projection(A, C)
print("pi sends", A.groupoid.mname(0), "to", C.groupoid.mname(P(0)))

# %% Slicing over the one object keeps every class here
sc = sliced_coset_groupoid(Z4, H, "o")
print("sliced coset groupoid:", sc.groupoid.n_objects, "objects,", sc.groupoid.n_morphisms, "morphisms")
