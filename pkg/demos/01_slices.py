"""Slice groupoids: every pair of arrows into X is joined by exactly one triangle.

Run with ``python3 demos/01_slices.py``.
"""
from __future__ import annotations

from slicegroupoids import cyclic_group, pair_groupoid, slice_compose, slice_groupoid, slice_hom, zero_object

# %% A two-object groupoid sliced over one of its objects
P = pair_groupoid(2)
S = slice_groupoid(P, "O1")
print(S)
for m in S.morphisms():
    print(f"  {S.groupoid.mname(m.id):28s} carried by {P.mname(m.underlying)}")

# %% Over Z/4 the slice has four objects and sixteen triangles, one per ordered pair
Z4 = cyclic_group(4)
S4 = slice_groupoid(Z4, "o")
print(S4, "morphisms:", S4.groupoid.n_morphisms)
t1 = slice_hom(S4, "a", "a2")
t2 = slice_hom(S4, "a2", "a3")
print("a -> a2 then a2 -> a3 is", S4.groupoid.mname(slice_compose(S4, t1, t2).id))

# %% The identity at the apex is a zero object: one arrow in from everything, one arrow out
z = zero_object(S4)
print("zero object:", Z4.mname(z.object))
for g, m in z.incoming.items():
    print(f"  {Z4.mname(g)} -> e carried by {Z4.mname(m.underlying)}")
