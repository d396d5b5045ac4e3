"""The action groupoid G//G and the two embeddings of each slice into it."""
from __future__ import annotations

from slicegroupoids import (
    action_groupoid,
    check_faithful,
    check_full,
    compose_functors,
    embeddings,
    pair_groupoid,
    slice_groupoid,
    source_functor_action,
    source_functor_slice,
)
from slicegroupoids.functor import check_injective_on_objects

P = pair_groupoid(2)
A = action_groupoid(P)
print(A)
for m in range(A.groupoid.n_morphisms):
    g, f = A.pair(m)
    print(f"  {A.groupoid.mname(m):22s} {P.mname(g)} -> {P.mname(P.compose(g, f))}")

# %% Both embeddings of P/O1 are injective on objects, full and faithful
for F in embeddings(P, "O1"):
    print(F.name, "contravariant" if F.contravariant else "covariant",
          bool(check_injective_on_objects(F)), bool(check_full(F)), bool(check_faithful(F)))

# %% The covariant embedding commutes with the source functors
_, iota_star = embeddings(P, "O1")
lhs = compose_functors(source_functor_action(A), iota_star)
rhs = source_functor_slice(slice_groupoid(P, "O1"), iota_star.source)
print("s . iota* == s:", lhs.morphism_map.tolist() == rhs.morphism_map.tolist())
