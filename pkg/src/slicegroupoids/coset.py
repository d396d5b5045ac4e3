"""Coset spaces of a wide subgroupoid and their action groupoids.

For a wide subgroupoid ``H`` of ``G``, ``g ~ g'`` iff both share a source and
``g' == h . g`` for some ``h`` in ``H``.  The classes carry a right action of
``G`` by precomposition, ``[g] . f = [g . f]``, which gives ``(H:G)//G``.
The target of a class is deliberately not exposed: it is not well defined.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .action import (
    ActionGroupoid,
    action_groupoid,
    embed_slice_co,
    opposite,
    source_functor_action,
    source_functor_slice,
    translation_groupoid,
)
from .functor import (
    GroupoidFunctor,
    Verdict,
    check_full,
    check_lifts_at_every_object,
    check_surjective_on_morphisms,
    check_surjective_on_objects,
    compose_functors,
    functor_violations,
)
from .groupoid import Component, Groupoid, Ref, SubgroupoidSelection, full_subgroupoid
from .slice import slice_groupoid


@dataclass(frozen=True)
class CosetClass:
    representative: int  # smallest member id
    members: tuple[int, ...]
    source: int


class CosetRelation:
    def __init__(self, parent: Groupoid, sub: SubgroupoidSelection):
        self.parent = parent
        self.sub = sub
        G = parent
        class_of = np.full(G.n_morphisms, -1, dtype=np.int64)
        classes: list[CosetClass] = []
        by_source = {x: [h for h in G.out_of(x) if h in sub] for x in range(G.n_objects)}
        for g in range(G.n_morphisms):
            if class_of[g] >= 0:
                continue
            members = sorted({G.compose(h, g) for h in by_source[G.tgt(g)]})
            class_of[members] = len(classes)
            classes.append(CosetClass(g, tuple(members), G.src(g)))
        self.classes = classes
        self.class_of = class_of
        self.class_of.flags.writeable = False

    def __len__(self) -> int:
        return len(self.classes)

    def cls(self, g: Ref) -> int:
        return int(self.class_of[self.parent.morphism(g)])

    def label(self, c: int) -> str:
        return f"[{self.parent.mname(self.classes[c].representative)}]"

    def class_source(self, c: int) -> int:
        return self.classes[c].source

    def related(self, g: Ref, g2: Ref) -> bool:
        """Direct evaluation of the defining condition (independent of the class table)."""
        G = self.parent
        g, g2 = G.morphism(g), G.morphism(g2)
        if G.src(g) != G.src(g2):
            return False
        return any(G.compose(h, g) == g2 for h in G.hom(G.tgt(g), G.tgt(g2)) if h in self.sub)


def coset_relation(G: Groupoid, H: SubgroupoidSelection) -> CosetRelation:
    return CosetRelation(G, H)


def relation_matrix(rel: CosetRelation) -> np.ndarray:
    """Boolean ``m x m`` matrix of the relation, built from the definition."""
    G = rel.parent
    R = np.zeros((G.n_morphisms, G.n_morphisms), dtype=bool)
    for g in range(G.n_morphisms):
        for h in G.out_of(G.tgt(g)):
            if h in rel.sub:
                R[g, G.compose(h, g)] = True
    same_source = G.source[:, None] == G.source[None, :]
    return R & same_source


def check_equivalence(rel: CosetRelation) -> Verdict:
    """Reflexive, symmetric, transitive, and agreeing with the computed classes."""
    G = rel.parent
    R = relation_matrix(rel)
    if not R.diagonal().all():
        g = int(np.flatnonzero(~R.diagonal())[0])
        return Verdict(False, (G.mname(g),), "not reflexive")
    asym = np.argwhere(R != R.T)
    if len(asym):
        a, b = asym[0]
        return Verdict(False, (G.mname(a), G.mname(b)), "not symmetric")
    Ri = R.astype(np.int64)
    trans = np.argwhere(((Ri @ Ri) > 0) & ~R)
    if len(trans):
        a, b = trans[0]
        return Verdict(False, (G.mname(a), G.mname(b)), "not transitive")
    same_class = rel.class_of[:, None] == rel.class_of[None, :]
    diff = np.argwhere(same_class != R)
    if len(diff):
        a, b = diff[0]
        return Verdict(False, (G.mname(a), G.mname(b)), "classes disagree with the relation")
    return Verdict(True)


def check_class_sources(rel: CosetRelation) -> Verdict:
    for c in rel.classes:
        srcs = {rel.parent.src(g) for g in c.members}
        if srcs != {c.source}:
            return Verdict(False, tuple(rel.parent.mname(g) for g in c.members), "class members differ in source")
    return Verdict(True)


# -- the contravariant functor on classes --------------------------------


def rho_H_obj(rel: CosetRelation, x: Ref) -> list[int]:
    """Class indices ``[g]`` with ``source(g) == x``."""
    x = rel.parent.object(x)
    return [c for c, cls in enumerate(rel.classes) if cls.source == x]


def rho_H_map(rel: CosetRelation, g: Ref) -> dict[int, int]:
    """For ``g: X -> Y``, classes over ``Y`` to classes over ``X``: ``[f] -> [f . g]``."""
    G = rel.parent
    g = G.morphism(g)
    return {c: rel.cls(G.compose(rel.classes[c].representative, g)) for c in rho_H_obj(rel, G.tgt(g))}


def check_rho_H_laws(rel: CosetRelation) -> Verdict:
    """Well-defined on classes, identities act trivially, contravariant on composites."""
    G = rel.parent
    cls = rel.class_of
    later, earlier, comp = G.pair_arrays()
    # well-defined: [f . g] depends only on ([f], g)
    key = cls[later] * G.n_morphisms + earlier
    order = np.lexsort((cls[comp], key))
    k, v = key[order], cls[comp][order]
    clash = np.flatnonzero((k[1:] == k[:-1]) & (v[1:] != v[:-1]))
    if len(clash):
        i = order[clash[0]]
        return Verdict(False, (rel.label(int(cls[later[i]])), G.mname(int(earlier[i]))), "image depends on the representative")
    reps = np.array([c.representative for c in rel.classes], dtype=np.int64)
    sources = G.source[reps]
    for x in range(G.n_objects):
        over = np.flatnonzero(sources == x)
        if not np.array_equal(cls[G.compose_arrays(reps[over], np.full(len(over), G.identity(x)))], over):
            return Verdict(False, (G.mname(G.identity(x)),), "identity acts nontrivially")
    # contravariance: rho(g' . g)[c] == rho(g)[rho(g')[c]] for every class c over target(g')
    for c in range(len(rel.classes)):
        pos = np.flatnonzero(G.target[later] == sources[c])
        if not len(pos):
            continue
        gp, g = later[pos], earlier[pos]
        first = cls[G.compose_arrays(np.full(len(pos), reps[c]), gp)]
        two_step = cls[G.compose_arrays(reps[first], g)]
        direct = cls[G.compose_arrays(np.full(len(pos), reps[c]), comp[pos])]
        bad = np.flatnonzero(two_step != direct)
        if len(bad):
            i = pos[bad[0]]
            return Verdict(False, (G.mname(int(later[i])), G.mname(int(earlier[i]))), "not contravariant")
    return Verdict(True)


# -- the coset-space action groupoid -------------------------------------


class CosetActionGroupoid:
    """``(H:G)//G``: objects are classes, morphisms ``([g], f): [g] -> [g . f]``."""

    def __init__(self, rel: CosetRelation, validate: bool = True, limit: int | None = None):
        self.relation = rel
        G = rel.parent
        reps = np.array([c.representative for c in rel.classes], dtype=np.int64)
        sources = np.array([c.source for c in rel.classes], dtype=np.int64)
        self.groupoid, self.class_of_morphism, self.f_of, self._offsets, self._pos = translation_groupoid(
            f"({rel.sub.name}:{G.name})//{G.name}",
            [rel.label(c) for c in range(len(rel))],
            G,
            sources,
            lambda c, f: rel.class_of[G.compose_arrays(reps[c], f)],
            validate=validate,
            limit=limit,
        )

    def morphism_id(self, c: int, f: Ref) -> int:
        G = self.relation.parent
        f = G.morphism(f)
        if G.tgt(f) != self.relation.class_source(c):
            raise ValueError(f"({self.relation.label(c)},{G.mname(f)}) is not a morphism")
        return int(self._offsets[c] + self._pos[f])

    def __repr__(self) -> str:
        g = self.groupoid
        return f"<coset action groupoid {g.name}: {g.n_objects} objects, {g.n_morphisms} morphisms>"


def coset_action_groupoid(G: Groupoid, H: SubgroupoidSelection, validate: bool = True, limit: int | None = None) -> CosetActionGroupoid:
    return CosetActionGroupoid(coset_relation(G, H), validate=validate, limit=limit)


def projection(A: ActionGroupoid, C: CosetActionGroupoid) -> GroupoidFunctor:
    """``G//G -> (H:G)//G``: ``g -> [g]``, ``(g, f) -> ([g], f)``."""
    rel = C.relation
    mmap = C._offsets[rel.class_of[A.g_of]] + C._pos[A.f_of]
    return GroupoidFunctor(A.groupoid, C.groupoid, rel.class_of.copy(), mmap, name=f"pi_{rel.sub.name}")


def source_functor_coset(C: CosetActionGroupoid) -> GroupoidFunctor:
    """``(H:G)//G -> G``: ``[g] -> source(g)``, ``([g], f) -> inv(f)``."""
    G = C.relation.parent
    sources = [c.source for c in C.relation.classes]
    return GroupoidFunctor(C.groupoid, G, sources, G.inverses[C.f_of], name="s")


def is_isomorphism_to_action(C: CosetActionGroupoid, A: ActionGroupoid) -> Verdict:
    """With singleton classes, ``[g] <-> g`` must identify the two tables exactly."""
    rel = C.relation
    if any(len(c.members) != 1 for c in rel.classes):
        return Verdict(False, (), "classes are not singletons")
    obj = [c.representative for c in rel.classes]
    P = projection(A, C)
    if sorted(P.morphism_map.tolist()) != list(range(C.groupoid.n_morphisms)):
        return Verdict(False, (), "morphisms do not correspond one to one")
    g1, f1, h1 = A.groupoid.pair_arrays()
    mm = P.morphism_map
    if not np.array_equal(mm[h1], C.groupoid.compose_arrays(mm[g1], mm[f1])):
        return Verdict(False, (), "composition tables differ")
    if obj != list(range(A.groupoid.n_objects)):
        return Verdict(False, (), "object order differs")
    return Verdict(True)


# -- the sliced coset groupoid -------------------------------------------


@dataclass(frozen=True)
class SlicedCosetGroupoid:
    parent: CosetActionGroupoid
    component: Component  # full subgroupoid on the image classes
    functor: GroupoidFunctor  # pi_H . iota*_X

    @property
    def classes(self) -> tuple[int, ...]:
        return self.component.object_ids

    @property
    def groupoid(self) -> Groupoid:
        return self.component.groupoid


def sliced_coset_groupoid(G: Groupoid, H: SubgroupoidSelection, x: Ref, validate: bool = True) -> SlicedCosetGroupoid:
    """Full image of ``pi_H . iota*_X`` inside ``(H:G)//G``."""
    x = G.object(x)
    S = slice_groupoid(G, x, validate=validate)
    A = action_groupoid(G, validate=validate)
    C = CosetActionGroupoid(coset_relation(G, H), validate=validate)
    pix = compose_functors(projection(A, C), embed_slice_co(S, A), name=f"pi_{H.name}^{G.oname(x)}")
    objs = sorted(set(pix.object_map.tolist()))
    comp = full_subgroupoid(C.groupoid, objs, name=f"({H.name}:{G.name}/{G.oname(x)})//{G.name}")
    return SlicedCosetGroupoid(C, comp, pix)


def check_sliced(sc: SlicedCosetGroupoid) -> Verdict:
    """Connected, and every parent morphism between image classes is present."""
    sub = sc.groupoid
    if not sub.is_connected():
        return Verdict(False, (), "sliced coset groupoid is disconnected")
    P = sc.parent.groupoid
    inside = set(sc.classes)
    n_expected = sum(1 for m in P.morphisms if m.source in inside and m.target in inside)
    if n_expected != sub.n_morphisms:
        return Verdict(False, (), "not a full subgroupoid")
    return Verdict(True)


# -- source functors and the commuting diagram ---------------------------


@dataclass(frozen=True)
class DiagramReport:
    slice_source_is_functor: Verdict
    action_source_is_functor: Verdict
    coset_source_is_functor: Verdict
    left_triangle: Verdict  # s . iota*_X == s
    right_triangle: Verdict  # s . pi_H == s

    @property
    def holds(self) -> bool:
        return all(
            (self.slice_source_is_functor, self.action_source_is_functor, self.coset_source_is_functor,
             self.left_triangle, self.right_triangle)
        )


def _functor_verdict(F: GroupoidFunctor) -> Verdict:
    v = functor_violations(F)
    return Verdict(not v, tuple(str(x) for x in v[:1]))


def _equal(F1: GroupoidFunctor, F2: GroupoidFunctor) -> Verdict:
    if not np.array_equal(F1.object_map, F2.object_map):
        i = int(np.flatnonzero(F1.object_map != F2.object_map)[0])
        return Verdict(False, (F1.source.oname(i),), "object maps differ")
    if not np.array_equal(F1.morphism_map, F2.morphism_map):
        i = int(np.flatnonzero(F1.morphism_map != F2.morphism_map)[0])
        return Verdict(False, (F1.source.mname(i),), "morphism maps differ")
    return Verdict(True)


def source_functors_and_diagram(G: Groupoid, H: SubgroupoidSelection, x: Ref) -> DiagramReport:
    S = slice_groupoid(G, x)
    op = opposite(S.groupoid)
    A = action_groupoid(G)
    C = coset_action_groupoid(G, H)
    s_slice = source_functor_slice(S, op)
    s_action = source_functor_action(A)
    s_coset = source_functor_coset(C)
    iota_star = embed_slice_co(S, A, op)
    pi = projection(A, C)
    return DiagramReport(
        _functor_verdict(s_slice),
        _functor_verdict(s_action),
        _functor_verdict(s_coset),
        _equal(compose_functors(s_action, iota_star), s_slice),
        _equal(compose_functors(s_coset, pi), s_action),
    )


def projection_checks(A: ActionGroupoid, C: CosetActionGroupoid) -> dict[str, Verdict]:
    """Properties of ``pi_H``.

    ``full`` means every morphism ``([g], f)`` is hit (by ``(g, f)``); it
    holds for every ``H``, and so does lifting at every object.  Hom-set-wise
    fullness (``hom_set_full``) fails as soon as ``H`` has a non-identity
    morphism, so it is reported but callers should not expect it.
    """
    P = projection(A, C)
    return {
        "functor": _functor_verdict(P),
        "full": check_surjective_on_morphisms(P),
        "lifts_at_every_object": check_lifts_at_every_object(P),
        "surjective_on_objects": check_surjective_on_objects(P),
        "hom_set_full": check_full(P),
    }
