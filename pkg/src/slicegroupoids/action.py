"""The action groupoid of G acting on itself by precomposition, and slice embeddings.

Objects of ``G//G`` are the morphisms of ``G``.  A morphism ``(g, f)`` needs
``target(f) == source(g)`` and runs ``g -> g . f``.  Composition is
``(g', f') . (g, f) = (g, f . f')`` whenever ``g' == g . f``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .functor import GroupoidFunctor, Verdict
from .groupoid import Groupoid, Ref, check_size, from_array_table
from .slice import SliceGroupoid, slice_groupoid


def _in_lists(G: Groupoid) -> tuple[np.ndarray, np.ndarray]:
    """Padded per-object lists of incoming morphisms, and each morphism's position in its list."""
    width = max((len(G.into(x)) for x in range(G.n_objects)), default=0)
    inpad = np.full((G.n_objects, max(width, 1)), -1, dtype=np.int64)
    pos = np.empty(G.n_morphisms, dtype=np.int64)
    for x in range(G.n_objects):
        ids = G.into(x)
        inpad[x, : len(ids)] = ids
        pos[ids] = np.arange(len(ids))
    return inpad, pos


def translation_groupoid(
    name: str,
    labels: list[str],
    base: Groupoid,
    source_of: np.ndarray,
    act,
    validate: bool = True,
    limit: int | None = None,
):
    """Shared builder for ``G//G`` and ``(H:G)//G``.

    ``labels[i]`` names object ``i``, ``source_of[i]`` is its base source
    object, and ``act(objs, fs)`` returns the object reached from ``objs``
    along ``fs`` (vectorized).  Morphisms are ``(i, f)`` for every base ``f``
    into ``source_of[i]``, ordered by ``(i, f)``.
    """
    inpad, pos = _in_lists(base)
    counts = np.array([len(base.into(x)) for x in range(base.n_objects)], dtype=np.int64)[source_of]
    total = int(counts.sum())
    check_size(total, name, limit)
    offsets = np.concatenate([[0], np.cumsum(counts)[:-1]]).astype(np.int64)
    obj = np.repeat(np.arange(len(labels)), counts)
    k = np.arange(total) - offsets[obj]
    f = inpad[source_of[obj], k] if total else k
    cod = act(obj, f)

    # (obj, f) then (cod, f') = (obj, f . f'), with f' running over into(source f)
    fp = inpad[base.source[f]]  # (M, D)
    valid = fp >= 0
    fc = np.where(valid, fp, 0)
    ff = base.compose_arrays(f[:, None], fc) if total else fp
    table = np.where(valid, offsets[obj][:, None] + pos[np.where(valid, ff, 0)], -1)

    ident = offsets + pos[base.identities[source_of]]
    inv_f = base.inverses[f]
    inverses = offsets[cod] + pos[inv_f]
    mors = [(f"({labels[i]},{base.mname(int(x))})", int(i), int(c)) for i, x, c in zip(obj, f, cod)]
    G = from_array_table(name, labels, mors, table, ident, inverses, validate=validate)
    return G, obj, f, offsets, pos


class ActionGroupoid:
    """``G//G`` with the ``(g, f)`` decomposition of each morphism."""

    def __init__(self, base: Groupoid, validate: bool = True, limit: int | None = None):
        self.base = base
        labels = [m.name for m in base.morphisms]
        self.groupoid, self.g_of, self.f_of, self._offsets, self._pos = translation_groupoid(
            f"{base.name}//{base.name}",
            labels,
            base,
            base.source.copy(),
            lambda g, f: base.compose_arrays(g, f),
            validate=validate,
            limit=limit,
        )

    def morphism_id(self, g: Ref, f: Ref) -> int:
        g, f = self.base.morphism(g), self.base.morphism(f)
        if self.base.tgt(f) != self.base.src(g):
            raise ValueError(f"({self.base.mname(g)},{self.base.mname(f)}) is not a morphism of the action groupoid")
        return int(self._offsets[g] + self._pos[f])

    def pair(self, m: int) -> tuple[int, int]:
        return int(self.g_of[m]), int(self.f_of[m])

    def __repr__(self) -> str:
        return f"<action groupoid {self.groupoid.name}: {self.groupoid.n_objects} objects, {self.groupoid.n_morphisms} morphisms>"


def action_groupoid(G: Groupoid, validate: bool = True, limit: int | None = None) -> ActionGroupoid:
    return ActionGroupoid(G, validate=validate, limit=limit)


# -- the hom action ------------------------------------------------------


@dataclass(frozen=True)
class HomActionValue:
    object: int
    carrier: list[int]  # every morphism with source ``object``


def hom_action(G: Groupoid, x: Ref) -> HomActionValue:
    x = G.object(x)
    return HomActionValue(x, G.out_of(x))


def hom_action_map(G: Groupoid, f: Ref) -> dict[int, int]:
    """For ``f: X -> Y``, the function ``Hom(Y, -) -> Hom(X, -)``, ``g -> g . f``."""
    f = G.morphism(f)
    return {g: G.compose(g, f) for g in G.out_of(G.tgt(f))}


def check_hom_action_laws(G: Groupoid) -> Verdict:
    """Identities act trivially and ``map(g' . g) == map(g) after map(g')``."""
    for x in range(G.n_objects):
        m = hom_action_map(G, G.identity(x))
        if any(k != v for k, v in m.items()):
            return Verdict(False, (G.mname(G.identity(x)),), "identity does not act trivially")
    maps = [hom_action_map(G, f) for f in range(G.n_morphisms)]
    for later, earlier in G.composable_pairs():
        lhs = maps[G.compose(later, earlier)]
        for h, v in lhs.items():
            if maps[earlier][maps[later][h]] != v:
                return Verdict(False, (G.mname(later), G.mname(earlier)), "contravariant composition fails")
    return Verdict(True)


# -- opposites and embeddings --------------------------------------------


def opposite(S: Groupoid, name: str | None = None) -> Groupoid:
    """Same objects and morphism names, arrows reversed, composition swapped."""
    if name is None:
        name = S.name[:-3] if S.name.endswith("^op") else f"{S.name}^op"
    # arrows out of Y in the opposite are the arrows into Y, so the in-lists give the slots
    inpad, pos = _in_lists(S)
    g = inpad[S.source]  # g.op f = f . g, for every g into source(f)
    valid = g >= 0
    table = np.where(valid, S.compose_arrays(np.repeat(np.arange(S.n_morphisms), g.shape[1]).reshape(g.shape),
                                             np.where(valid, g, 0)), -1)
    return from_array_table(
        name,
        [o.name for o in S.objects],
        [(m.name, m.target, m.source) for m in S.morphisms],
        table,
        S.identities.copy(),
        S.inverses.copy(),
        validate=False,
    )


def embed_slice_contra(S: SliceGroupoid, A: ActionGroupoid) -> GroupoidFunctor:
    """Contravariant ``G/X -> G//G``: ``f -> f``, triangle ``<g>: f -> f'`` to ``(f', g)``."""
    omap, mmap = _embedding_maps(S, A)
    return GroupoidFunctor(S.groupoid, A.groupoid, omap, mmap, contravariant=True, name=f"iota_{S.base.oname(S.apex)}")


def embed_slice_co(S: SliceGroupoid, A: ActionGroupoid, op: Groupoid | None = None) -> GroupoidFunctor:
    """The same assignment as a covariant functor out of the opposite slice."""
    omap, mmap = _embedding_maps(S, A)
    op = op if op is not None else opposite(S.groupoid)
    return GroupoidFunctor(op, A.groupoid, omap, mmap, name=f"iota*_{S.base.oname(S.apex)}")


def _embedding_maps(S: SliceGroupoid, A: ActionGroupoid) -> tuple[list[int], list[int]]:
    omap = list(S.objects)
    mmap = []
    for m in range(S.groupoid.n_morphisms):
        tri = S.morphism(m)
        mmap.append(A.morphism_id(tri.target, tri.underlying))
    return omap, mmap


def embeddings(G: Groupoid, x: Ref) -> tuple[GroupoidFunctor, GroupoidFunctor]:
    """``(iota_X, iota*_X)`` for ``G`` at ``x``."""
    S = slice_groupoid(G, x)
    A = action_groupoid(G)
    return embed_slice_contra(S, A), embed_slice_co(S, A)


# -- forgetful source functors -------------------------------------------


def source_functor_slice(S: SliceGroupoid, op: Groupoid | None = None) -> GroupoidFunctor:
    """``op(G/X) -> G``: ``f -> source(f)``, triangle carried by ``g`` goes to ``inv(g)``."""
    G = S.base
    op = op if op is not None else opposite(S.groupoid)
    return GroupoidFunctor(
        op,
        G,
        [G.src(f) for f in S.objects],
        [G.inverse(int(u)) for u in S.underlying],
        name="s",
    )


def source_functor_action(A: ActionGroupoid) -> GroupoidFunctor:
    """``G//G -> G``: ``g -> source(g)``, ``(g, f) -> inv(f)``."""
    G = A.base
    return GroupoidFunctor(A.groupoid, G, G.source.copy(), G.inverses[A.f_of], name="s")
