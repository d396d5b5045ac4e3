"""Slice groupoids G/X.

Objects of ``G/X`` are the morphisms ``f`` of ``G`` with target ``X``.  A
morphism ``f -> f'`` is a commuting triangle carried by some ``g`` with
``f == f' . g``; in a groupoid there is exactly one, with ``g = inv(f') . f``.

Composition follows the global convention: for ``m1: f -> f'`` and
``m2: f' -> f''`` the composite ``compose(m2, m1)`` ("m1 then m2") is carried
by ``g' . g``.  Written left to right as triangles are concatenated this is
``<g> * <g'> = <g' . g>``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groupoid import Groupoid, NotComposable, Ref, UnknownRef, check_size, from_array_table


@dataclass(frozen=True)
class SliceMorphism:
    """Triangle ``source -> target`` over the apex; all fields are base morphism ids."""

    id: int
    source: int
    target: int
    underlying: int


class SliceGroupoid:
    """``G/X`` together with the groupoid structure and the underlying morphisms."""

    def __init__(self, base: Groupoid, apex: int, objects: list[int], groupoid: Groupoid, underlying: np.ndarray):
        self.base = base
        self.apex = apex
        self.objects = objects
        self.groupoid = groupoid
        self.underlying = underlying
        self.underlying.flags.writeable = False
        self._index = {f: i for i, f in enumerate(objects)}

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    def index(self, f: Ref) -> int:
        """Position of base morphism ``f`` among the slice objects."""
        fid = self.base.morphism(f)
        try:
            return self._index[fid]
        except KeyError:
            raise UnknownRef(f"{self.base.mname(fid)} does not end at {self.base.oname(self.apex)}") from None

    def morphism(self, m: int) -> SliceMorphism:
        p = self.n_objects
        return SliceMorphism(m, self.objects[m // p], self.objects[m % p], int(self.underlying[m]))

    def morphisms(self) -> list[SliceMorphism]:
        return [self.morphism(m) for m in range(self.groupoid.n_morphisms)]

    def __repr__(self) -> str:
        return f"<slice {self.base.name}/{self.base.oname(self.apex)}: {self.n_objects} objects>"


def slice_groupoid(G: Groupoid, x: Ref, validate: bool = True, limit: int | None = None) -> SliceGroupoid:
    """Build ``G/x``; objects in ascending base-morphism id, morphism ``i -> j`` has id ``i*p + j``."""
    x = G.object(x)
    objs = G.into(x)
    p = len(objs)
    check_size(p * p, f"slice {G.name}/{G.oname(x)}", limit)
    objs_arr = np.array(objs, dtype=np.int64)
    src = np.repeat(np.arange(p), p)
    tgt = np.tile(np.arange(p), p)
    inv = G.inverses[objs_arr]
    # carrier of i -> j is inv(f_j) . f_i
    under = G.compose_arrays(inv[tgt], objs_arr[src])

    names = [G.mname(f) for f in objs]
    mors = [(f"<{G.mname(u)}>:{names[i]}->{names[j]}", int(i), int(j)) for i, j, u in zip(src, tgt, under)]
    # out(i) = ids i*p .. i*p+p-1, slot of (j -> k) is k, so (i->j then j->k) = i*p + k
    table = (src * p)[:, None] + np.arange(p)[None, :]
    S = from_array_table(
        f"{G.name}/{G.oname(x)}",
        names,
        mors,
        table,
        np.arange(p) * (p + 1),
        tgt * p + src,
        validate=validate,
    )
    return SliceGroupoid(G, x, objs, S, under)


def slice_hom(S: SliceGroupoid, f: Ref, f2: Ref) -> SliceMorphism:
    """The unique triangle ``f -> f2``."""
    return S.morphism(S.index(f) * S.n_objects + S.index(f2))


def slice_compose(S: SliceGroupoid, m1: SliceMorphism, m2: SliceMorphism) -> SliceMorphism:
    """``m1`` then ``m2``; carried by ``underlying(m2) . underlying(m1)``."""
    if m1.target != m2.source:
        raise NotComposable(f"triangle ending at {S.base.mname(m1.target)} cannot precede one starting at {S.base.mname(m2.source)}")
    return S.morphism(S.groupoid.compose(m2.id, m1.id))


@dataclass(frozen=True)
class ZeroObject:
    """``id_X`` with its unique morphisms into and out of every slice object."""

    object: int
    incoming: dict[int, SliceMorphism]  # g -> id_X, carried by g
    outgoing: dict[int, SliceMorphism]  # id_X -> g, carried by inv(g)


def zero_object(S: SliceGroupoid) -> ZeroObject:
    z = S.base.identity(S.apex)
    return ZeroObject(
        z,
        {g: slice_hom(S, g, z) for g in S.objects},
        {g: slice_hom(S, z, g) for g in S.objects},
    )


def is_zero_object(G: Groupoid, x: Ref) -> bool:
    """Exactly one morphism to and from every object (initial and terminal)."""
    x = G.object(x)
    return all(len(G.hom(x, y)) == 1 and len(G.hom(y, x)) == 1 for y in range(G.n_objects))
