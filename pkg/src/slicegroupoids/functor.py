"""Functors between finite groupoids, stored as total object/morphism maps."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

from .groupoid import Groupoid, Ref, ValidationError, Violation, connected_component

MapLike = Union[Mapping, Sequence[int], np.ndarray]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a brute-force property check; ``witness`` names a counterexample."""

    holds: bool
    witness: tuple[str, ...] = ()
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


class GroupoidFunctor:
    """A validated functor ``source -> target``.

    With ``contravariant=True`` a morphism ``f: X -> Y`` goes to
    ``F f: F Y -> F X`` and ``F(g . f) == F f . F g``.
    """

    def __init__(self, source: Groupoid, target: Groupoid, object_map, morphism_map,
                 contravariant: bool = False, name: str = "F"):
        self.source = source
        self.target = target
        self.object_map = np.asarray(object_map, dtype=np.int64)
        self.morphism_map = np.asarray(morphism_map, dtype=np.int64)
        self.object_map.flags.writeable = False
        self.morphism_map.flags.writeable = False
        self.contravariant = contravariant
        self.name = name

    def obj(self, x: Ref) -> int:
        return int(self.object_map[self.source.object(x)])

    def __call__(self, f: Ref) -> int:
        return int(self.morphism_map[self.source.morphism(f)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupoidFunctor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.contravariant == other.contravariant
            and np.array_equal(self.object_map, other.object_map)
            and np.array_equal(self.morphism_map, other.morphism_map)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        kind = "contravariant " if self.contravariant else ""
        return f"<{kind}functor {self.name}: {self.source.name} -> {self.target.name}>"


def _as_map(m: MapLike, dom_size: int, dom_lookup, cod_lookup) -> tuple[np.ndarray, list[int]]:
    out = np.full(dom_size, -1, dtype=np.int64)
    if isinstance(m, Mapping):
        for k, val in m.items():
            out[dom_lookup(k)] = cod_lookup(val)
    else:
        arr = list(m)
        for i, val in enumerate(arr[:dom_size]):
            out[i] = cod_lookup(val)
    return out, [i for i in range(dom_size) if out[i] < 0]


def functor_violations(F: GroupoidFunctor) -> list[Violation]:
    G, H = F.source, F.target
    om, mm = F.object_map, F.morphism_map
    v: list[Violation] = []
    if len(om) != G.n_objects or len(mm) != G.n_morphisms or (om < 0).any() or (mm < 0).any():
        missing = [G.oname(x) for x in range(min(len(om), G.n_objects)) if om[x] < 0]
        missing += [G.mname(f) for f in range(min(len(mm), G.n_morphisms)) if mm[f] < 0]
        return [Violation("NotTotal", tuple(missing))]
    if (om >= H.n_objects).any() or (mm >= H.n_morphisms).any():
        return [Violation("NotTotal", (), "map refers outside the target groupoid")]

    s_img, t_img = om[G.source], om[G.target]
    if F.contravariant:
        s_img, t_img = t_img, s_img
    bad = np.flatnonzero((H.source[mm] != s_img) | (H.target[mm] != t_img))
    for f in bad:
        v.append(Violation("EndpointMismatch", (G.mname(f),)))
    if v:
        return v
    for x in range(G.n_objects):
        if mm[G.identity(x)] != H.identity(int(om[x])):
            v.append(Violation("IdentityViolation", (G.oname(x),)))
    g, f, gf = G.pair_arrays()
    if F.contravariant:
        expect = H.compose_arrays(mm[f], mm[g])
    else:
        expect = H.compose_arrays(mm[g], mm[f])
    for i in np.flatnonzero(mm[gf] != expect):
        v.append(Violation("CompositionViolation", (G.mname(g[i]), G.mname(f[i]))))
    return v


def validate_functor(
    source: Groupoid,
    target: Groupoid,
    object_map: MapLike,
    morphism_map: MapLike,
    contravariant: bool = False,
    name: str = "F",
) -> GroupoidFunctor:
    """Build and check a functor; maps may be keyed by ids or names."""
    om, om_missing = _as_map(object_map, source.n_objects, source.object, target.object)
    mm, mm_missing = _as_map(morphism_map, source.n_morphisms, source.morphism, target.morphism)
    if om_missing or mm_missing:
        raise ValidationError(
            [Violation("NotTotal", tuple([source.oname(x) for x in om_missing] + [source.mname(f) for f in mm_missing]))]
        )
    F = GroupoidFunctor(source, target, om, mm, contravariant, name)
    v = functor_violations(F)
    if v:
        raise ValidationError(v)
    return F


def identity_functor(G: Groupoid, name: str = "id") -> GroupoidFunctor:
    return GroupoidFunctor(G, G, np.arange(G.n_objects), np.arange(G.n_morphisms), name=name)


def compose_functors(F2: GroupoidFunctor, F1: GroupoidFunctor, name: str | None = None) -> GroupoidFunctor:
    """``F2 . F1`` (apply ``F1`` first); variances multiply."""
    if F1.target != F2.source:
        raise ValueError(f"cannot compose {F2.name} after {F1.name}: middle groupoids differ")
    return GroupoidFunctor(
        F1.source,
        F2.target,
        F2.object_map[F1.object_map],
        F2.morphism_map[F1.morphism_map],
        F1.contravariant != F2.contravariant,
        name or f"{F2.name}.{F1.name}",
    )


def _image_hom(F: GroupoidFunctor, x: int, y: int) -> tuple[list[int], list[int]]:
    """(source hom-set Hom(x, y), the target hom-set it lands in)."""
    G, H = F.source, F.target
    fx, fy = int(F.object_map[x]), int(F.object_map[y])
    return G.hom(x, y), (H.hom(fy, fx) if F.contravariant else H.hom(fx, fy))


def _hom_image_sizes(F: GroupoidFunctor) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per source pair ``(x, y)``: |Hom(x, y)|, distinct images, and |Hom| of the target pair."""
    G, H = F.source, F.target
    n, mh = G.n_objects, H.n_morphisms
    pair = G.source * n + G.target
    size = np.bincount(pair, minlength=n * n)
    distinct = np.bincount(np.unique(pair * mh + F.morphism_map) // mh, minlength=n * n)
    ht = np.zeros((H.n_objects, H.n_objects), dtype=np.int64)
    np.add.at(ht, (H.source, H.target), 1)
    a = np.repeat(F.object_map, n)
    b = np.tile(F.object_map, n)
    target = ht[b, a] if F.contravariant else ht[a, b]
    return size, distinct, target


def check_full(F: GroupoidFunctor) -> Verdict:
    G, H = F.source, F.target
    _, distinct, target = _hom_image_sizes(F)
    bad = np.flatnonzero(distinct != target)
    if len(bad):
        x, y = divmod(int(bad[0]), G.n_objects)
        src, tgt = _image_hom(F, x, y)
        hit = {int(F.morphism_map[f]) for f in src}
        missed = [h for h in tgt if h not in hit]
        return Verdict(False, (G.oname(x), G.oname(y), H.mname(missed[0])), "hom-set image misses a morphism")
    return Verdict(True)


def check_faithful(F: GroupoidFunctor) -> Verdict:
    G = F.source
    size, distinct, _ = _hom_image_sizes(F)
    bad = np.flatnonzero(distinct != size)
    if len(bad):
        x, y = divmod(int(bad[0]), G.n_objects)
        seen: dict[int, int] = {}
        for f in G.hom(x, y):
            img = int(F.morphism_map[f])
            if img in seen:
                return Verdict(False, (G.mname(seen[img]), G.mname(f)), "distinct morphisms share an image")
            seen[img] = f
    return Verdict(True)


def check_essentially_surjective(F: GroupoidFunctor) -> Verdict:
    H = F.target
    hit = {int(x) for x in F.object_map}
    for comp in H.components():
        if not hit.intersection(comp):
            return Verdict(False, (H.oname(comp[0]),), "object not isomorphic to any image object")
    return Verdict(True)


def check_injective_on_objects(F: GroupoidFunctor) -> Verdict:
    seen: dict[int, int] = {}
    for x, y in enumerate(F.object_map.tolist()):
        if y in seen:
            return Verdict(False, (F.source.oname(seen[y]), F.source.oname(x)))
        seen[y] = x
    return Verdict(True)


def check_surjective_on_objects(F: GroupoidFunctor) -> Verdict:
    hit = set(F.object_map.tolist())
    for y in range(F.target.n_objects):
        if y not in hit:
            return Verdict(False, (F.target.oname(y),))
    return Verdict(True)


def is_full_at(F: GroupoidFunctor, x: Ref) -> Verdict:
    """Is ``Mor(x, x) -> Mor(F x, F x)`` surjective? Witness: an uncovered loop."""
    G, H = F.source, F.target
    x = G.object(x)
    fx = int(F.object_map[x])
    hit = {int(F.morphism_map[f]) for f in G.hom(x, x)}
    for h in H.hom(fx, fx):
        if h not in hit:
            return Verdict(False, (H.mname(h),))
    return Verdict(True)


def restrict_to_component(F: GroupoidFunctor, x: Ref) -> GroupoidFunctor:
    """``F`` restricted to the component of ``x``, landing in the component of ``F x``."""
    x = F.source.object(x)
    src = connected_component(F.source, x)
    tgt = connected_component(F.target, int(F.object_map[x]))
    onew = {p: i for i, p in enumerate(tgt.object_ids)}
    mnew = {p: i for i, p in enumerate(tgt.morphism_ids)}
    return GroupoidFunctor(
        src.groupoid,
        tgt.groupoid,
        [onew[int(F.object_map[p])] for p in src.object_ids],
        [mnew[int(F.morphism_map[p])] for p in src.morphism_ids],
        F.contravariant,
        f"{F.name}|{src.groupoid.name}",
    )


def preserves_inverses(F: GroupoidFunctor) -> Verdict:
    mm = F.morphism_map
    bad = np.flatnonzero(mm[F.source.inverses] != F.target.inverses[mm])
    if len(bad):
        return Verdict(False, (F.source.mname(bad[0]),))
    return Verdict(True)


def check_surjective_on_morphisms(F: GroupoidFunctor) -> Verdict:
    """Every target morphism is the image of some source morphism."""
    hit = set(F.morphism_map.tolist())
    for h in range(F.target.n_morphisms):
        if h not in hit:
            return Verdict(False, (F.target.mname(h),))
    return Verdict(True)


def check_lifts_at_every_object(F: GroupoidFunctor) -> Verdict:
    """For every source object ``x``, each target morphism out of ``F x`` lifts to one out of ``x``."""
    G, H = F.source, F.target
    for x in range(G.n_objects):
        fx = F.obj(x)
        outgoing = H.into(fx) if F.contravariant else H.out_of(fx)
        hit = {F(f) for f in G.out_of(x)}
        for h in outgoing:
            if h not in hit:
                return Verdict(False, (G.oname(x), H.mname(h)))
    return Verdict(True)
