"""Induced functors between slices, their kernels, images and preimage partitions.

For ``F: G -> H`` and an object ``X`` of ``G`` the induced functor
``F_X: G/X -> H/FX`` sends a slice object ``f`` to ``F f`` and the triangle
carried by ``g`` to the triangle carried by ``F g``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .functor import GroupoidFunctor, Verdict, is_full_at
from .groupoid import Ref
from .slice import SliceGroupoid, slice_groupoid, slice_hom


@dataclass(frozen=True)
class InducedFunctor:
    base: GroupoidFunctor
    apex: int
    source: SliceGroupoid
    target: SliceGroupoid
    functor: GroupoidFunctor

    def on_object(self, f: Ref) -> int:
        """``F_X f`` as a base morphism of ``H`` (an object of ``H/FX``)."""
        return self.target.objects[self.functor.obj(self.source.index(f))]


def induced_functor(F: GroupoidFunctor, x: Ref, validate: bool = True) -> InducedFunctor:
    if F.contravariant:
        raise ValueError("induced slice functors need a covariant functor")
    G, H = F.source, F.target
    x = G.object(x)
    S = slice_groupoid(G, x, validate=validate)
    T = slice_groupoid(H, F.obj(x), validate=validate)
    p, q = S.n_objects, T.n_objects
    omap = [T.index(F(f)) for f in S.objects]
    mmap = [omap[m // p] * q + omap[m % p] for m in range(p * p)]
    FX = GroupoidFunctor(S.groupoid, T.groupoid, omap, mmap, name=f"{F.name}_{G.oname(x)}")
    return InducedFunctor(F, x, S, T, FX)


def carriers_agree(FX: InducedFunctor) -> Verdict:
    """``F_X <g> == <F g>``: the image triangle is carried by ``F`` of the carrier."""
    F = FX.base
    for m in range(FX.source.groupoid.n_morphisms):
        under = FX.source.underlying[m]
        img = FX.target.underlying[FX.functor(m)]
        if F(int(under)) != int(img):
            return Verdict(False, (FX.source.groupoid.mname(m),))
    return Verdict(True)


@dataclass(frozen=True)
class ImageOfIdentity:
    full_at: Verdict
    conclusion: bool  # F id_X == id_{F X}

    @property
    def consistent(self) -> bool:
        """Hypothesis implies conclusion."""
        return self.conclusion or not self.full_at.holds


def check_image_of_identity(F: GroupoidFunctor, x: Ref) -> ImageOfIdentity:
    x = F.source.object(x)
    conclusion = F(F.source.identity(x)) == F.target.identity(F.obj(x))
    return ImageOfIdentity(is_full_at(F, x), conclusion)


def kernel(FX: InducedFunctor) -> list[int]:
    """Slice objects ``f`` with ``F f == id_{F X}``, ascending base id. May be empty."""
    unit = FX.target.base.identity(FX.target.apex)
    return [f for f in FX.source.objects if FX.base(f) == unit]


@dataclass(frozen=True)
class KernelPair:
    f: int
    g: int
    holds: bool
    quotient: int  # inv(g) . f
    quotient_in_kernel: bool


@dataclass(frozen=True)
class KernelProperties:
    same_object: Verdict  # F(source f) == F X
    to_unit: Verdict  # F_X <f> is the identity of id_{FX}
    pairs: list[KernelPair]

    @property
    def holds(self) -> bool:
        return self.same_object.holds and self.to_unit.holds and all(p.holds for p in self.pairs)


def check_kernel_properties(FX: InducedFunctor) -> KernelProperties:
    G = FX.base.source
    F = FX.base
    ker = kernel(FX)
    kset = set(ker)
    fx = F.obj(FX.apex)
    ident_x = G.identity(FX.apex)
    unit_id = FX.target.groupoid.identity(FX.target.index(FX.target.base.identity(FX.target.apex)))

    same = Verdict(True)
    for f in ker:
        if F.obj(G.src(f)) != fx:
            same = Verdict(False, (G.mname(f),))
            break
    to_unit = Verdict(True)
    for f in ker:
        if FX.functor(slice_hom(FX.source, f, ident_x).id) != unit_id:
            to_unit = Verdict(False, (G.mname(f),))
            break
    pairs = []
    for f in ker:
        for g in ker:
            tri = slice_hom(FX.source, f, g)
            quotient = G.compose(G.inverse(g), f)
            pairs.append(KernelPair(f, g, FX.functor(tri.id) == unit_id, quotient, quotient in kset))
    return KernelProperties(same, to_unit, pairs)


@dataclass(frozen=True)
class ImagePartition:
    image: list[int]  # objects of H/FX hit by F_X, ascending
    classes: dict[int, list[int]]  # image object -> preimage class

    @property
    def bijection(self) -> list[tuple[tuple[int, ...], int]]:
        return [(tuple(self.classes[g]), g) for g in self.image]

    def verify(self, objects: list[int]) -> Verdict:
        """Disjoint, nonempty, covering classes, as many as image objects."""
        seen: set[int] = set()
        for g, cls in self.classes.items():
            if not cls:
                return Verdict(False, (str(g),), "empty class")
            if seen.intersection(cls):
                return Verdict(False, (str(g),), "classes overlap")
            seen.update(cls)
        if seen != set(objects):
            return Verdict(False, (), "classes do not cover the slice")
        if len(self.classes) != len(self.image) or set(self.classes) != set(self.image):
            return Verdict(False, (), "classes and image differ in size")
        return Verdict(True)


def image_and_partition(FX: InducedFunctor) -> ImagePartition:
    classes: dict[int, list[int]] = {}
    for f in FX.source.objects:
        classes.setdefault(FX.base(f), []).append(f)
    image = sorted(classes)
    return ImagePartition(image, {g: classes[g] for g in image})


def kernel_report(FX: InducedFunctor) -> dict:
    """JSON-ready summary; key order is part of the output contract."""
    G, H = FX.base.source, FX.base.target
    ker = kernel(FX)
    part = image_and_partition(FX)
    iid = check_image_of_identity(FX.base, FX.apex)
    props = check_kernel_properties(FX)
    report = {
        "functor": FX.base.name,
        "source": G.name,
        "target": H.name,
        "apex": G.oname(FX.apex),
        "image_apex": H.oname(FX.target.apex),
        "full_at_apex": iid.full_at.holds,
        "identity_preserved": iid.conclusion,
        "kernel": [G.mname(f) for f in ker],
        "kernel_size": len(ker),
        "kernel_properties_hold": props.holds,
        "image": [H.mname(g) for g in part.image],
        "partition": [
            {"image": H.mname(g), "class": [G.mname(f) for f in part.classes[g]]} for g in part.image
        ],
        "class_sizes": [len(part.classes[g]) for g in part.image],
        "partition_valid": part.verify(FX.source.objects).holds,
    }
    if not ker:
        report["notice"] = "kernel is empty; it always contains the apex identity when the functor is full at the apex"
    return report
