"""Induced functors on slices, their kernels, and the preimage partition.

Reduction mod 2 from Z/4 to Z/2 has kernel {e, a2}; the preimage classes
are the cosets of that kernel.
"""
from __future__ import annotations

from pathlib import Path

from slicegroupoids import induced_functor, kernel_report, parse_file

ROOT = Path(__file__).resolve().parent.parent
doc = parse_file(ROOT / "fixtures" / "z4_mod2.gd")
F = doc.functors["mod2"]

# %% F_X sends the slice Z4/o to Z2/o
FX = induced_functor(F, "o")
r = kernel_report(FX)
print("kernel:", r["kernel"])
print("image:", r["image"])
for p in r["partition"]:
    print(f"  {{{', '.join(p['class'])}}} -> {p['image']}")
print("kernel properties hold:", r["kernel_properties_hold"])

# %% A functor that collapses everything is not full at the apex, yet F id = id still holds
triv = parse_file(ROOT / "fixtures" / "trivial_z2.gd").functors["triv"]
rt = kernel_report(induced_functor(triv, "o"))
print("trivial map: full at apex =", rt["full_at_apex"], "| identity preserved =", rt["identity_preserved"])
