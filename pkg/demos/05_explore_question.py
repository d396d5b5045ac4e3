"""Which wide subgroupoids K make the sliced classes match im F_X one to one?

The matching rule is an experimental reading and is printed with the report.
"""
from __future__ import annotations

from pathlib import Path

from slicegroupoids import explore_question, parse_file

ROOT = Path(__file__).resolve().parent.parent
F = parse_file(ROOT / "fixtures" / "z4_mod2.gd").functors["mod2"]

r = explore_question(F, "o")
print("criterion:", r["criterion"])
print("examined", r["candidates_examined"], "wide subgroupoids of", F.source.name)
for c in r["candidates"]:
    mark = "yes" if c["verdict"] else "no "
    print(f"  [{mark}] K = {{{', '.join(c['subgroupoid'])}}}")
