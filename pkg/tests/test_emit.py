from __future__ import annotations

import json

import jsonschema

from slicegroupoids import induced_functor, kernel_report, pair_groupoid, slice_groupoid
from slicegroupoids.emit import GROUPOID_SCHEMA, KERNEL_REPORT_SCHEMA, emit_dot, emit_json, groupoid_json


def test_pair2_dot_counts():
    text = emit_dot(pair_groupoid(2))
    assert text.count("[label=") == 6
    assert text.count("->") == 4
    assert text == emit_dot(pair_groupoid(2))


def test_slice_dot_uses_carriers():
    P = pair_groupoid(2)
    S = slice_groupoid(P, "O1")
    text = emit_dot(S.groupoid, [P.mname(int(u)) for u in S.underlying])
    # id_O1 == O2_to_O1 . g forces g = O1_to_O2
    assert 'n0 -> n1 [label="O1_to_O2"];' in text


def test_dot_escapes_quotes():
    G = pair_groupoid(1, name='say "hi"')
    assert 'digraph "say \\"hi\\""' in emit_dot(G)


def test_kernel_json(mod2_doc):
    r = kernel_report(induced_functor(mod2_doc.functors["mod2"], "o"))
    jsonschema.validate(r, KERNEL_REPORT_SCHEMA)
    text = emit_json(r)
    assert json.loads(text)["kernel"] == ["e", "a2"]
    assert text == emit_json(kernel_report(induced_functor(mod2_doc.functors["mod2"], "o")))


def test_groupoid_json_schema(z4):
    jsonschema.validate(groupoid_json(z4), GROUPOID_SCHEMA)
