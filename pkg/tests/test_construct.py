import json

import pytest

from lcgeo.lcf import d_pow, from_real
from lcgeo.projgeo import chordal_distance, point, proj_close, proj_close_seq
from lcgeo.construct import (
    ConstructionError,
    CycleError,
    ORTHO_BISECTOR_DOC,
    TANGENT_CIRCLES_DOC,
    VON_STAUDT_DOC,
    default_assignment,
    evaluate,
    loads_construction,
    run_table,
    trace,
)

d = d_pow(1)


class TestLoad:
    def test_von_staudt_document(self):
        c = loads_construction(VON_STAUDT_DOC)
        assert len(c.elements) == 16  # 6 inputs + 10 dependents (F's line included)
        assert c.free_ids() == ["E", "F"]
        assert c.by_id("F").kind == "SemiFreePointOnLine"

    def test_tangent_circles_document(self):
        c = loads_construction(TANGENT_CIRCLES_DOC)
        assert len(c.elements) == 7
        assert len(c.paths) == 1

    def test_forward_reference_is_cycle_error(self):
        doc = {
            "elements": [
                {"id": "j", "kind": "LineJoin", "args": ["a", "b"]},
                {"id": "a", "kind": "FixedPoint", "literal": [0, 0, 1]},
                {"id": "b", "kind": "FixedPoint", "literal": [1, 0, 1]},
            ]
        }
        with pytest.raises(CycleError):
            loads_construction(json.dumps(doc))

    def test_self_reference_is_cycle_error(self):
        doc = {"elements": [{"id": "j", "kind": "LineJoin", "args": ["j", "j"]}]}
        with pytest.raises(CycleError):
            loads_construction(json.dumps(doc))

    def test_unknown_kind(self):
        doc = {"elements": [{"id": "a", "kind": "Frob", "literal": [0, 0, 1]}]}
        with pytest.raises(ConstructionError) as err:
            loads_construction(json.dumps(doc))
        assert err.value.element_id == "a"

    def test_duplicate_id(self):
        doc = {
            "elements": [
                {"id": "a", "kind": "FixedPoint", "literal": [0, 0, 1]},
                {"id": "a", "kind": "FixedPoint", "literal": [1, 0, 1]},
            ]
        }
        with pytest.raises(ConstructionError):
            loads_construction(json.dumps(doc))

    def test_semifree_constraint_checked(self):
        doc = {
            "elements": [
                {"id": "l", "kind": "FixedLine", "literal": [0, 1, 0]},
                {"id": "p", "kind": "SemiFreePointOnLine", "args": ["l"], "literal": [1, 1, 1]},
            ]
        }
        with pytest.raises(ConstructionError):
            loads_construction(json.dumps(doc))

    def test_complex_literals(self):
        doc = {
            "elements": [
                {"id": "I", "kind": "FixedPoint", "literal": [{"re": 0, "im": -1}, 1, 0]}
            ]
        }
        c = loads_construction(json.dumps(doc))
        assert c.by_id("I").literal[0] == -1j

    def test_path_on_dependent_rejected(self):
        doc = {
            "elements": [
                {"id": "a", "kind": "FixedPoint", "literal": [0, 0, 1]},
                {"id": "b", "kind": "FixedPoint", "literal": [1, 0, 1]},
                {"id": "j", "kind": "LineJoin", "args": ["a", "b"]},
            ],
            "paths": [{"element": "j", "from": [0, 0, 1], "to": [1, 0, 1]}],
        }
        with pytest.raises(ConstructionError):
            loads_construction(json.dumps(doc))


class TestEvaluate:
    def test_von_staudt_exact_inputs_degenerate_columns(self):
        c = loads_construction(VON_STAUDT_DOC)
        res = evaluate(c, default_assignment(c))
        assert res["m"].standard == (0, 0, 0)
        assert res["sum"].standard == (0, 0, 0)
        assert res["m"].psh is None

    def test_von_staudt_perturbed_resolves(self):
        c = loads_construction(VON_STAUDT_DOC)
        assign = default_assignment(c)
        eps = 4 * (d + d * d)
        assign["E"] = point(from_real(4.0) + eps, from_real(2.0) + eps, from_real(1.0))
        assign["F"] = point(from_real(4.0) + eps + 4 * d, from_real(2.0) + eps, from_real(1.0))
        res = evaluate(c, assign)
        assert res["sum"].standard == (0, 0, 0)
        assert proj_close_seq(res["sum"].psh.vec, (6, 0, 1), tol=1e-6)
        assert proj_close_seq(res["m"].psh.vec, (-1 / 6, -1 / 6, 1), tol=1e-6)

    def test_single_fixed_point_passthrough(self):
        doc = {"elements": [{"id": "a", "kind": "FixedPoint", "literal": [3, 4, 1]}]}
        c = loads_construction(json.dumps(doc))
        res = evaluate(c, {})
        assert res["a"].standard == (3, 4, 1)

    def test_missing_assignment_rejected(self):
        c = loads_construction(VON_STAUDT_DOC)
        with pytest.raises(ConstructionError):
            evaluate(c, {})

    def test_standard_column_equals_psh_when_regular(self):
        c = loads_construction(ORTHO_BISECTOR_DOC)
        res = evaluate(c, default_assignment(c))
        for eid, entry in res.items():
            if entry.psh is None:
                continue
            assert proj_close_seq(
                entry.standard, entry.psh.vec, tol=1e-9
            ), f"{eid} standard/psh disagree"

    def test_determinism(self):
        c = loads_construction(ORTHO_BISECTOR_DOC)
        r1 = evaluate(c, default_assignment(c))
        r2 = evaluate(c, default_assignment(c))
        for eid in r1:
            assert r1[eid].standard == r2[eid].standard
            if r1[eid].psh is not None:
                assert r1[eid].psh.vec == r2[eid].psh.vec


class TestTrace:
    def test_orthogonal_bisector_defined_everywhere(self):
        c = loads_construction(ORTHO_BISECTOR_DOC)
        rows = trace(c, "bisector", 101)
        assert len(rows) == 101
        assert all(v is not None for _, _, v in rows)
        singular = [(t, s) for t, s, _ in rows if s != "regular"]
        assert singular == [(0.5, "removable")]

    def test_orthogonal_bisector_discrete_continuity(self):
        c = loads_construction(ORTHO_BISECTOR_DOC)
        rows = trace(c, "bisector", 101)
        spacing = 1.0 / 100
        for (t1, _, v1), (t2, _, v2) in zip(rows, rows[1:]):
            assert chordal_distance(v1, v2) <= 10 * spacing

    def test_farpoint_trace_constant_target(self):
        doc = {
            "elements": [
                {"id": "P1", "kind": "FreePoint", "literal": [0, 0.5, 1]},
                {"id": "P2", "kind": "FreePoint", "literal": [1, 0.5, 1]},
                {"id": "a", "kind": "FixedLine", "literal": [0, 1, 0]},
                {"id": "b", "kind": "LineJoin", "args": ["P1", "P2"]},
                {"id": "P", "kind": "PointMeet", "args": ["a", "b"]},
            ],
            "paths": [
                {"element": "P1", "from": [0, 0.5, 1], "to": [0, -0.5, 1]},
                {"element": "P2", "from": [1, 0.5, 1], "to": [1, -0.5, 1]},
            ],
        }
        c = loads_construction(json.dumps(doc))
        rows = trace(c, "P", 101)
        for t, status, v in rows:
            assert proj_close_seq(v, (1, 0, 0), tol=1e-9), (t, status, v)
        assert [s for t, s, _ in rows if t == 0.5] == ["removable"]

    def test_constant_construction(self):
        doc = {
            "elements": [
                {"id": "A", "kind": "FreePoint", "literal": [1, 1, 1]},
                {"id": "B", "kind": "FixedPoint", "literal": [2, 0, 1]},
                {"id": "j", "kind": "LineJoin", "args": ["A", "B"]},
            ],
            "paths": [{"element": "A", "from": [1, 1, 1], "to": [1, 1, 1]}],
        }
        c = loads_construction(json.dumps(doc))
        rows = trace(c, "j", 11)
        first = rows[0][2]
        for _, status, v in rows:
            assert status == "regular"
            assert proj_close_seq(v, first, tol=1e-12)


class TestRunTable:
    def test_circle_tangent_values(self):
        out = run_table("circle-tangent")
        assert "2.4495*d^1/2" in out
        assert "-2.4495*d^1/2" in out
        assert "(1.0000, 0.0000, -1.0000)" in out  # psh of the join
        assert "(0.0000, 0.0000, 0.0000)" in out  # standard column collapse

    def test_vonstaudt_merge_values(self):
        out = run_table("vonstaudt-merge")
        assert "-0.1250*d^1" in out
        assert "0.7500*d^1" in out
        assert "(-0.1667, -0.1667, 1.0000)" in out

    def test_vonstaudt_online_values(self):
        out = run_table("vonstaudt-online")
        assert "(1.0000, 0.0000, 0.1667)" in out  # psh of the resolved sum
        assert "6.0000*d^1" in out  # the (x+y)' leading terms
        assert "(-0.5000, 0.5000, 1.0000)" in out  # join(x, E') psh

    def test_unknown_scenario(self):
        with pytest.raises(ConstructionError):
            run_table("nope")

    def test_rendered_output_deterministic(self):
        assert run_table("vonstaudt-merge") == run_table("vonstaudt-merge")
