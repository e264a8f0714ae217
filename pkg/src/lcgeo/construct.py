"""Construction DSL: a DAG of free, semi-free and dependent elements evaluated
over Levi-Civita scalars, motion paths, and the built-in comparison tables.

Documents are JSON: a top-level object with ``elements`` (array of
``{id, kind, args, literal?, branch?, radius?}``) and ``paths`` (array of
``{element, from, to}``).  Homogeneous vectors are 3-element arrays whose
entries are numbers or ``{re, im}`` pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import geomops
from .desing import (
    EvaluablePath,
    ResolveOutcome,
    SpatialMap,
    resolve_at,
)
from .lcf import LcfNumber, d_pow, from_real
from .projgeo import (
    ConicMat,
    HomVec3,
    Kind,
    PshResult,
    line,
    point,
    psh,
    psh_seq,
)

__all__ = [
    "Element",
    "Construction",
    "MotionPath",
    "EvalEntry",
    "EvalResult",
    "ConstructionError",
    "CycleError",
    "load_construction",
    "loads_construction",
    "evaluate",
    "trace",
    "run_table",
    "scenario_construction",
    "SCENARIOS",
    "free_coordinate_layout",
    "spatial_map_for",
]

FREE_KINDS = {"FreePoint", "SemiFreePointOnLine"}
DEPENDENT_KINDS = {
    "LineJoin",
    "PointMeet",
    "Circle",
    "ConicLineIntersect",
    "CircleCircleIntersect",
    "MidpointMu",
    "MidpointEff",
    "VonStaudtSum",
    "ConicCenter",
}
FIXED_KINDS = {"FixedPoint", "FixedLine"}
ALL_KINDS = FREE_KINDS | DEPENDENT_KINDS | FIXED_KINDS

ARG_COUNTS = {
    "LineJoin": 2,
    "PointMeet": 2,
    "Circle": 1,
    "ConicLineIntersect": 2,
    "CircleCircleIntersect": 2,
    "MidpointMu": 2,
    "MidpointEff": 2,
    "VonStaudtSum": 6,
    "ConicCenter": 1,
    "SemiFreePointOnLine": 1,
    "FreePoint": 0,
    "FixedPoint": 0,
    "FixedLine": 0,
}


class ConstructionError(ValueError):
    def __init__(self, message: str, element_id: Optional[str] = None):
        super().__init__(message if element_id is None else f"{element_id}: {message}")
        self.element_id = element_id


class CycleError(ConstructionError):
    pass


@dataclass(frozen=True)
class Element:
    id: str
    kind: str
    args: tuple[str, ...] = ()
    literal: Optional[tuple[complex, complex, complex]] = None
    branch: int = 1
    radius: float = 1.0


@dataclass(frozen=True)
class MotionPath:
    element: str
    start: tuple[complex, complex, complex]
    end: tuple[complex, complex, complex]


@dataclass(frozen=True)
class Construction:
    elements: tuple[Element, ...]
    paths: tuple[MotionPath, ...] = ()

    def __post_init__(self):
        if not self.elements:
            raise ConstructionError("construction needs at least one element")

    def by_id(self, eid: str) -> Element:
        for e in self.elements:
            if e.id == eid:
                return e
        raise ConstructionError("unknown element", eid)

    def free_ids(self) -> list[str]:
        return [e.id for e in self.elements if e.kind in FREE_KINDS]


@dataclass
class EvalEntry:
    raw: HomVec3 | ConicMat
    standard: tuple[complex, ...]
    psh: Optional[PshResult]
    resolved: Optional[ResolveOutcome] = None

    @property
    def is_degenerate(self) -> bool:
        return all(abs(c) == 0 for c in self.standard)


EvalResult = dict[str, EvalEntry]


# -- document parsing -----------------------------------------------------------


def _parse_coord(v) -> complex:
    if isinstance(v, dict):
        return complex(v.get("re", 0.0), v.get("im", 0.0))
    return complex(v)


def _parse_vec(v, where: str) -> tuple[complex, complex, complex]:
    if not isinstance(v, (list, tuple)) or len(v) != 3:
        raise ConstructionError("homogeneous vector must have 3 entries", where)
    return tuple(_parse_coord(c) for c in v)


def loads_construction(text: str) -> Construction:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConstructionError(f"document is not valid object notation: {exc}")
    return _build(doc)


def load_construction(path: str) -> Construction:
    with open(path, encoding="utf-8") as fh:
        return loads_construction(fh.read())


def _build(doc) -> Construction:
    if not isinstance(doc, dict) or "elements" not in doc:
        raise ConstructionError("document must carry an 'elements' array")
    seen: dict[str, Element] = {}
    elements: list[Element] = []
    for raw in doc["elements"]:
        eid = raw.get("id")
        if not eid or not isinstance(eid, str):
            raise ConstructionError("element without id")
        if eid in seen:
            raise ConstructionError("duplicate id", eid)
        kind = raw.get("kind")
        if kind not in ALL_KINDS:
            raise ConstructionError(f"unknown kind {kind!r}", eid)
        args = tuple(raw.get("args", ()))
        if len(args) != ARG_COUNTS[kind]:
            raise ConstructionError(
                f"{kind} takes {ARG_COUNTS[kind]} args, got {len(args)}", eid
            )
        for a in args:
            if a == eid:
                raise CycleError("element references itself", eid)
            if a not in seen:
                raise CycleError(f"reference to {a!r} which is not defined earlier", eid)
        literal = None
        if "literal" in raw:
            literal = _parse_vec(raw["literal"], eid)
        if kind in FREE_KINDS | FIXED_KINDS and literal is None:
            raise ConstructionError(f"{kind} needs literal coordinates", eid)
        branch = int(raw.get("branch", 1))
        if kind in ("ConicLineIntersect", "CircleCircleIntersect") and branch not in (1, 2):
            raise ConstructionError("branch must be 1 or 2", eid)
        el = Element(
            id=eid,
            kind=kind,
            args=args,
            literal=literal,
            branch=branch,
            radius=float(raw.get("radius", 1.0)),
        )
        seen[eid] = el
        elements.append(el)

    paths = []
    for raw in doc.get("paths", ()):
        eid = raw.get("element")
        if eid not in seen:
            raise ConstructionError("path references unknown element", eid)
        if seen[eid].kind not in FREE_KINDS:
            raise ConstructionError("only free or semi-free elements can move", eid)
        start = _parse_vec(raw["from"], eid)
        end = _parse_vec(raw["to"], eid)
        for v in (start, end):
            if all(c == 0 for c in v):
                raise ConstructionError("path endpoint is the zero vector", eid)
        paths.append(MotionPath(eid, start, end))

    c = Construction(tuple(elements), tuple(paths))
    _check_constraints(c)
    return c


def _check_constraints(c: Construction):
    """Semi-free literals (and their path endpoints) must satisfy their line.

    The constraint line may itself be a dependent element (it necessarily
    precedes the point in the DAG, so it never depends on it); its value is
    taken from the evaluation at the literal positions.
    """
    semifree = [e for e in c.elements if e.kind == "SemiFreePointOnLine"]
    if not semifree:
        return
    try:
        vals = _evaluate_over(c, default_assignment(c))
    except Exception as exc:  # noqa: BLE001 - degenerate literals: defer to runtime
        return
    for e in semifree:
        line_val = vals[e.args[0]]
        if isinstance(line_val, ConicMat) or line_val.is_degenerate:
            raise ConstructionError("constraint must be a non-degenerate line", e.id)
        lv = tuple(comp.shadow() for comp in line_val.components)
        candidates = [e.literal] + [
            p for mp in c.paths if mp.element == e.id for p in (mp.start, mp.end)
        ]
        for v in candidates:
            ip = sum(a * b for a, b in zip(v, lv))
            scale = max(abs(x) for x in v) * max(abs(x) for x in lv)
            if abs(ip) > 1e-9 * max(scale, 1.0):
                raise ConstructionError("point does not satisfy its constraint line", e.id)


# -- evaluation -------------------------------------------------------------------


def _lift(vec: Sequence[complex]) -> HomVec3:
    return point(*[from_real(v) for v in vec])


def _vec_entry(v: HomVec3 | ConicMat):
    if isinstance(v, ConicMat):
        comps = v.entries
        degenerate = v.is_degenerate_zero
    else:
        comps = v.components
        degenerate = v.is_degenerate
    shadows = tuple(c.shadow() if c.is_limited() else complex("inf") for c in comps)
    p = None if degenerate else psh_seq(comps)
    return shadows, p


def evaluate(c: Construction, assignment: dict[str, HomVec3]) -> EvalResult:
    """Evaluate the DAG over Levi-Civita scalars.

    ``assignment`` maps every free/semi-free id to its (possibly perturbed)
    position.  Degenerate values propagate as flagged zero vectors; the result
    carries the standard column (shadowed inputs, no resolution), the raw
    non-standard value, and its projective shadow.
    """
    for fid in c.free_ids():
        if fid not in assignment:
            raise ConstructionError("assignment misses free element", fid)

    raw_vals = _evaluate_over(c, assignment)
    if _assignment_is_standard(assignment):
        std_vals = raw_vals
    else:
        std_assignment = {
            k: _lift([comp.shadow() for comp in v.components]) for k, v in assignment.items()
        }
        std_vals = _evaluate_over(c, std_assignment)

    out: EvalResult = {}
    for e in c.elements:
        raw = raw_vals[e.id]
        std_shadow, _ = _vec_entry(std_vals[e.id])
        _, raw_psh = _vec_entry(raw)
        out[e.id] = EvalEntry(raw=raw, standard=std_shadow, psh=raw_psh)
    return out


def _assignment_is_standard(assignment: dict[str, HomVec3]) -> bool:
    for v in assignment.values():
        for comp in v.components:
            if any(q != 0 for q, _ in comp.terms):
                return False
    return True


def _evaluate_over(c: Construction, assignment: dict[str, HomVec3]):
    vals: dict[str, HomVec3 | ConicMat] = {}
    pairs: dict[tuple, object] = {}
    for e in c.elements:
        vals[e.id] = _eval_element(e, vals, assignment, pairs)
    return vals


def _eval_element(e: Element, vals, assignment, pairs=None):
    if pairs is None:
        pairs = {}
    if e.kind in FREE_KINDS:
        return assignment[e.id]
    if e.kind == "FixedPoint":
        return _lift(e.literal)
    if e.kind == "FixedLine":
        return _lift(e.literal).dual()

    parents = [vals[a] for a in e.args]
    if any(_degenerate(p) for p in parents):
        return _zero_like(e)

    if e.kind == "LineJoin":
        return geomops.safe_join(parents[0], parents[1])
    if e.kind == "PointMeet":
        return geomops.safe_meet(parents[0], parents[1])
    if e.kind == "Circle":
        return geomops.circle_conic(
            geomops.CircleSpec(parents[0], from_real(e.radius))
        )
    if e.kind == "ConicCenter":
        return geomops.conic_center(parents[0])
    if e.kind == "MidpointMu":
        return geomops.midpoint_mu(parents[0], parents[1])
    if e.kind == "MidpointEff":
        return geomops.midpoint_eff(parents[0], parents[1])
    if e.kind == "ConicLineIntersect":
        key = ("cl",) + e.args
        if key not in pairs:
            pairs[key] = geomops.intersect_conic_line(parents[0], parents[1])
        pair = pairs[key]
        return pair.p1 if e.branch == 1 else pair.p2
    if e.kind == "CircleCircleIntersect":
        key = ("cc",) + e.args
        if key not in pairs:
            try:
                pairs[key] = geomops.intersect_circles_from_conics(parents[0], parents[1])
            except geomops.IdenticalCircles:
                pairs[key] = None
        pair = pairs[key]
        if pair is None:
            return _zero_like(e)
        return pair.p1 if e.branch == 1 else pair.p2
    if e.kind == "VonStaudtSum":
        return geomops.von_staudt_sum(*parents).sum
    raise ConstructionError(f"unhandled kind {e.kind}", e.id)


def _degenerate(v) -> bool:
    return v.is_degenerate_zero if isinstance(v, ConicMat) else v.is_degenerate


def _zero_like(e: Element):
    z = from_real(0.0)
    if e.kind == "Circle":
        return ConicMat(z, z, z, z, z, z)
    kind = Kind.LINE if e.kind == "LineJoin" else Kind.POINT
    return HomVec3(z, z, z, kind=kind)


def default_assignment(c: Construction) -> dict[str, HomVec3]:
    return {fid: _lift(c.by_id(fid).literal) for fid in c.free_ids()}


# -- motion and tracing -----------------------------------------------------------


def _position_at(mp: MotionPath, t) -> HomVec3:
    comps = []
    for a, b in zip(mp.start, mp.end):
        comps.append((1 - t) * from_real(a) + t * from_real(b))
    return point(*comps)


def _moving_assignment(c: Construction, t) -> dict[str, HomVec3]:
    assignment = default_assignment(c)
    for mp in c.paths:
        assignment[mp.element] = _position_at(mp, t)
    return assignment


def induced_path(c: Construction, target: str) -> EvaluablePath:
    """Single-parameter path of one element as the motion paths play out."""
    tgt = c.by_id(target)

    def evaluator(t: LcfNumber):
        vals = _evaluate_over(c, _moving_assignment(c, t))
        v = vals[tgt.id]
        return v.entries if isinstance(v, ConicMat) else v.components

    dim = 6 if tgt.kind == "Circle" else 3
    return EvaluablePath(dimension=dim, evaluate=evaluator, domain=(0.0, 1.0))


def trace(
    c: Construction, target: str, samples: int
) -> list[tuple[float, str, Optional[tuple[complex, ...]]]]:
    """Sample the motion paths; resolve the target wherever it degenerates."""
    if not c.paths:
        raise ConstructionError("construction has no motion paths")
    c.by_id(target)
    if samples < 2:
        raise ConstructionError("need at least two samples")
    path = induced_path(c, target)
    rows = []
    for i in range(samples):
        t = i / (samples - 1)
        vals = _evaluate_over(c, _moving_assignment(c, t))
        v = vals[target]
        comps = v.entries if isinstance(v, ConicMat) else v.components
        if all(x.is_zero() for x in comps):
            outcome = resolve_at(path, t)
            value = outcome.value.vec if outcome.value is not None else None
            rows.append((t, outcome.status.value, value))
        else:
            rows.append((t, "regular", psh_seq(comps).vec))
    return rows


# -- spatial maps for extended checks ----------------------------------------------


def free_coordinate_layout(c: Construction) -> list[tuple[str, int]]:
    """(element id, coordinate index) per free scalar; points contribute x, y."""
    layout = []
    for fid in c.free_ids():
        layout.append((fid, 0))
        layout.append((fid, 1))
    return layout


def spatial_map_for(
    c: Construction, target: str, assignment: Optional[dict[str, HomVec3]] = None
) -> tuple[SpatialMap, list[complex]]:
    """Map from the stacked free (x, y) coordinates to the target element,
    based at the given assignment (the literals when omitted)."""
    tgt = c.by_id(target)
    layout = free_coordinate_layout(c)
    base = assignment if assignment is not None else default_assignment(c)
    v0: list[complex] = []
    for fid, idx in layout:
        v0.append(base[fid].components[idx].shadow())

    z_parts = {fid: base[fid].z for fid in c.free_ids()}

    def evaluator(coords: Sequence[LcfNumber]):
        assignment = {}
        for pos, (fid, idx) in enumerate(layout):
            if idx == 0:
                assignment[fid] = [coords[pos], None, z_parts[fid]]
            else:
                assignment[fid][1] = coords[pos]
        lifted = {fid: point(*comps) for fid, comps in assignment.items()}
        vals = _evaluate_over(c, lifted)
        v = vals[tgt.id]
        return v.entries if isinstance(v, ConicMat) else v.components

    out_dim = 6 if tgt.kind == "Circle" else 3
    return SpatialMap(len(layout), out_dim, evaluator), v0


def constraint_projector(
    c: Construction, base: Optional[dict[str, HomVec3]] = None
) -> Callable[[list[LcfNumber]], list[LcfNumber]]:
    """Project raw free-coordinate perturbations onto the allowed subspace:
    a perturbed semi-free point is re-projected onto its constraint line.

    The constraint line is evaluated at the perturbed configuration over the
    Levi-Civita scalars, so moving constraint lines (a point bound to a
    dependent join) couple the perturbations exactly, with no linearization.
    """
    layout = free_coordinate_layout(c)
    semifree = [e for e in c.elements if e.kind == "SemiFreePointOnLine"]
    if not semifree:
        return lambda delta: delta
    base_assignment = base if base is not None else default_assignment(c)

    def project(delta: list[LcfNumber]) -> list[LcfNumber]:
        positions = {}
        for pos, (fid, idx) in enumerate(layout):
            if idx == 0:
                positions[fid] = [
                    base_assignment[fid].x + delta[pos],
                    None,
                    base_assignment[fid].z,
                ]
            else:
                positions[fid][1] = base_assignment[fid].y + delta[pos]
        lifted = {fid: point(*comps) for fid, comps in positions.items()}
        vals = _evaluate_over(c, lifted)
        out = list(delta)
        for e in semifree:
            line_val = vals[e.args[0]]
            if line_val.is_degenerate:
                continue
            a, b, w = line_val.components
            p = lifted[e.id]
            n2 = a * a.conjugate() + b * b.conjugate()
            if n2.is_zero():
                continue
            # affine projection in the z = 1 chart; z stays untouched
            t = (a * p.x + b * p.y + w * p.z) * n2.inv()
            ix = layout.index((e.id, 0))
            iy = layout.index((e.id, 1))
            out[ix] = out[ix] - t * a.conjugate()
            out[iy] = out[iy] - t * b.conjugate()
        return out

    return project


# -- built-in comparison tables -----------------------------------------------------

SCENARIOS = ("circle-tangent", "vonstaudt-merge", "vonstaudt-online")


def _lead_str(x: LcfNumber) -> str:
    if x.is_zero():
        return "0"
    q, c = x.leading()
    cs = f"{c.real:.4f}" if abs(c.imag) < 1e-9 else f"({c.real:.4f}{c.imag:+.4f}j)"
    return f"{cs}*d^{q}"


def _fmt_std(vec: Sequence[complex]) -> str:
    parts = []
    for c in vec:
        parts.append(f"{c.real:.4f}" if abs(c.imag) < 1e-9 else f"{c.real:.4f}{c.imag:+.4f}j")
    return "(" + ", ".join(parts) + ")"


def _fmt_raw(v: HomVec3) -> str:
    return "(" + ", ".join(_lead_str(comp) for comp in v.components) + ")"


def _table(headers, columns) -> str:
    rows = ["standard", "non-standard", "psh"]
    widths = [max(len(rows[i]) for i in range(3))] + [
        max(len(h), *(len(col[i]) for i in range(3))) for h, col in zip(headers, columns)
    ]
    lines = []
    head = ["".ljust(widths[0])] + [h.ljust(w) for h, w in zip(headers, widths[1:])]
    lines.append("  ".join(head).rstrip())
    for i in range(3):
        row = [rows[i].ljust(widths[0])] + [
            col[i].ljust(w) for col, w in zip(columns, widths[1:])
        ]
        lines.append("  ".join(row).rstrip())
    return "\n".join(lines)


def _column(v: HomVec3, std: HomVec3) -> list[str]:
    std_vec = tuple(comp.shadow() for comp in std.components)
    p = "degenerate" if v.is_degenerate else _fmt_std(psh(v).vec)
    return [_fmt_std(std_vec), _fmt_raw(v), p]


def scenario_construction(scenario: str) -> Construction:
    if scenario == "circle-tangent":
        return loads_construction(TANGENT_CIRCLES_DOC)
    if scenario in ("vonstaudt-merge", "vonstaudt-online"):
        return loads_construction(VON_STAUDT_DOC)
    raise ConstructionError(f"unknown scenario {scenario!r}")


def run_table(scenario: str) -> str:
    """The three-row standard / non-standard / psh comparison for one of the
    built-in degenerate scenarios, values to 4 decimals."""
    if scenario == "circle-tangent":
        return _table_circle_tangent()
    if scenario == "vonstaudt-merge":
        return _table_vonstaudt_merge()
    if scenario == "vonstaudt-online":
        return _table_vonstaudt_online()
    raise ConstructionError(f"unknown scenario {scenario!r}")


def tangent_circle_parts():
    """Perturbed tangential-circle intersection: the two circles, the radical
    line scaled to the reference representative, its infinitesimal
    perturbation, both intersection points and their join."""
    d = d_pow(1)
    c1 = geomops.CircleSpec(point(0.0, 0.0, 1.0), from_real(1.0))
    c2 = geomops.CircleSpec(point(2.0, 0.0, 1.0), from_real(1.0))
    rad = geomops.radical_line(c1, c2)
    # reference representative: -1/6 of the normalized-form difference
    scale = from_real(-1.0 / 6.0)
    lp = line(rad.x * scale - d, rad.y * scale - d, rad.z * scale - d)
    pair = geomops.intersect_conic_line(geomops.circle_conic(c1), lp)
    join = geomops.safe_join(pair.p1, pair.p2)
    return c1, c2, lp, pair, join


def _table_circle_tangent() -> str:
    c1, c2, _, pair, join = tangent_circle_parts()
    std_pair = geomops.intersect_circles(c1, c2)
    std_join = geomops.safe_join(std_pair.p1, std_pair.p2)
    cols = []
    for v, std in ((pair.p1, std_pair.p1), (pair.p2, std_pair.p2), (join, std_join)):
        std_vec = tuple(comp.shadow() for comp in std.components)
        p = "degenerate" if v.is_degenerate else _fmt_std(psh(v).vec)
        cols.append([_fmt_std(std_vec), _fmt_raw(v), p])
    return "scenario: circle-tangent\n" + _table(["p1", "p2", "join(p1,p2)"], cols)


def vonstaudt_points():
    z = point(0.0, 0.0, 1.0)
    inf = point(1.0, 0.0, 0.0)
    x = point(2.0, 0.0, 1.0)
    y = point(4.0, 0.0, 1.0)
    return z, inf, x, y


def vonstaudt_merge_parts():
    """E = F with both auxiliary points perturbed: E' and F' split by 4d in x."""
    d = d_pow(1)
    z, inf, x, y = vonstaudt_points()
    eps = 4 * (d + d * d)
    e = point(from_real(4.0) + eps, from_real(2.0) + eps, from_real(1.0))
    f = point(from_real(4.0) + eps + 4 * d, from_real(2.0) + eps, from_real(1.0))
    return z, inf, x, y, e, f, geomops.von_staudt_sum(z, inf, x, y, e, f)


def vonstaudt_online_parts():
    """E moved onto the base line at x, lifted infinitesimally; F follows on
    join(inf, E')."""
    d = d_pow(1)
    z, inf, x, y = vonstaudt_points()
    e = point(from_real(2.0) + 2 * d, 2 * d, from_real(1.0))
    f = point(from_real(4.0), 2 * d, from_real(1.0))
    return z, inf, x, y, e, f, geomops.von_staudt_sum(z, inf, x, y, e, f)


def _std_vonstaudt(e_std, f_std):
    z, inf, x, y = vonstaudt_points()
    return geomops.von_staudt_sum(z, inf, x, y, e_std, f_std)


def _shadow_point(v: HomVec3) -> HomVec3:
    return point(*[from_real(c.shadow()) for c in v.components])


def _table_vonstaudt(parts, title: str) -> str:
    z, inf, x, y, e, f, res = parts
    std = _std_vonstaudt(_shadow_point(e), _shadow_point(f))
    headers = ["E'", "F'", "G'", "H'", "(x+y)'",
               "join(inf,E')", "join(0,E')", "join(y,F')", "join(inf,G')", "join(x,E')", "m'"]
    pairs = [
        (e, _shadow_point(e)),
        (f, _shadow_point(f)),
        (res.g, std.g),
        (res.h, std.h),
        (res.sum, std.sum),
        (res.join_inf_e, std.join_inf_e),
        (res.join_zero_e, std.join_zero_e),
        (res.join_y_f, std.join_y_f),
        (res.join_inf_g, std.join_inf_g),
        (res.join_x_e, std.join_x_e),
        (res.m, std.m),
    ]
    cols = [_column(v, s) for v, s in pairs]
    return f"scenario: {title}\n" + _table(headers, cols)


def _table_vonstaudt_merge() -> str:
    return _table_vonstaudt(vonstaudt_merge_parts(), "vonstaudt-merge")


def _table_vonstaudt_online() -> str:
    return _table_vonstaudt(vonstaudt_online_parts(), "vonstaudt-online")


# -- bundled documents -------------------------------------------------------------

TANGENT_CIRCLES_DOC = """
{
  "elements": [
    {"id": "MC", "kind": "FixedPoint", "literal": [0, 0, 1]},
    {"id": "MD", "kind": "FreePoint", "literal": [2, 0, 1]},
    {"id": "C", "kind": "Circle", "args": ["MC"], "radius": 1.0},
    {"id": "D", "kind": "Circle", "args": ["MD"], "radius": 1.0},
    {"id": "p1", "kind": "CircleCircleIntersect", "args": ["C", "D"], "branch": 1},
    {"id": "p2", "kind": "CircleCircleIntersect", "args": ["C", "D"], "branch": 2},
    {"id": "j", "kind": "LineJoin", "args": ["p1", "p2"]}
  ],
  "paths": [
    {"element": "MD", "from": [1.5, 0, 1], "to": [2.5, 0, 1]}
  ]
}
"""

VON_STAUDT_DOC = """
{
  "elements": [
    {"id": "zero", "kind": "FixedPoint", "literal": [0, 0, 1]},
    {"id": "inf", "kind": "FixedPoint", "literal": [1, 0, 0]},
    {"id": "x", "kind": "FixedPoint", "literal": [2, 0, 1]},
    {"id": "y", "kind": "FixedPoint", "literal": [4, 0, 1]},
    {"id": "E", "kind": "FreePoint", "literal": [4, 2, 1]},
    {"id": "jinfE", "kind": "LineJoin", "args": ["inf", "E"]},
    {"id": "F", "kind": "SemiFreePointOnLine", "args": ["jinfE"], "literal": [4, 2, 1]},
    {"id": "l", "kind": "LineJoin", "args": ["zero", "inf"]},
    {"id": "j0E", "kind": "LineJoin", "args": ["zero", "E"]},
    {"id": "jyF", "kind": "LineJoin", "args": ["y", "F"]},
    {"id": "G", "kind": "PointMeet", "args": ["j0E", "jyF"]},
    {"id": "jinfG", "kind": "LineJoin", "args": ["inf", "G"]},
    {"id": "jxE", "kind": "LineJoin", "args": ["x", "E"]},
    {"id": "H", "kind": "PointMeet", "args": ["jinfG", "jxE"]},
    {"id": "m", "kind": "LineJoin", "args": ["F", "H"]},
    {"id": "sum", "kind": "PointMeet", "args": ["l", "m"]}
  ]
}
"""

ORTHO_BISECTOR_DOC = """
{
  "elements": [
    {"id": "A", "kind": "FixedPoint", "literal": [0, 0, 1]},
    {"id": "B", "kind": "FreePoint", "literal": [1.5, 0, 1]},
    {"id": "CA", "kind": "Circle", "args": ["A"], "radius": 1.0},
    {"id": "CB", "kind": "Circle", "args": ["B"], "radius": 1.0},
    {"id": "p1", "kind": "CircleCircleIntersect", "args": ["CA", "CB"], "branch": 1},
    {"id": "p2", "kind": "CircleCircleIntersect", "args": ["CA", "CB"], "branch": 2},
    {"id": "bisector", "kind": "LineJoin", "args": ["p1", "p2"]}
  ],
  "paths": [
    {"element": "B", "from": [1.5, 0, 1], "to": [2.5, 0, 1]}
  ]
}
"""
