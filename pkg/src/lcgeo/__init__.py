"""Projective geometric constructions over the complex Levi-Civita field,
with automatic removal (or rejection) of singularities of dependent elements."""

from .lcf import (
    DEFAULT_WINDOW,
    EPS_PRUNE,
    DivisionByZero,
    EmptySeries,
    LcfNumber,
    MagnitudeClass,
    RootOfZero,
    UnlimitedShadow,
    d,
    d_pow,
    from_real,
    one,
    parse,
    render,
    zero,
)
from .projgeo import (
    ConicMat,
    HomVec3,
    Kind,
    PshResult,
    ZeroVector,
    appreciable_rep,
    almost_incident,
    bracket,
    is_almost_far,
    join_star,
    line,
    meet_star,
    point,
    proj_close,
    psh,
    psh_seq,
)
from .geomops import (
    CircleSpec,
    IntersectionPair,
    circle_conic,
    conic_center,
    cross_ratio,
    intersect_circles,
    intersect_conic_line,
    midpoint_eff,
    midpoint_mu,
    radical_line,
    von_staudt_sum,
)
from .desing import (
    EvaluablePath,
    PerturbationSpec,
    ResolveOutcome,
    ResolveStatus,
    SpatialMap,
    classify_singularities,
    direct_derivation,
    resolve_at,
    resolve_extended,
)
from .construct import (
    Construction,
    Element,
    MotionPath,
    evaluate,
    load_construction,
    loads_construction,
    run_table,
    trace,
)

__version__ = "0.1.0"
