"""Automatic removal of singularities of projective-valued paths and maps.

Three resolvers:

* ``resolve_at`` probes a one-parameter path at ``t0 +/- d`` with the
  infinitesimal ``d`` and compares projective shadows; matching shadows give
  the continuous extension exactly, with no numeric perturbation residue.
* ``resolve_extended`` additionally checks spatial stability by probing a map
  of the free-element coordinates with several random infinitesimal
  perturbations (a heuristic: a handful of draws decides quickly).
* ``direct_derivation`` handles polynomial paths by exact differentiation;
  the first nonvanishing derivative at the singularity is a nonzero multiple
  of the continuation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .lcf import DivisionByZero, LcfNumber, RootOfZero, d_pow, from_real
from .projgeo import PshResult, ZeroVector, proj_close_seq, psh_seq, TOL_PROJ

__all__ = [
    "EvaluablePath",
    "SpatialMap",
    "PerturbationSpec",
    "ResolveStatus",
    "ResolveOutcome",
    "EvaluationError",
    "NotPolynomial",
    "EmptyPerturbationSpace",
    "resolve_at",
    "resolve_extended",
    "direct_derivation",
    "classify_singularities",
]


class EvaluationError(RuntimeError):
    def __init__(self, message: str, at=None):
        super().__init__(message if at is None else f"{message} (at t={at})")
        self.at = at


class NotPolynomial(TypeError):
    pass


class EmptyPerturbationSpace(RuntimeError):
    pass


@dataclass
class EvaluablePath:
    """A path t -> C^(d+1) evaluated over Levi-Civita scalars.

    ``poly``, when present, holds per-component coefficient lists (ascending
    degree, exact rationals) agreeing with the evaluator; it unlocks the
    derivative-based resolver.
    """

    dimension: int
    evaluate: Callable[[LcfNumber], Sequence[LcfNumber]]
    poly: Optional[Sequence[Sequence[Fraction]]] = None
    domain: tuple[float, float] = (0.0, 1.0)


@dataclass
class SpatialMap:
    """A map from free-element coordinates to an output coordinate vector."""

    in_dimension: int
    out_dimension: int
    evaluate: Callable[[Sequence[LcfNumber]], Sequence[LcfNumber]]


@dataclass
class PerturbationSpec:
    """How to draw infinitesimal perturbations of the free coordinates.

    Each selected coordinate receives c*d with c uniform on +/-[0.1, 1]; the
    constraint projector (for semi-free elements) maps a raw perturbation into
    the allowed subspace and emitted perturbations are fixed points of it.
    """

    count: int = 5
    seed: int = 0
    mask: Optional[Sequence[int]] = None
    projector: Optional[Callable[[list[LcfNumber]], list[LcfNumber]]] = None


class ResolveStatus(Enum):
    REGULAR = "regular"
    REMOVABLE = "removable"
    IDENTICALLY_ZERO = "identically-zero"
    NOT_REMOVABLE = "not-removable"


@dataclass
class ResolveOutcome:
    status: ResolveStatus
    value: Optional[PshResult] = None
    order: Optional[Fraction] = None
    evidence: list[tuple[complex, ...]] = field(default_factory=list)
    one_sided: bool = False
    n: Optional[int] = None
    seed: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.status in (ResolveStatus.REGULAR, ResolveStatus.REMOVABLE)


_SINGULAR_EVAL_ERRORS = (RootOfZero, DivisionByZero, ZeroVector)


def _eval_vector(path_eval, t: LcfNumber, at) -> list[LcfNumber]:
    try:
        v = list(path_eval(t))
    except _SINGULAR_EVAL_ERRORS:
        raise
    except Exception as exc:  # noqa: BLE001 - wrap arbitrary evaluator faults
        raise EvaluationError(str(exc), at=at) from exc
    return v


def _is_zero_vec(v: Sequence[LcfNumber]) -> bool:
    return all(c.is_zero() for c in v)


def resolve_at(path: EvaluablePath, t0: float, tol: float = TOL_PROJ) -> ResolveOutcome:
    """Continuation of a path at t0 by infinitesimal probing.

    Nonzero standard value: regular.  Otherwise the shadows of the two probes
    t0+d and t0-d must agree (squeezing of the one-sided limits); their common
    value is the continuation and the removed leading exponent its order.
    At a domain endpoint only the inward probe exists and the outcome is
    flagged one-sided.
    """
    lo, hi = path.domain
    at_lo, at_hi = t0 == lo, t0 == hi
    singular = False
    try:
        v0 = _eval_vector(path.evaluate, from_real(t0), t0)
        singular = _is_zero_vec(v0)
    except _SINGULAR_EVAL_ERRORS:
        singular = True
    if not singular:
        return ResolveOutcome(ResolveStatus.REGULAR, value=psh_seq(v0), order=Fraction(0))

    d = d_pow(1)
    probes: list[PshResult] = []
    for delta in ((d,) if at_lo else (-d,) if at_hi else (d, -d)):
        try:
            v = _eval_vector(path.evaluate, from_real(t0) + delta, t0)
        except _SINGULAR_EVAL_ERRORS as exc:
            raise EvaluationError(f"probe evaluation degenerate: {exc}", at=t0) from exc
        if _is_zero_vec(v):
            return ResolveOutcome(ResolveStatus.IDENTICALLY_ZERO, one_sided=at_lo or at_hi)
        probes.append(psh_seq(v))

    if len(probes) == 1:
        return ResolveOutcome(
            ResolveStatus.REMOVABLE,
            value=probes[0],
            order=probes[0].scale_exponent,
            evidence=[p.vec for p in probes],
            one_sided=True,
        )
    if proj_close_seq(probes[0].vec, probes[1].vec, tol):
        return ResolveOutcome(
            ResolveStatus.REMOVABLE,
            value=probes[0],
            order=probes[0].scale_exponent,
            evidence=[p.vec for p in probes],
        )
    return ResolveOutcome(ResolveStatus.NOT_REMOVABLE, evidence=[p.vec for p in probes])


def resolve_extended(
    smap: SpatialMap,
    v0: Sequence[float | complex],
    spec: PerturbationSpec,
    tol: float = TOL_PROJ,
) -> ResolveOutcome:
    """Spatial stability check: probe the map with ``spec.count`` independent
    infinitesimal perturbations of the free coordinates and demand that all
    projective shadows coincide.  Heuristic but decisive in practice; the
    outcome records n and seed for reproducibility."""
    if spec.count < 2:
        raise ValueError("need at least two perturbations")
    rng = random.Random(spec.seed)
    k = smap.in_dimension
    mask = list(spec.mask) if spec.mask is not None else list(range(k))

    outcomes: list[PshResult] = []
    for _ in range(spec.count):
        delta = _draw_perturbation(rng, k, mask, spec.projector)
        probe_in = [from_real(v0[j]) + delta[j] for j in range(k)]
        v = _eval_vector(smap.evaluate, probe_in, None)
        if _is_zero_vec(v):
            return ResolveOutcome(
                ResolveStatus.IDENTICALLY_ZERO, n=spec.count, seed=spec.seed
            )
        outcomes.append(psh_seq(v))

    # all pairs: with a tolerance, closeness is not transitive
    for i in range(len(outcomes)):
        for j in range(i + 1, len(outcomes)):
            if not proj_close_seq(outcomes[i].vec, outcomes[j].vec, tol):
                return ResolveOutcome(
                    ResolveStatus.NOT_REMOVABLE,
                    evidence=[p.vec for p in outcomes],
                    n=spec.count,
                    seed=spec.seed,
                )
    return ResolveOutcome(
        ResolveStatus.REMOVABLE,
        value=outcomes[0],
        order=outcomes[0].scale_exponent,
        evidence=[p.vec for p in outcomes],
        n=spec.count,
        seed=spec.seed,
    )


def _draw_perturbation(rng, k, mask, projector) -> list[LcfNumber]:
    d = d_pow(1)
    for _ in range(32):
        delta = [from_real(0.0)] * k
        for j in mask:
            c = rng.uniform(0.1, 1.0) * (1 if rng.random() < 0.5 else -1)
            delta[j] = c * d
        if projector is not None:
            delta = list(projector(delta))
        if not _is_zero_vec(delta):
            return delta
    raise EmptyPerturbationSpace("constraint projector admits no nonzero perturbation")


def direct_derivation(
    path: EvaluablePath, t0: float, k_max: int = 8
) -> ResolveOutcome:
    """Resolve a polynomial path by exact differentiation.

    Returns the first nonvanishing derivative vector at t0 (k = 0 means the
    path was regular there); if everything through k_max vanishes the path is
    identically zero to that order.
    """
    if path.poly is None:
        raise NotPolynomial("path carries no polynomial form")
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    t = Fraction(t0)
    coeffs = [list(map(Fraction, comp)) for comp in path.poly]
    for k in range(k_max + 1):
        vec = tuple(_poly_eval(c, t) for c in coeffs)
        if any(vec):
            shadows = tuple(complex(v) for v in vec)
            status = ResolveStatus.REGULAR if k == 0 else ResolveStatus.REMOVABLE
            return ResolveOutcome(status, value=_psh_standard(shadows), order=Fraction(k))
        coeffs = [_poly_diff(c) for c in coeffs]
    return ResolveOutcome(ResolveStatus.IDENTICALLY_ZERO, order=Fraction(k_max))


def _poly_eval(coeffs: Sequence[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _poly_diff(coeffs: Sequence[Fraction]) -> list[Fraction]:
    return [c * i for i, c in enumerate(coeffs)][1:]


def _psh_standard(vec: Sequence[complex]) -> PshResult:
    pivot = max(range(len(vec)), key=lambda i: (abs(vec[i]), -i))
    s = vec[pivot]
    return PshResult(tuple(c / s for c in vec), Fraction(0))


def classify_singularities(
    path: EvaluablePath, domain: Optional[tuple[float, float]] = None, samples: int = 101
) -> list[tuple[float, ResolveOutcome]]:
    """Scan a domain uniformly and resolve wherever the standard evaluation
    collapses (all components pruned to zero, or the evaluator hits a radical
    or division degeneracy)."""
    if samples < 2:
        raise ValueError("need at least two samples")
    lo, hi = domain if domain is not None else path.domain
    out: list[tuple[float, ResolveOutcome]] = []
    for i in range(samples):
        t = lo + (hi - lo) * i / (samples - 1)
        try:
            v = _eval_vector(path.evaluate, from_real(t), t)
            degenerate = _is_zero_vec(v)
        except _SINGULAR_EVAL_ERRORS:
            degenerate = True
        if degenerate:
            scan_path = EvaluablePath(path.dimension, path.evaluate, path.poly, (lo, hi))
            out.append((t, resolve_at(scan_path, t)))
    return out
