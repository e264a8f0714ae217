"""Points, lines and conics of the projective plane over the Levi-Civita field.

The operations mirror standard projective geometry, but every join/meet first
rescales its inputs to appreciable representatives (largest component divided
out), and the projective shadow maps a perturbed object back to the standard
object it is infinitely close to.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lcf import LcfNumber, MagnitudeClass, from_real

__all__ = [
    "Kind",
    "HomVec3",
    "ConicMat",
    "PshResult",
    "ZeroVector",
    "point",
    "line",
    "appreciable_rep",
    "psh",
    "psh_seq",
    "join_star",
    "meet_star",
    "cross",
    "bracket",
    "almost_incident",
    "proj_close",
    "proj_close_seq",
    "is_almost_far",
    "TOL_PROJ",
]

TOL_PROJ = 1e-6

LINE_AT_INFINITY_COORDS = (0.0, 0.0, 1.0)


class ZeroVector(ValueError):
    """A degenerate (all-zero) vector where a projective object was needed."""


class Kind(enum.Enum):
    POINT = "point"
    LINE = "line"


@dataclass(frozen=True)
class HomVec3:
    """Homogeneous 3-vector over the Levi-Civita field.

    Zero vectors are legal, flagged values (``is_degenerate``); they mark the
    collapsed results the engine later tries to resolve, and are never valid
    projective objects themselves.
    """

    x: LcfNumber
    y: LcfNumber
    z: LcfNumber
    kind: Kind = Kind.POINT

    @property
    def components(self) -> tuple[LcfNumber, LcfNumber, LcfNumber]:
        return (self.x, self.y, self.z)

    @property
    def is_degenerate(self) -> bool:
        return self.x.is_zero() and self.y.is_zero() and self.z.is_zero()

    def scaled(self, s) -> "HomVec3":
        return HomVec3(self.x * s, self.y * s, self.z * s, self.kind)

    def __add__(self, other: "HomVec3") -> "HomVec3":
        return HomVec3(self.x + other.x, self.y + other.y, self.z + other.z, self.kind)

    def dual(self) -> "HomVec3":
        k = Kind.LINE if self.kind is Kind.POINT else Kind.POINT
        return HomVec3(self.x, self.y, self.z, k)

    def shadow_tuple(self) -> tuple[complex, complex, complex]:
        return tuple(c.shadow() for c in self.components)

    def __repr__(self) -> str:
        return f"HomVec3({self.x}, {self.y}, {self.z}, {self.kind.value})"


def point(x, y, z, window=None) -> HomVec3:
    cs = [c if isinstance(c, LcfNumber) else from_real(c) for c in (x, y, z)]
    return HomVec3(*cs, kind=Kind.POINT)


def line(a, b, c) -> HomVec3:
    cs = [v if isinstance(v, LcfNumber) else from_real(v) for v in (a, b, c)]
    return HomVec3(*cs, kind=Kind.LINE)


def line_at_infinity() -> HomVec3:
    return line(*LINE_AT_INFINITY_COORDS)


@dataclass(frozen=True)
class ConicMat:
    """Symmetric 3x3 conic matrix; upper triangle stored."""

    m11: LcfNumber
    m12: LcfNumber
    m13: LcfNumber
    m22: LcfNumber
    m23: LcfNumber
    m33: LcfNumber

    @property
    def entries(self) -> tuple[LcfNumber, ...]:
        return (self.m11, self.m12, self.m13, self.m22, self.m23, self.m33)

    @property
    def is_degenerate_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def rows(self):
        return (
            (self.m11, self.m12, self.m13),
            (self.m12, self.m22, self.m23),
            (self.m13, self.m23, self.m33),
        )

    def apply(self, v: HomVec3) -> tuple[LcfNumber, LcfNumber, LcfNumber]:
        x, y, z = v.components
        return (
            self.m11 * x + self.m12 * y + self.m13 * z,
            self.m12 * x + self.m22 * y + self.m23 * z,
            self.m13 * x + self.m23 * y + self.m33 * z,
        )

    def quad_form(self, v: HomVec3) -> LcfNumber:
        ax, ay, az = self.apply(v)
        x, y, z = v.components
        return x * ax + y * ay + z * az

    def scaled(self, s) -> "ConicMat":
        return ConicMat(*(e * s for e in self.entries))

    def sub(self, other: "ConicMat") -> "ConicMat":
        return ConicMat(*(a - b for a, b in zip(self.entries, other.entries)))


@dataclass(frozen=True)
class PshResult:
    """Standard homogeneous vector recovered from a perturbed one.

    ``scale_exponent`` is the leading magnitude divided out during
    normalization; for a perturbed singular evaluation it is the order of the
    removable prefactor.
    """

    vec: tuple[complex, ...]
    scale_exponent: Fraction


# -- appreciable normalization ------------------------------------------------


def _pivot_index(components: Sequence[LcfNumber]) -> int:
    """Component of greatest magnitude: smallest leading exponent, ties by
    larger leading-coefficient magnitude, remaining ties by lowest index."""
    best = -1
    best_key = None
    for i, c in enumerate(components):
        if c.is_zero():
            continue
        q, a = c.leading()
        key = (q, -abs(a))
        if best_key is None or key < best_key:
            best, best_key = i, key
    if best < 0:
        raise ZeroVector("all components are zero")
    return best


def appreciable_seq(components: Sequence[LcfNumber]) -> tuple[list[LcfNumber], Fraction]:
    """Divide a coordinate vector by its greatest-magnitude component.

    Division is by the component itself (not its absolute value), so the pivot
    slot becomes exactly 1.  Returns the rescaled components and the leading
    exponent that was removed.
    """
    i = _pivot_index(components)
    pivot = components[i]
    q0, _ = pivot.leading()
    inv = pivot.inv()
    out = [c if c.is_zero() else c * inv for c in components]
    out[i] = from_real(1.0, pivot.window)
    return out, q0


def appreciable_rep(v: HomVec3) -> HomVec3:
    if v.is_degenerate:
        raise ZeroVector("appreciable representative of a degenerate vector")
    comps, _ = appreciable_seq(v.components)
    return HomVec3(*comps, kind=v.kind)


def psh_seq(components: Sequence[LcfNumber]) -> PshResult:
    comps, q0 = appreciable_seq(components)
    return PshResult(tuple(c.shadow() for c in comps), q0)


def psh(v: HomVec3) -> PshResult:
    """Projective shadow: componentwise shadow of the appreciable representative."""
    if v.is_degenerate:
        raise ZeroVector("projective shadow of a degenerate vector")
    return psh_seq(v.components)


# -- incidence operations ------------------------------------------------------


def cross(a: Sequence[LcfNumber], b: Sequence[LcfNumber]) -> tuple[LcfNumber, LcfNumber, LcfNumber]:
    a1, a2, a3 = a
    b1, b2, b3 = b
    return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)


def join_star(p: HomVec3, q: HomVec3) -> HomVec3:
    """Appreciable join: cross product of appreciable representatives.

    The result may be infinitesimal or degenerate; both are legal outputs.
    """
    pa = appreciable_rep(p)
    qa = appreciable_rep(q)
    return HomVec3(*cross(pa.components, qa.components), kind=Kind.LINE)


def meet_star(l: HomVec3, m: HomVec3) -> HomVec3:
    la = appreciable_rep(l)
    ma = appreciable_rep(m)
    return HomVec3(*cross(la.components, ma.components), kind=Kind.POINT)


def inner(p: HomVec3, l: HomVec3) -> LcfNumber:
    return p.x * l.x + p.y * l.y + p.z * l.z


def almost_incident(p: HomVec3, l: HomVec3) -> bool:
    """Inner product of the appreciable representatives is zero or infinitesimal."""
    pa = appreciable_rep(p)
    la = appreciable_rep(l)
    return inner(pa, la).classify() in (MagnitudeClass.ZERO, MagnitudeClass.INFINITESIMAL)


def is_almost_far(p: HomVec3) -> bool:
    za = appreciable_rep(p).z
    return za.classify() in (MagnitudeClass.ZERO, MagnitudeClass.INFINITESIMAL)


def bracket(a: HomVec3, b: HomVec3, c: HomVec3) -> LcfNumber:
    """Determinant [a, b, c] over the Levi-Civita field."""
    cx, cy, cz = cross(a.components, b.components)
    return cx * c.x + cy * c.y + cz * c.z


# -- standard-vector comparison -------------------------------------------------


def _std_pivot(vec: Sequence[complex]) -> int:
    best, mag = 0, abs(vec[0])
    for i, c in enumerate(vec):
        a = abs(c)
        if a > mag:
            best, mag = i, a
    return best


def proj_close_seq(a: Sequence[complex], b: Sequence[complex], tol: float = TOL_PROJ) -> bool:
    """Componentwise closeness of standard vectors after pivot alignment."""
    if len(a) != len(b):
        return False
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    if ma == 0 or mb == 0:
        return ma == mb
    i = _std_pivot(a)
    if abs(b[i]) < tol * mb:
        return False
    sa, sb = a[i], b[i]
    return all(abs(a[j] / sa - b[j] / sb) <= tol for j in range(len(a)))


def proj_close(a, b, tol: float = TOL_PROJ) -> bool:
    """Shadows of appreciable representatives agree up to a scalar."""
    va = _as_shadow_seq(a)
    vb = _as_shadow_seq(b)
    return proj_close_seq(va, vb, tol)


def _as_shadow_seq(v) -> tuple[complex, ...]:
    if isinstance(v, HomVec3):
        if v.is_degenerate:
            return (0.0, 0.0, 0.0)
        return psh(v).vec
    if isinstance(v, ConicMat):
        if v.is_degenerate_zero:
            return (0.0,) * 6
        return psh_seq(v.entries).vec
    if isinstance(v, PshResult):
        return v.vec
    return tuple(complex(c) for c in v)


def chordal_distance(a: Sequence[complex], b: Sequence[complex]) -> float:
    """Distance between projective points as the sine of the angle between rays."""
    na = sum(abs(c) ** 2 for c in a) ** 0.5
    nb = sum(abs(c) ** 2 for c in b) ** 0.5
    if na == 0 or nb == 0:
        return 1.0
    ip = sum(ca * cb.conjugate() for ca, cb in zip(a, b))
    c2 = abs(ip) ** 2 / (na * nb) ** 2
    return max(0.0, 1.0 - c2) ** 0.5
