"""Geometric primitive constructions: circles, radical lines, conic/line
intersection with radicals, conic centers, von-Staudt addition and midpoints."""

from __future__ import annotations

from dataclasses import dataclass

from .lcf import LcfNumber, from_real
from .projgeo import (
    ConicMat,
    HomVec3,
    Kind,
    ZeroVector,
    appreciable_rep,
    bracket,
    cross,
    join_star,
    line,
    line_at_infinity,
    meet_star,
)

__all__ = [
    "CircleSpec",
    "IntersectionPair",
    "InvalidCircle",
    "NonIsolatedIntersection",
    "DegenerateQuadratic",
    "IdenticalCircles",
    "UndefinedCrossRatio",
    "circle_conic",
    "conic_center",
    "intersect_conic_line",
    "radical_line",
    "intersect_circles",
    "midpoint_mu",
    "midpoint_eff",
    "von_staudt_sum",
    "VonStaudtResult",
    "cross_ratio",
]


class InvalidCircle(ValueError):
    pass


class NonIsolatedIntersection(ArithmeticError):
    pass


class DegenerateQuadratic(ArithmeticError):
    pass


class IdenticalCircles(ArithmeticError):
    pass


class UndefinedCrossRatio(ArithmeticError):
    pass


@dataclass(frozen=True)
class CircleSpec:
    center: HomVec3
    radius: LcfNumber


@dataclass(frozen=True)
class IntersectionPair:
    p1: HomVec3
    p2: HomVec3


def circle_conic(c: CircleSpec) -> ConicMat:
    """Homogeneous quadratic form of a circle with finite center.

    For center (cx, cy, cz) and radius r the form is
    (x cz - cx z)^2 + (y cz - cy z)^2 - r^2 cz^2 z^2.
    """
    cx, cy, cz = c.center.components
    if cz.is_zero():
        raise InvalidCircle("circle center is a far point")
    r = c.radius
    cz2 = cz * cz
    return ConicMat(
        m11=cz2,
        m12=from_real(0.0),
        m13=-(cx * cz),
        m22=cz2,
        m23=-(cy * cz),
        m33=cx * cx + cy * cy - r * r * cz2,
    )


def conic_center(a: ConicMat) -> HomVec3:
    """Pole of the line at infinity: adjugate(A) * (0,0,1).

    May legitimately return a degenerate vector (singular conic family).
    """
    # third column of the adjugate of a symmetric matrix
    c1 = a.m12 * a.m23 - a.m13 * a.m22
    c2 = a.m12 * a.m13 - a.m11 * a.m23
    c3 = a.m11 * a.m22 - a.m12 * a.m12
    return HomVec3(c1, c2, c3, kind=Kind.POINT)


def _line_basis_points(l: HomVec3) -> tuple[HomVec3, HomVec3]:
    """Two parametrization points of a line: its two largest-magnitude
    cross products with the unit vectors, as appreciable representatives."""
    units = (
        (from_real(1.0), from_real(0.0), from_real(0.0)),
        (from_real(0.0), from_real(1.0), from_real(0.0)),
        (from_real(0.0), from_real(0.0), from_real(1.0)),
    )
    ranked = []
    for idx, e in enumerate(units):
        v = HomVec3(*cross(l.components, e), kind=Kind.POINT)
        if v.is_degenerate:
            continue
        mags = [c.leading() for c in v.components if not c.is_zero()]
        key = min((q, -abs(c)) for q, c in mags)
        ranked.append((key, idx, v))
    ranked.sort(key=lambda t: (t[0], t[1]))
    if len(ranked) < 2:
        raise ZeroVector("degenerate line has no parametrization")
    return appreciable_rep(ranked[0][2]), appreciable_rep(ranked[1][2])


def intersect_conic_line(a: ConicMat, l: HomVec3) -> IntersectionPair:
    """Both intersection points of a conic and a line.

    Parametrizes the line as B + s*C and solves the induced quadratic with the
    field square root, so a perturbed tangency yields two points that differ
    by an infinitesimal.  The "+sqrt" branch is p1.
    """
    if l.is_degenerate:
        raise ZeroVector("cannot intersect with a degenerate line")
    b, c = _line_basis_points(l)
    gamma = a.quad_form(b)
    beta = sum_inner(a.apply(c), b.components)
    alpha = a.quad_form(c)
    if alpha.is_zero() and beta.is_zero() and gamma.is_zero():
        raise NonIsolatedIntersection("line lies on the conic")
    if alpha.is_zero():
        if gamma.is_zero():
            # both basis points lie on the conic and are the intersections
            if beta.is_zero():
                raise DegenerateQuadratic("restricted quadratic vanished")
            return IntersectionPair(b, c)
        # c is on the conic: swap parameter roles so the quadratic stays monic
        b, c = c, b
        alpha, gamma = gamma, alpha
    disc = beta * beta - alpha * gamma
    if disc.is_zero():
        s = -(beta / alpha)
        p = _point_on(b, c, s)
        return IntersectionPair(p, p)
    root = disc.sqrt()
    s1 = (-beta + root) / alpha
    s2 = (-beta - root) / alpha
    return IntersectionPair(_point_on(b, c, s1), _point_on(b, c, s2))


def sum_inner(u, v) -> LcfNumber:
    acc = u[0] * v[0]
    for i in (1, 2):
        acc = acc + u[i] * v[i]
    return acc


def _point_on(b: HomVec3, c: HomVec3, s: LcfNumber) -> HomVec3:
    p = HomVec3(b.x + s * c.x, b.y + s * c.y, b.z + s * c.z, kind=Kind.POINT)
    return appreciable_rep(p)


def _normalized_circle_form(c: CircleSpec) -> tuple[LcfNumber, LcfNumber, LcfNumber]:
    """Coefficients (g, f, w) of x^2 + y^2 + 2g xz + 2f yz + w z^2."""
    cx, cy, cz = c.center.components
    if cz.is_zero():
        raise InvalidCircle("circle center is a far point")
    inv_cz = cz.inv()
    gx = -(cx * inv_cz)
    gy = -(cy * inv_cz)
    w = gx * gx + gy * gy - c.radius * c.radius
    return gx, gy, w


def radical_line(c1: CircleSpec, c2: CircleSpec) -> HomVec3:
    """Line through the two finite intersection points of two circles.

    Each circle form is normalized to x^2+y^2 leading coefficient 1; the
    difference then factors as z times a linear form, and that linear form is
    the radical line.  The circular points I, J at infinity never solve it for
    distinct circles, so they are excluded by construction.
    """
    g1, f1, w1 = _normalized_circle_form(c1)
    g2, f2, w2 = _normalized_circle_form(c2)
    l = line((g1 - g2) * 2, (f1 - f2) * 2, w1 - w2)
    return l


def radical_line_from_conics(a: ConicMat, b: ConicMat) -> HomVec3:
    """Radical line of two circles given by their conic matrices."""
    na = a.m11.inv()
    nb = b.m11.inv()
    return line(
        (a.m13 * na - b.m13 * nb) * 2,
        (a.m23 * na - b.m23 * nb) * 2,
        a.m33 * na - b.m33 * nb,
    )


def intersect_circles(c1: CircleSpec, c2: CircleSpec) -> IntersectionPair:
    """Finite intersection points of two circles via the radical line.

    Identical standard circles have a vanishing radical line and are the
    caller's cue to go through extended continuation; infinitesimally-close
    circles are accepted (their radical line is infinitesimal but nonzero).
    """
    rad = radical_line(c1, c2)
    if rad.is_degenerate:
        raise IdenticalCircles(
            "identical standard circles; resolve through extended continuation"
        )
    return intersect_conic_line(circle_conic(c1), rad)


def intersect_circles_from_conics(a: ConicMat, b: ConicMat) -> IntersectionPair:
    rad = radical_line_from_conics(a, b)
    if rad.is_degenerate:
        raise IdenticalCircles(
            "identical standard circles; resolve through extended continuation"
        )
    return intersect_conic_line(a, rad)


# -- midpoints -----------------------------------------------------------------


def midpoint_mu(x: HomVec3, y: HomVec3) -> HomVec3:
    """Midpoint as a linear combination through the far point of join(X, Y).

    M = [Y, Pinf]_L X + [X, Pinf]_L Y with L = X x* Y.  Coincident inputs
    collapse join(X, Y) and the result is the flagged zero vector (the
    removable singularity this formula carries).
    """
    if x.is_degenerate or y.is_degenerate:
        return _zero_point()
    l_pt = join_star(x, y).dual()
    if l_pt.is_degenerate:
        return _zero_point()
    p_inf = meet_star(l_pt.dual(), line_at_infinity())
    if p_inf.is_degenerate:
        return _zero_point()
    lam = bracket(y, p_inf, l_pt)
    mu = bracket(x, p_inf, l_pt)
    return HomVec3(
        lam * x.x + mu * y.x,
        lam * x.y + mu * y.y,
        lam * x.z + mu * y.z,
        kind=Kind.POINT,
    )


def midpoint_eff(x: HomVec3, y: HomVec3) -> HomVec3:
    """Prefactor-free midpoint M = y3 X + x3 Y."""
    return HomVec3(
        y.z * x.x + x.z * y.x,
        y.z * x.y + x.z * y.y,
        y.z * x.z + x.z * y.z,
        kind=Kind.POINT,
    )


def _zero_point() -> HomVec3:
    z = from_real(0.0)
    return HomVec3(z, z, z, kind=Kind.POINT)


def _zero_line() -> HomVec3:
    z = from_real(0.0)
    return HomVec3(z, z, z, kind=Kind.LINE)


def safe_join(p: HomVec3, q: HomVec3) -> HomVec3:
    if p.is_degenerate or q.is_degenerate:
        return _zero_line()
    return join_star(p, q)


def safe_meet(l: HomVec3, m: HomVec3) -> HomVec3:
    if l.is_degenerate or m.is_degenerate:
        return _zero_point()
    return meet_star(l, m)


# -- von-Staudt addition ---------------------------------------------------------


@dataclass(frozen=True)
class VonStaudtResult:
    """All intermediate values of the von-Staudt sum, for table output."""

    l: HomVec3
    join_inf_e: HomVec3
    join_zero_e: HomVec3
    join_y_f: HomVec3
    g: HomVec3
    join_inf_g: HomVec3
    join_x_e: HomVec3
    h: HomVec3
    m: HomVec3
    sum: HomVec3


def von_staudt_sum(
    zero_pt: HomVec3, inf_pt: HomVec3, x: HomVec3, y: HomVec3, e: HomVec3, f: HomVec3
) -> VonStaudtResult:
    """Projective sum of x and y on the scale (zero, inf), via auxiliary E, F.

    G = meet(join(0,E), join(y,F)); H = meet(join(inf,G), join(x,E));
    m = join(F,H); sum = meet(join(0,inf), m).  Degenerate intermediates are
    flagged zero vectors, never errors; surviving E = F or E on the base line
    is exactly what the non-standard layer is for.
    """
    l = safe_join(zero_pt, inf_pt)
    j_inf_e = safe_join(inf_pt, e)
    j_zero_e = safe_join(zero_pt, e)
    j_y_f = safe_join(y, f)
    g = safe_meet(j_zero_e, j_y_f)
    j_inf_g = safe_join(inf_pt, g)
    j_x_e = safe_join(x, e)
    h = safe_meet(j_inf_g, j_x_e)
    m = safe_join(f, h)
    s = safe_meet(l, m)
    return VonStaudtResult(l, j_inf_e, j_zero_e, j_y_f, g, j_inf_g, j_x_e, h, m, s)


# -- cross-ratio ------------------------------------------------------------------


def cross_ratio(a: HomVec3, b: HomVec3, c: HomVec3, dd: HomVec3, l_pt: HomVec3) -> LcfNumber:
    """(A,B; C,D) seen from L: ([A,C]_L [B,D]_L) / ([A,D]_L [B,C]_L)."""
    num = bracket(a, c, l_pt) * bracket(b, dd, l_pt)
    den = bracket(a, dd, l_pt) * bracket(b, c, l_pt)
    if den.is_zero():
        raise UndefinedCrossRatio("zero bracket in denominator")
    return num / den
