import random
from fractions import Fraction as F

import pytest

from lcgeo.lcf import d_pow, from_real
from lcgeo.projgeo import point, proj_close_seq
from lcgeo.geomops import CircleSpec, IdenticalCircles, intersect_circles, safe_join
from lcgeo.desing import (
    EmptyPerturbationSpace,
    EvaluablePath,
    EvaluationError,
    NotPolynomial,
    PerturbationSpec,
    ResolveStatus,
    SpatialMap,
    classify_singularities,
    direct_derivation,
    resolve_at,
    resolve_extended,
)

d = d_pow(1)


def farpoint_path():
    def ev(t):
        u = t - 0.5
        return (u * u * u, from_real(0), from_real(0))

    poly = [[F(-1, 8), F(3, 4), F(-3, 2), F(1)], [F(0)], [F(0)]]
    return EvaluablePath(3, ev, poly=poly)


def conic_center_path():
    def ev(t):
        return (from_real(0), (t - 1) * t, (t - 1) * (t - 1))

    poly = [[F(0)], [F(0), F(-1), F(1)], [F(1), F(-2), F(1)]]
    return EvaluablePath(3, ev, poly=poly, domain=(0.0, 2.0))


def circle_join_path():
    def ev(t):
        s = (1 - t * t).sqrt()
        return (s, from_real(0), s * t)

    return EvaluablePath(3, ev, domain=(0.0, 2.0))


def unified_circle_map():
    def ev(coords):
        c1 = CircleSpec(point(coords[0], coords[1], 1.0), from_real(1.0))
        c2 = CircleSpec(point(coords[2], coords[3], 1.0), from_real(1.0))
        try:
            pair = intersect_circles(c1, c2)
        except IdenticalCircles:
            z = from_real(0.0)
            return (z, z, z)
        return safe_join(pair.p1, pair.p2).components

    return SpatialMap(4, 3, ev)


def collinear_projector(delta):
    out = list(delta)
    out[1] = from_real(0.0)
    out[3] = from_real(0.0)
    return out


class TestResolveAt:
    def test_farpoint(self):
        out = resolve_at(farpoint_path(), 0.5)
        assert out.status is ResolveStatus.REMOVABLE
        assert out.value.vec == (1, 0, 0)
        assert out.order == 3

    def test_circle_join_at_tangency(self):
        out = resolve_at(circle_join_path(), 1.0)
        assert out.status is ResolveStatus.REMOVABLE
        assert proj_close_seq(out.value.vec, (1, 0, 1), tol=1e-9)
        assert out.order == F(1, 2)

    def test_abs_path_not_removable(self):
        path = EvaluablePath(2, lambda t: (t, abs(t)), domain=(-1.0, 1.0))
        out = resolve_at(path, 0.0)
        assert out.status is ResolveStatus.NOT_REMOVABLE
        assert len(out.evidence) == 2
        plus, minus = out.evidence
        assert proj_close_seq(plus, (1, 1), tol=1e-9)
        assert proj_close_seq(minus, (-1, 1), tol=1e-9)
        assert not proj_close_seq(plus, minus)

    def test_regular_point(self):
        out = resolve_at(farpoint_path(), 0.25)
        assert out.status is ResolveStatus.REGULAR
        assert out.order == 0

    def test_identically_zero(self):
        path = EvaluablePath(2, lambda t: (from_real(0), from_real(0)))
        out = resolve_at(path, 0.5)
        assert out.status is ResolveStatus.IDENTICALLY_ZERO

    def test_one_sided_at_endpoint(self):
        def ev(t):
            return (t, t * t)

        out = resolve_at(EvaluablePath(2, ev, domain=(0.0, 1.0)), 0.0)
        assert out.one_sided
        assert out.status is ResolveStatus.REMOVABLE

    def test_evaluator_fault_wrapped(self):
        def ev(t):
            raise KeyError("boom")

        with pytest.raises(EvaluationError):
            resolve_at(EvaluablePath(1, ev), 0.5)

    def test_probe_symmetry(self):
        # swapping the probe roles must not change the outcome
        for path, t0 in ((farpoint_path(), 0.5), (conic_center_path(), 1.0)):
            out = resolve_at(path, t0)
            swapped = EvaluablePath(
                path.dimension,
                lambda t, _p=path, _t=t0: _p.evaluate(2 * _t - t),
                domain=path.domain,
            )
            out2 = resolve_at(swapped, t0)
            assert out.status == out2.status
            assert out.order == out2.order
            assert proj_close_seq(out.value.vec, out2.value.vec, tol=1e-9)

    def test_removable_value_is_exact_shadow(self):
        # no perturbation residue: the resolved entries are plain complex
        out = resolve_at(farpoint_path(), 0.5)
        assert all(isinstance(v, complex) for v in out.value.vec)
        assert out.value.vec == (1, 0, 0)


class TestDirectDerivation:
    def test_farpoint_third_derivative(self):
        out = direct_derivation(farpoint_path(), 0.5)
        assert out.status is ResolveStatus.REMOVABLE
        assert out.value.vec == (1, 0, 0)
        assert out.order == 3

    def test_conic_center_first_derivative(self):
        out = direct_derivation(conic_center_path(), 1.0)
        assert out.status is ResolveStatus.REMOVABLE
        assert proj_close_seq(out.value.vec, (0, 1, 0), tol=1e-12)
        assert out.order == 1

    def test_order_zero_is_regular(self):
        out = direct_derivation(farpoint_path(), 0.25)
        assert out.status is ResolveStatus.REGULAR
        assert out.order == 0

    def test_rotating_line_series(self):
        # sin-based family handled through its series coefficients:
        # f(t) = (t-1/2)^2 + O((t-1/2)^4) around 1/2
        poly = [[F(0)], [F(0)], [F(1, 4), F(-1), F(1)]]
        path = EvaluablePath(3, lambda t: (from_real(0), from_real(0), (t - 0.5) ** 2), poly=poly)
        out = direct_derivation(path, 0.5)
        assert out.order == 2
        assert proj_close_seq(out.value.vec, (0, 0, 1), tol=1e-12)

    def test_requires_polynomial(self):
        with pytest.raises(NotPolynomial):
            direct_derivation(circle_join_path(), 1.0)

    def test_all_vanishing(self):
        path = EvaluablePath(1, lambda t: (from_real(0),), poly=[[F(0)]])
        out = direct_derivation(path, 0.5, k_max=4)
        assert out.status is ResolveStatus.IDENTICALLY_ZERO


class TestMethodAgreement:
    def test_derivative_vs_probe_up_to_order_five(self):
        rng = random.Random(41)
        for order in range(1, 6):
            for _ in range(20):
                base = [rng.uniform(-2, 2) for _ in range(3)]
                if all(abs(b) < 0.1 for b in base):
                    base[0] = 1.0
                t0 = 0.5
                # component i: b_i * (t - t0)^order  (+ a higher-order tail)
                def ev(t, base=base, order=order):
                    u = t - t0
                    upow = u
                    for _ in range(order - 1):
                        upow = upow * u
                    return tuple(b * upow + b * 0.25 * (upow * u) for b in base)

                poly = []
                for b in base:
                    coeffs = [F(0)] * order + [F(b).limit_denominator(10**9)]
                    coeffs += [F(b / 4).limit_denominator(10**9)]
                    # expand around 0: need coefficients of (t-t0)^k -> shift
                    poly.append(_shift_poly(coeffs, F(1, 2)))
                path = EvaluablePath(3, ev, poly=poly)
                via_probe = resolve_at(path, t0)
                via_deriv = direct_derivation(path, t0)
                assert via_probe.status is ResolveStatus.REMOVABLE
                assert via_deriv.status is ResolveStatus.REMOVABLE
                assert via_probe.order == via_deriv.order == order
                assert proj_close_seq(via_probe.value.vec, via_deriv.value.vec, tol=1e-6)


def _shift_poly(coeffs_in_u, t0):
    """Coefficients of p(u)=sum c_k u^k rewritten in t with u = t - t0."""
    out = [F(0)] * len(coeffs_in_u)
    for k, c in enumerate(coeffs_in_u):
        # c * (t - t0)^k expanded via binomials
        binom = F(1)
        for j in range(k + 1):
            out[j] += c * binom * (-t0) ** (k - j)
            binom = binom * (k - j) / (j + 1)
    return out


def float_limit_tail(fn, t0, count=4):
    """Plain-float sequence oracle: evaluate at t0 +/- 2^-j, j = 10..20,
    normalized by the largest component; the tail should have converged."""
    vals = []
    for j in range(10, 21):
        for s in (1, -1):
            v = fn(t0 + s * 2.0**-j)
            m = max(abs(c) for c in v)
            vals.append(tuple(c / m for c in v))
    return vals[-count:]


class TestLimitOracle:
    CASES = [
        (farpoint_path, 0.5, lambda t: ((t - 0.5) ** 3, 0.0, 0.0)),
        (conic_center_path, 1.0, lambda t: (0.0, (t - 1) * t, (t - 1) ** 2)),
    ]

    @pytest.mark.parametrize("maker,t0,float_fn", CASES)
    def test_removable_matches_float_limit(self, maker, t0, float_fn):
        out = resolve_at(maker(), t0)
        assert out.status is ResolveStatus.REMOVABLE
        for v in float_limit_tail(float_fn, t0):
            assert proj_close_seq(v, out.value.vec, tol=1e-4)


class TestResolveExtended:
    def test_unified_free_not_removable(self):
        out = resolve_extended(unified_circle_map(), [0, 0, 0, 0], PerturbationSpec(count=5, seed=3))
        assert out.status is ResolveStatus.NOT_REMOVABLE
        assert out.n == 5 and out.seed == 3

    def test_unified_collinear_removable(self):
        out = resolve_extended(
            unified_circle_map(),
            [0, 0, 0, 0],
            PerturbationSpec(count=5, seed=3, projector=collinear_projector),
        )
        assert out.status is ResolveStatus.REMOVABLE
        # resolved line through the shared center, perpendicular to the x-axis
        assert proj_close_seq(out.value.vec, (1, 0, 0), tol=1e-9)

    def test_determinism(self):
        spec = PerturbationSpec(count=5, seed=12345)
        a = resolve_extended(unified_circle_map(), [0, 0, 0, 0], spec)
        b = resolve_extended(unified_circle_map(), [0, 0, 0, 0], spec)
        assert a.status == b.status
        assert a.evidence == b.evidence

    def test_von_staudt_merge_spatially_removable(self):
        # E is free; F is semi-free on join(inf, E), so its y-perturbation is
        # coupled to E's (the line through inf = (1,0,0) is horizontal).
        # Respecting that restriction the merge singularity resolves to a
        # unique line; ignoring it the limit is direction-dependent.
        from lcgeo.geomops import von_staudt_sum

        def ev(coords):
            e = point(coords[0], coords[1], 1.0)
            f = point(coords[2], coords[3], 1.0)
            res = von_staudt_sum(
                point(0, 0, 1), point(1, 0, 0), point(2, 0, 1), point(4, 0, 1), e, f
            )
            return res.m.components

        def f_on_join_inf_e(delta):
            out = list(delta)
            out[3] = out[1]
            return out

        smap = SpatialMap(4, 3, ev)
        out = resolve_extended(
            smap, [4, 2, 4, 2], PerturbationSpec(count=5, seed=7, projector=f_on_join_inf_e)
        )
        assert out.status is ResolveStatus.REMOVABLE
        assert proj_close_seq(out.value.vec, (-1 / 6, -1 / 6, 1), tol=1e-6)

    def test_von_staudt_merge_unconstrained_is_direction_dependent(self):
        from lcgeo.geomops import von_staudt_sum

        def ev(coords):
            e = point(coords[0], coords[1], 1.0)
            f = point(coords[2], coords[3], 1.0)
            res = von_staudt_sum(
                point(0, 0, 1), point(1, 0, 0), point(2, 0, 1), point(4, 0, 1), e, f
            )
            return res.m.components

        smap = SpatialMap(4, 3, ev)
        out = resolve_extended(smap, [4, 2, 4, 2], PerturbationSpec(count=5, seed=7))
        assert out.status is ResolveStatus.NOT_REMOVABLE

    def test_empty_perturbation_space(self):
        def to_zero(delta):
            return [from_real(0.0)] * len(delta)

        with pytest.raises(EmptyPerturbationSpace):
            resolve_extended(
                unified_circle_map(),
                [0, 0, 0, 0],
                PerturbationSpec(count=3, seed=1, projector=to_zero),
            )

    def test_count_below_two_rejected(self):
        with pytest.raises(ValueError):
            resolve_extended(unified_circle_map(), [0, 0, 0, 0], PerturbationSpec(count=1))


class TestPathInvariants:
    def test_polynomial_form_agrees_with_evaluator(self):
        # at five random standard parameters the polynomial coefficients and
        # the evaluator must describe the same path
        rng = random.Random(99)
        for maker in (farpoint_path, conic_center_path):
            path = maker()
            for _ in range(5):
                t = rng.uniform(*path.domain)
                via_eval = [c.shadow() for c in path.evaluate(from_real(t))]
                via_poly = [
                    float(sum(co * F(t).limit_denominator(10**12) ** k
                              for k, co in enumerate(comp)))
                    for comp in path.poly
                ]
                for a, b in zip(via_eval, via_poly):
                    assert abs(a - b) <= 1e-9 * max(1.0, abs(b))

    def test_emitted_perturbations_are_projector_fixed_points(self):
        from lcgeo.construct import VON_STAUDT_DOC, constraint_projector, loads_construction
        from lcgeo.desing import _draw_perturbation

        c = loads_construction(VON_STAUDT_DOC)
        project = constraint_projector(c)
        rng = random.Random(5)
        for _ in range(5):
            delta = _draw_perturbation(rng, 4, [0, 1, 2, 3], project)
            again = project(list(delta))
            assert all((x - y).is_zero() or (x - y).is_infinitesimal()
                       for x, y in zip(delta, again))
            for x, y in zip(delta, again):
                diff = x - y
                if not diff.is_zero():
                    # re-projection changes nothing beyond float noise
                    assert abs(diff.leading()[1]) < 1e-9


class TestClassifySingularities:
    def test_farpoint_scan(self):
        res = classify_singularities(farpoint_path(), (0.0, 1.0), 101)
        assert len(res) == 1
        t, out = res[0]
        assert t == pytest.approx(0.5)
        assert out.status is ResolveStatus.REMOVABLE

    def test_constant_path_clean(self):
        path = EvaluablePath(3, lambda t: (from_real(1), from_real(1), from_real(1)))
        assert classify_singularities(path, (0.0, 1.0), 11) == []

    def test_circle_join_scan_complex_branch(self):
        res = classify_singularities(circle_join_path(), (0.0, 2.0), 201)
        assert [t for t, _ in res] == [pytest.approx(1.0)]
        assert res[0][1].status is ResolveStatus.REMOVABLE
        # beyond the tangency the path is complex-valued but regular
        v = circle_join_path().evaluate(from_real(1.5))
        assert any(abs(c.shadow().imag) > 0.1 for c in v)
