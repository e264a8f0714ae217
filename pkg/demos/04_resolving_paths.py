"""Resolving singularities of one-parameter paths two ways: infinitesimal
probing (works for radicals) versus exact differentiation (polynomial paths).

Run:  python3 demos/04_resolving_paths.py
"""

from fractions import Fraction as F

from lcgeo import EvaluablePath, classify_singularities, direct_derivation, from_real, resolve_at


def show(name, outcome):
    vec = tuple(round(v.real, 4) + round(v.imag, 4) * 1j for v in outcome.value.vec)
    print(f"  {name:<22} {outcome.status.value:<12} value={vec} order={outcome.order}")


# The far point of two almost-parallel lines: P(t) = ((t - 1/2)^3, 0, 0).
farpoint = EvaluablePath(
    3,
    lambda t: ((t - 0.5) ** 3, from_real(0), from_real(0)),
    poly=[[F(-1, 8), F(3, 4), F(-3, 2), F(1)], [F(0)], [F(0)]],
)
print("Far point of two parallel lines, singular at t = 1/2 (order 3):")
show("probe (t0 ± d)", resolve_at(farpoint, 0.5))
show("derivatives", direct_derivation(farpoint, 0.5))
print()

# The center of an interpolated conic family: M(t) = (0, (t-1)t, (t-1)^2).
center = EvaluablePath(
    3,
    lambda t: (from_real(0), (t - 1) * t, (t - 1) * (t - 1)),
    poly=[[F(0)], [F(0), F(-1), F(1)], [F(1), F(-2), F(1)]],
    domain=(0.0, 2.0),
)
print("Center of a circle flattening to a line, singular at t = 1 (order 1):")
show("probe (t0 ± d)", resolve_at(center, 1.0))
show("derivatives", direct_derivation(center, 1.0))
print()

# The tangential-circle join as a path: l(t) = sqrt(1 - t^2) * (1, 0, t).
# Derivatives fail here (the radical's derivatives blow up at the branch
# point) but the infinitesimal probe resolves it.
join_path = EvaluablePath(
    3,
    lambda t: ((1 - t * t).sqrt(), from_real(0), (1 - t * t).sqrt() * t),
    domain=(0.0, 2.0),
)
print("Tangential-circle join, a radical path singular at t = 1 (order 1/2):")
show("probe (t0 ± d)", resolve_at(join_path, 1.0))
print()

print("Scanning the whole domain flags exactly the singular parameter:")
for t, outcome in classify_singularities(join_path, (0.0, 2.0), 201):
    print(f"  t = {t}: {outcome.status.value}, resolves to "
          f"{tuple(round(v.real, 4) for v in outcome.value.vec)}")
