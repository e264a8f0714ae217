"""Spatial stability: when two identical circles unify, the connecting line of
their intersections resolves along a path but may still be discontinuous in
space.  The extended continuation check probes several random infinitesimal
perturbations of the free coordinates and compares the projective shadows.

With the centers fully free the limits disagree (not removable); with the
centers bound to a common line the limit is the same for every perturbation:
the perpendicular through the shared center.

Run:  python3 demos/05_unified_circles_stability.py
"""

from lcgeo import PerturbationSpec, SpatialMap, from_real, point, resolve_extended
from lcgeo.geomops import CircleSpec, IdenticalCircles, intersect_circles, safe_join


def joined_intersections(coords):
    c1 = CircleSpec(point(coords[0], coords[1], 1.0), from_real(1.0))
    c2 = CircleSpec(point(coords[2], coords[3], 1.0), from_real(1.0))
    try:
        pair = intersect_circles(c1, c2)
    except IdenticalCircles:
        z = from_real(0.0)
        return (z, z, z)
    return safe_join(pair.p1, pair.p2).components


smap = SpatialMap(4, 3, joined_intersections)
unified = [0.0, 0.0, 0.0, 0.0]  # both centers at the origin


def on_common_line(delta):
    out = list(delta)
    out[1] = from_real(0.0)  # no vertical perturbation of either center
    out[3] = from_real(0.0)
    return out


print("Centers free in the plane:")
for seed in range(4):
    out = resolve_extended(smap, unified, PerturbationSpec(count=5, seed=seed))
    print(f"  seed {seed}: {out.status.value}")
print()

print("Centers bound to the x-axis:")
for seed in range(4):
    out = resolve_extended(
        smap, unified, PerturbationSpec(count=5, seed=seed, projector=on_common_line)
    )
    vec = tuple(round(v.real, 6) for v in out.value.vec)
    print(f"  seed {seed}: {out.status.value}, resolved line {vec}")
print()
print("The resolved line (1, 0, 0) is x = 0: through the shared center,")
print("perpendicular to the line binding the centers.")
