"""The disjoint circle intersection: joining the two intersection points of
tangential circles is undefined in standard geometry, but an infinitesimal
perturbation of the radical line makes it a removable singularity.

Run:  python3 demos/02_tangential_circles.py
"""

from lcgeo import psh, run_table
from lcgeo.construct import tangent_circle_parts

print(run_table("circle-tangent"))
print()

c1, c2, lp, pair, join = tangent_circle_parts()
print("The perturbed intersection points pick up sqrt(6)·d^(1/2) terms;")
print("their join is an infinitesimal vector, and its projective shadow is")
print("the tangent line the preceding motion converges to:")
print(f"  join       = {join}")
r = psh(join)
print(f"  psh(join)  = {tuple(round(v.real, 6) for v in r.vec)}")
print(f"  removed order (the removable prefactor): d^{r.scale_exponent}")
