"""Von-Staudt addition surviving its two classical degeneracies: merged
auxiliary points (E = F) and auxiliary points pushed onto the base line.

Standard geometry collapses to zero vectors (the `standard` rows); the
non-standard evaluation stays finite and the projective shadow recovers the
correct sum x + y = 6 in both cases.

Run:  python3 demos/03_von_staudt_sums.py
"""

from lcgeo import run_table

print(run_table("vonstaudt-merge"))
print()
print(run_table("vonstaudt-online"))
