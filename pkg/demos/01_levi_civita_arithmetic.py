"""A tour of the Levi-Civita scalars: the infinitesimal d, truncated series
arithmetic, radicals, and shadows.

Run:  python3 demos/01_levi_civita_arithmetic.py
"""

from fractions import Fraction

from lcgeo import d, d_pow, from_real

print("The number d is a positive infinitesimal: smaller than every positive real.")
print(f"  d < 1e-300?   {d.cmp_real(1e-300) < 0}")
print(f"  d > 0?        {d.cmp_real(0) > 0}")
print()

print("Arithmetic is exact on the exponent lattice, truncated in length:")
a = 1 + d
print(f"  (1+d)(1-d)  = {a * (1 - d)}")
print(f"  1/(1+d)     = {a.inv()}")
print()

print("The field is closed under the radicals compass constructions need:")
s = (6 * d).sqrt()
print(f"  sqrt(6d)    = {s}")
print(f"  sqrt(6d)^2  = {s * s}")
print(f"  sqrt(d) has exponent {s.leading()[0]} -- an exact rational")
print()

print("Shadows recover the standard part of any limited number:")
x = from_real(3) + 5 * d - 2 * d_pow(Fraction(3, 2))
print(f"  x           = {x}")
print(f"  shadow(x)   = {x.shadow()}")
print()

print("Complex coefficients are first-class (the complex field is closed):")
z = from_real(-4).sqrt()
print(f"  sqrt(-4)    = {z}")
