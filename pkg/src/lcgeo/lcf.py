"""Arithmetic in the real and complex Levi-Civita fields.

Numbers are finite truncated series ``sum a_q * d**q`` in a fixed positive
infinitesimal ``d``, with exact rational exponents ``q`` (ascending) and
complex double coefficients ``a_q``.  A finite support is automatically
left-finite, and the field is closed under the radicals that compass
constructions need: ``sqrt(c * d**q * (1+u))`` is again such a series.

Truncation policy: every arithmetic result keeps at most ``window`` terms,
counted from the leading (smallest) exponent, and coefficients below
``EPS_PRUNE`` in magnitude are dropped.  Dropping trailing terms is safe for
ring operations: a term beyond the leading ``W`` of an intermediate product
can never re-enter the leading ``W`` of a longer product.
"""

from __future__ import annotations

import cmath
import enum
import re
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "LcfNumber",
    "MagnitudeClass",
    "LcfError",
    "EmptySeries",
    "DivisionByZero",
    "RootOfZero",
    "UnlimitedShadow",
    "DEFAULT_WINDOW",
    "EPS_PRUNE",
    "d",
    "from_real",
    "d_pow",
    "zero",
    "one",
    "parse",
]

DEFAULT_WINDOW = 8
EPS_PRUNE = 1e-12

Scalar = Union[int, float, complex, "LcfNumber"]


class LcfError(ArithmeticError):
    pass


class EmptySeries(LcfError):
    """Leading term requested from the zero element."""


class DivisionByZero(LcfError):
    pass


class RootOfZero(LcfError):
    """Roots of the zero element are left to the caller to branch on."""


class UnlimitedShadow(LcfError):
    """Shadow requested from an unlimited number."""


class MagnitudeClass(enum.Enum):
    ZERO = "zero"
    INFINITESIMAL = "infinitesimal"
    APPRECIABLE = "appreciable"
    UNLIMITED = "unlimited"


def _normalize(terms: Iterable[tuple[Fraction, complex]], window: int) -> tuple:
    by_exp: dict[Fraction, complex] = {}
    for q, c in terms:
        if q in by_exp:
            by_exp[q] += c
        else:
            by_exp[q] = c
    return _prune_sort(by_exp, window)


def _prune_sort(by_exp: dict, window: int) -> tuple:
    # float cancellation noise must not fake a leading term and flip the
    # magnitude class; constructors bypass this, so tiny literals survive
    kept = [(q, c) for q, c in by_exp.items() if abs(c) >= EPS_PRUNE]
    kept.sort(key=lambda t: t[0])
    return tuple(kept[:window])


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


_FRAC_CACHE: dict[tuple[int, int], Fraction] = {}


def _frac(n: int, den: int) -> Fraction:
    key = (n, den)
    f = _FRAC_CACHE.get(key)
    if f is None:
        if len(_FRAC_CACHE) > 1 << 16:
            _FRAC_CACHE.clear()
        f = Fraction(n, den)
        _FRAC_CACHE[key] = f
    return f


def _from_int_terms(acc: dict, den: int, window: int) -> "LcfNumber":
    kept = [(n, c) for n, c in acc.items() if abs(c) >= EPS_PRUNE]
    kept.sort(key=lambda t: t[0])
    kept = kept[:window]
    out = LcfNumber(tuple((_frac(n, den), c) for n, c in kept), window, _normalized=True)
    out._lat = (den, tuple(kept))
    return out


class LcfNumber:
    """One element of the (complex) Levi-Civita field."""

    __slots__ = ("terms", "window", "_lat")

    def __init__(self, terms=(), window: int = DEFAULT_WINDOW, _normalized: bool = False):
        if window < 1:
            raise ValueError("window must be positive")
        self.window = window
        self._lat = None
        if _normalized:
            self.terms = terms
        else:
            self.terms = _normalize(terms, window)

    def _lattice(self):
        """Exponents as integers over a common denominator, cached."""
        lat = self._lat
        if lat is None:
            den = 1
            for q, _ in self.terms:
                qd = q.denominator
                if den % qd:
                    den = den * qd // _gcd(den, qd)
            ints = tuple((q.numerator * (den // q.denominator), c) for q, c in self.terms)
            lat = self._lat = (den, ints)
        return lat

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_complex(x: complex, window: int = DEFAULT_WINDOW) -> "LcfNumber":
        x = complex(x)
        if x == 0:
            return LcfNumber((), window, _normalized=True)
        return LcfNumber(((Fraction(0), x),), window, _normalized=True)

    @staticmethod
    def d_pow(q, window: int = DEFAULT_WINDOW) -> "LcfNumber":
        return LcfNumber(((Fraction(q), 1.0 + 0.0j),), window, _normalized=True)

    @staticmethod
    def coerce(x: Scalar, window: int = DEFAULT_WINDOW) -> "LcfNumber":
        if isinstance(x, LcfNumber):
            return x
        return LcfNumber.from_complex(x, window)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def leading(self) -> tuple[Fraction, complex]:
        """Smallest-exponent term ``(q, a_q)``."""
        if not self.terms:
            raise EmptySeries("zero element has no leading term")
        return self.terms[0]

    def classify(self) -> MagnitudeClass:
        if not self.terms:
            return MagnitudeClass.ZERO
        q = self.terms[0][0]
        if q > 0:
            return MagnitudeClass.INFINITESIMAL
        if q == 0:
            return MagnitudeClass.APPRECIABLE
        return MagnitudeClass.UNLIMITED

    def is_limited(self) -> bool:
        return not self.terms or self.terms[0][0] >= 0

    def is_infinitesimal(self) -> bool:
        return bool(self.terms) and self.terms[0][0] > 0

    def coefficient(self, q) -> complex:
        q = Fraction(q)
        for e, c in self.terms:
            if e == q:
                return c
        return 0.0 + 0.0j

    def shadow(self) -> complex:
        """The unique standard complex number infinitely close to ``self``."""
        if self.terms and self.terms[0][0] < 0:
            raise UnlimitedShadow(f"unlimited number has no shadow: {self}")
        return self.coefficient(0)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: Scalar) -> "LcfNumber":
        other = LcfNumber.coerce(other, self.window)
        w = min(self.window, other.window)
        a, b = self.terms, other.terms
        if not a:
            return other if other.window == w else LcfNumber(b, w, _normalized=True)
        if not b:
            return self if self.window == w else LcfNumber(a, w, _normalized=True)
        da, ia = self._lattice()
        db, ib = other._lattice()
        den = da * db // _gcd(da, db)
        ka, kb = den // da, den // db
        acc: dict[int, complex] = {n * ka: c for n, c in ia}
        for n, c in ib:
            n *= kb
            if n in acc:
                acc[n] += c
            else:
                acc[n] = c
        return _from_int_terms(acc, den, w)

    __radd__ = __add__

    def __neg__(self) -> "LcfNumber":
        return LcfNumber(tuple((q, -c) for q, c in self.terms), self.window, _normalized=True)

    def __sub__(self, other: Scalar) -> "LcfNumber":
        return self + (-LcfNumber.coerce(other, self.window))

    def __rsub__(self, other: Scalar) -> "LcfNumber":
        return LcfNumber.coerce(other, self.window) + (-self)

    def __mul__(self, other: Scalar) -> "LcfNumber":
        other = LcfNumber.coerce(other, self.window)
        w = min(self.window, other.window)
        a, b = self.terms, other.terms
        if not a or not b:
            return LcfNumber((), w, _normalized=True)
        if len(b) == 1 or len(a) == 1:
            if len(b) == 1:
                (q0, c0), rest = b[0], a
            else:
                (q0, c0), rest = a[0], b
            n0, d0 = q0.numerator, q0.denominator
            terms = tuple(
                (_frac(q.numerator * d0 + n0 * q.denominator, q.denominator * d0), cc)
                for q, c in rest
                if abs(cc := c * c0) >= EPS_PRUNE
            )
            return LcfNumber(terms[:w], w, _normalized=True)
        da, ia = self._lattice()
        db, ib = other._lattice()
        den = da * db // _gcd(da, db)
        ka, kb = den // da, den // db
        acc: dict[int, complex] = {}
        for na, ca in ia:
            na *= ka
            for nb, cb in ib:
                n = na + nb * kb
                if n in acc:
                    acc[n] += ca * cb
                else:
                    acc[n] = ca * cb
        return _from_int_terms(acc, den, w)

    __rmul__ = __mul__

    def inv(self) -> "LcfNumber":
        """Multiplicative inverse: ``a = c d^q (1+u)`` inverts termwise via
        the geometric series in the infinitesimal ``u``."""
        if not self.terms:
            raise DivisionByZero("inverse of zero")
        w = self.window
        q0, c0 = self.terms[0]
        inv_c0 = 1.0 / c0
        if len(self.terms) == 1:
            return LcfNumber(((-q0, inv_c0),), w, _normalized=True)
        if len(self.terms) == 2:
            # single-term tail: the geometric series has one power per term
            qu = self.terms[1][0] - q0
            cu = self.terms[1][1] / c0
            terms, coeff = [], inv_c0
            for j in range(w):
                if abs(coeff) < EPS_PRUNE:
                    break
                terms.append((j * qu - q0, coeff))
                coeff *= -cu
            return LcfNumber(tuple(terms), w, _normalized=True)
        # u = a / (c0 d^q0) - 1, strictly infinitesimal
        u = LcfNumber(tuple((q - q0, c / c0) for q, c in self.terms[1:]), w, _normalized=True)
        s = one(w)
        for _ in range(w - 1):
            s = one(w) - u * s
        return s * LcfNumber(((-q0, inv_c0),), w, _normalized=True)

    def __truediv__(self, other: Scalar) -> "LcfNumber":
        return self * LcfNumber.coerce(other, self.window).inv()

    def __rtruediv__(self, other: Scalar) -> "LcfNumber":
        return LcfNumber.coerce(other, self.window) * self.inv()

    def __pow__(self, n: int) -> "LcfNumber":
        if not isinstance(n, int):
            raise TypeError("only integer powers; use nth_root for radicals")
        if n == 0:
            return one(self.window)
        base = self if n > 0 else self.inv()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def nth_root(self, n: int) -> "LcfNumber":
        """Principal ``n``-th root.

        Writes ``a = c d^q (1+u)`` and returns
        ``c^(1/n) d^(q/n) * sum binom(1/n, j) u^j`` truncated to the window.
        The principal complex branch is used for ``c^(1/n)``.
        """
        if n < 1:
            raise ValueError("root index must be a positive integer")
        if not self.terms:
            raise RootOfZero("n-th root of zero (degenerate input)")
        w = self.window
        q0, c0 = self.terms[0]
        root_c = cmath.exp(cmath.log(c0) / n)
        head = LcfNumber(((q0 / n, root_c),), w, _normalized=True)
        if len(self.terms) == 1:
            return head
        alpha = Fraction(1, n)
        if len(self.terms) == 2:
            # single-term tail: binomial series written out directly
            qu = self.terms[1][0] - q0
            cu = self.terms[1][1] / c0
            terms, binom, cpow = [], Fraction(1), 1.0 + 0.0j
            for j in range(w):
                coeff = root_c * float(binom) * cpow
                if coeff != 0:
                    terms.append((q0 / n + j * qu, coeff))
                binom = binom * (alpha - j) / (j + 1)
                cpow *= cu
            return LcfNumber(tuple(terms), w)
        # binomial series in the infinitesimal u, exact rational coefficients
        u = LcfNumber(tuple((q - q0, c / c0) for q, c in self.terms[1:]), w, _normalized=True)
        acc = one(w)
        upow = one(w)
        coeff = Fraction(1)
        for j in range(1, w):
            coeff = coeff * (alpha - (j - 1)) / j
            upow = upow * u
            acc = acc + float(coeff) * upow
        return head * acc

    def sqrt(self) -> "LcfNumber":
        return self.nth_root(2)

    def conjugate(self) -> "LcfNumber":
        return LcfNumber(
            tuple((q, c.conjugate()) for q, c in self.terms), self.window, _normalized=True
        )

    def __abs__(self) -> "LcfNumber":
        """Non-standard absolute value ``sqrt(a * conj(a))``; real series out."""
        if not self.terms:
            return LcfNumber((), self.window, _normalized=True)
        return (self * self.conjugate()).nth_root(2)

    # -- order and proximity -------------------------------------------

    def is_real(self) -> bool:
        return all(abs(c.imag) < EPS_PRUNE for _, c in self.terms)

    def cmp_real(self, other: Scalar) -> int:
        """Order by the sign of the leading coefficient of the difference.

        ``d`` sits below every positive real, so e.g. ``d < 1e-300``.  The
        stored terms are compared directly (no pruned subtraction), so scale
        differences of hundreds of orders of magnitude still order correctly.
        """
        other = LcfNumber.coerce(other, self.window)
        if not self.is_real() or not other.is_real():
            raise ValueError("cmp_real requires real coefficients")
        mine = dict(self.terms)
        theirs = dict(other.terms)
        for q in sorted(set(mine) | set(theirs)):
            delta = mine.get(q, 0j).real - theirs.get(q, 0j).real
            if delta != 0:
                return 1 if delta > 0 else -1
        return 0

    def infinitely_close(self, other: Scalar) -> bool:
        diff = self - LcfNumber.coerce(other, self.window)
        return diff.classify() in (MagnitudeClass.ZERO, MagnitudeClass.INFINITESIMAL)

    # -- comparisons / hashing -----------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, (LcfNumber, int, float, complex)):
            return NotImplemented
        return (self - LcfNumber.coerce(other)).is_zero()

    def __hash__(self):
        return hash(self.terms)

    # -- rendering ------------------------------------------------------

    def __repr__(self) -> str:
        return f"LcfNumber('{render(self)}')"

    def __str__(self) -> str:
        return render(self)


# module-level conveniences ------------------------------------------------


def zero(window: int = DEFAULT_WINDOW) -> LcfNumber:
    return LcfNumber((), window, _normalized=True)


def one(window: int = DEFAULT_WINDOW) -> LcfNumber:
    return LcfNumber(((Fraction(0), 1.0 + 0.0j),), window, _normalized=True)


def from_real(x, window: int = DEFAULT_WINDOW) -> LcfNumber:
    return LcfNumber.from_complex(x, window)


def d_pow(q, window: int = DEFAULT_WINDOW) -> LcfNumber:
    return LcfNumber.d_pow(q, window)


d = d_pow(1)


# text form ------------------------------------------------------------------
#
# Grammar used by the CLI tables and test fixtures:
#   number  := term (('+'|'-') term)*
#   term    := coeff '*d^' exponent
#   coeff   := float | '(' re (+|-) im 'j)'        (complex coefficients)
#   exponent:= int | int '/' int
# Example: "4.899*d^1/2 - 4.899*d^3/2".


def _render_coeff(c: complex, digits: int) -> str:
    if abs(c.imag) < EPS_PRUNE:
        return f"{c.real:.{digits}g}"
    return f"({c.real:.{digits}g}{c.imag:+.{digits}g}j)"


def render(x: LcfNumber, digits: int = 12) -> str:
    if not x.terms:
        return "0"
    parts = []
    for i, (q, c) in enumerate(x.terms):
        coeff = _render_coeff(c, digits)
        sign = ""
        if i > 0:
            if coeff.startswith("-"):
                sign, coeff = " - ", coeff[1:]
            else:
                sign = " + "
        parts.append(f"{sign}{coeff}*d^{q}")
    return "".join(parts)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coeff>\([^)]*\)|[^*\s]+)\s*\*\s*d\^\s*
        (?P<num>-?\d+)(?:/(?P<den>\d+))?""",
    re.VERBOSE,
)


def parse(text: str, window: int = DEFAULT_WINDOW) -> LcfNumber:
    """Parse the rendering produced by :func:`render`."""
    text = text.strip()
    if text == "0":
        return zero(window)
    terms = []
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse LcfNumber at: {text[pos:]!r}")
        coeff_s = m.group("coeff")
        if coeff_s.startswith("("):
            c = complex(coeff_s[1:-1].replace(" ", ""))
        else:
            c = complex(float(coeff_s))
        if m.group("sign") == "-":
            c = -c
        q = Fraction(int(m.group("num")), int(m.group("den") or 1))
        terms.append((q, c))
        pos = m.end()
    return LcfNumber(terms, window)
