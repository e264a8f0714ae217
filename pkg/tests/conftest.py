from fractions import Fraction

from hypothesis import strategies as st

from lcgeo.lcf import LcfNumber

# exponent lattice used by the randomized field-law suites: denominators <= 4,
# values in [-2, 2]
EXPONENTS = sorted(
    {Fraction(n, d) for d in (1, 2, 3, 4) for n in range(-2 * d, 2 * d + 1)}
)


def coefficients(min_mag=0.1, max_mag=10.0):
    mag = st.floats(min_value=min_mag, max_value=max_mag)
    phase = st.sampled_from([1, -1])
    imag = st.floats(min_value=-1.0, max_value=1.0)
    return st.builds(lambda m, s, i: complex(m * s, m * i), mag, phase, imag)


def lcf_numbers(max_terms=4, exponents=None, coeffs=None, window=None):
    # window=None: the library default. The field-axiom suites pass a window
    # wide enough that no intermediate product truncates: the ring laws hold
    # exactly there, while truncation behavior has its own frontier tests.
    exps = st.sampled_from(exponents if exponents is not None else EXPONENTS)
    kwargs = {} if window is None else {"window": window}
    return st.builds(
        lambda pairs: LcfNumber(tuple(pairs), **kwargs),
        st.lists(
            st.tuples(exps, coeffs if coeffs is not None else coefficients()),
            min_size=0,
            max_size=max_terms,
            unique_by=lambda t: t[0],
        ),
    )


def nonzero_lcf(max_terms=4, exponents=None):
    return lcf_numbers(max_terms, exponents).filter(lambda x: not x.is_zero())


LIMITED_EXPONENTS = [q for q in EXPONENTS if q >= 0]
