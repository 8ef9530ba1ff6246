import cmath
from fractions import Fraction
from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from jdec.cyclotomic import Cyclotomic, cyclotomic_poly, euler_phi, format_cyclotomic, parse_cyclotomic

conductors = st.sampled_from([1, 2, 3, 4, 5, 8, 9, 12, 15])


@st.composite
def element(draw, n=None):
    n = n or draw(conductors)
    terms = draw(st.dictionaries(st.integers(0, n - 1), st.integers(-4, 4), max_size=4))
    return Cyclotomic.from_exponents(n, terms)


@st.composite
def pair(draw):
    n = draw(conductors)
    return draw(element(n)), draw(element(n))


def emb(x):
    return complex(x)


def close(a, b):
    return abs(a - b) < 1e-9


def test_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert [euler_phi(n) for n in (1, 8, 9, 12, 15)] == [1, 4, 6, 4, 8]


def test_sqrt2_identities():
    z = Cyclotomic.zeta_power(8, 1)
    i_sqrt2 = z + z * z * z
    assert i_sqrt2 * i_sqrt2 == -2
    assert Cyclotomic.rational(8, 3).trace() == 12
    assert Cyclotomic.zeta_power(8, 8) == 1


@settings(max_examples=500)
@given(pair())
def test_ring_ops_match_complex(p):
    x, y = p
    assert close(emb(x + y), emb(x) + emb(y))
    assert close(emb(x * y), emb(x) * emb(y))
    assert close(emb(x - y), emb(x) - emb(y))


@settings(max_examples=500)
@given(pair(), st.integers(1, 60))
def test_galois_is_ring_map(p, k):
    x, y = p
    n = x.n
    k = k % n or 1
    if gcd(k, n) != 1:
        return
    assert (x * y).galois(k) == x.galois(k) * y.galois(k)
    assert (x + y).galois(k) == x.galois(k) + y.galois(k)


@settings(max_examples=300)
@given(element())
def test_trace_sums_conjugates(x):
    n = x.n
    s = sum(emb(x.galois(k)) for k in range(1, n + 1) if gcd(k, n) == 1)
    assert close(s, complex(x.trace()))
    assert close(emb(x.conjugate()), emb(x).conjugate())


def test_parse_forms():
    z = cmath.exp(2j * cmath.pi / 8)
    assert close(emb(parse_cyclotomic("zeta8 + zeta8^3", 8)), z + z ** 3)
    assert parse_cyclotomic("-2", 8) == -2
    w = cmath.exp(2j * cmath.pi / 3)
    assert close(emb(parse_cyclotomic("1/2*zeta3^2 - 1", 3)), w * w / 2 - 1)
    # zeta4 inside Q(zeta8)
    assert parse_cyclotomic("zeta4", 8) == parse_cyclotomic("zeta8^2", 8)
    assert parse_cyclotomic(3, 1).to_rational() == Fraction(3)


@settings(max_examples=200)
@given(element())
def test_format_roundtrip(x):
    assert parse_cyclotomic(format_cyclotomic(x), x.n) == x
