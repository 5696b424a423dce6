"""Property-based checks (hypothesis, 1000 examples each)."""

from functools import lru_cache, reduce

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import doubling_orbits, pmul, to_list
from qrsync.arith import cyclotomic_cosets
from qrsync.chain import chain_pair
from qrsync.cyclic import contains, cyclic_shift, dual, new_cyclic
from qrsync.field import factor_x_n_minus_1
from qrsync.poly2 import ONE, Poly, divrem, mod_pow_x, x_n_minus_1
from qrsync.syncsim import misalignment_table

SETTINGS = settings(max_examples=1000, deadline=None)

polys = st.integers(min_value=0, max_value=(1 << 80) - 1).map(Poly)
nonzero = st.integers(min_value=1, max_value=(1 << 40) - 1).map(Poly)
odd_n = st.integers(min_value=1, max_value=499).map(lambda k: 2 * k + 1)
small_odd_n = st.sampled_from([3, 5, 7, 9, 15, 17, 21, 23, 31, 33, 35, 45, 51, 63])


@lru_cache(maxsize=None)
def factors(n):
    return tuple(factor_x_n_minus_1(n).values())


@st.composite
def divisor_codes(draw):
    n = draw(small_odd_n)
    fs = factors(n)
    keep = draw(st.lists(st.booleans(), min_size=len(fs), max_size=len(fs)))
    g = reduce(lambda a, b: a * b, (f for f, k in zip(fs, keep) if k), ONE)
    return new_cyclic(n, g)


@SETTINGS
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + a == Poly(0) and a * ONE == a


@SETTINGS
@given(polys, nonzero)
def test_divrem_round_trip(a, b):
    q, r = divrem(a, b)
    assert q * b + r == a
    assert r.degree is None or r.degree < b.degree


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, (1 << 12) - 1), st.integers(0, (1 << 12) - 1))
def test_mul_matches_schoolbook(a, b):
    assert to_list(Poly(a) * Poly(b)) == pmul(to_list(a), to_list(b))


@SETTINGS
@given(divisor_codes())
def test_dual_involution(c):
    assert dual(dual(c)) == c
    assert dual(c).k == c.n - c.k
    assert c.g * c.h == x_n_minus_1(c.n)


@SETTINGS
@given(divisor_codes(), st.data())
def test_cyclic_shift_closure(c, data):
    m = Poly(data.draw(st.integers(0, (1 << max(c.k, 1)) - 1)))
    w = (m * c.g).value if c.k else 0
    s = data.draw(st.integers(-2 * c.n, 2 * c.n))
    assert c.is_codeword(cyclic_shift(w, s, c.n))


@SETTINGS
@given(odd_n)
def test_coset_partition(n):
    part = cyclotomic_cosets(n)
    flat = sorted(x for cs in part.cosets for x in cs)
    assert flat == list(range(n))
    assert sorted(map(sorted, part.cosets)) == sorted(map(sorted, doubling_orbits(n)))
    for cs in part.cosets:
        assert all(2 * x % n in cs for x in cs)
        assert part.rep_of(cs[-1]) == min(cs)


@SETTINGS
@given(st.sampled_from([(7, 0), (31, 0), (31, 1), (127, 0), (127, 4)]), st.integers(0, 200))
def test_misalignment_table_injective(pz, split):
    p, z = pz
    c1, c2 = chain_pair(p, z, 1)
    assert contains(c1, c2)
    f = c2.g // c1.g
    c_l = split % p
    c_r = p - 1 - c_l
    tab = misalignment_table(f, p, c_l, c_r)
    assert len(tab) == p
    for key, theta in list(tab.items())[:: max(1, p // 8)]:
        assert mod_pow_x((-theta) % p, f).value == key
