import pytest

from conftest import EX1_BAR, EX1_G
from qrsync.cyclic import dual
from qrsync.poly2 import Poly, parse, x_n_minus_1
from qrsync.qr import X_PLUS_1, build_qr_family, verify_lemma2


def test_family_31_contains_example_polynomial():
    fam = build_qr_family(31)
    assert EX1_G in {fam.g_r, fam.g_nr}
    label = fam.paper_canonical(EX1_G)
    assert label == "NR"  # for alpha = x mod x^5+x^2+1
    assert fam.codes()[label + "_bar"].g == EX1_BAR
    assert fam.paper_canonical(EX1_BAR) == label
    with pytest.raises(KeyError):
        fam.paper_canonical(parse("x+1"))


def test_family_7_is_hamming_pair():
    fam = build_qr_family(7)
    assert {fam.g_r, fam.g_nr} == {parse("x^3+x+1"), parse("x^3+x^2+1")}


@pytest.mark.parametrize("p", [7, 17, 23, 31, 41, 47])
def test_family_invariants(p):
    fam = build_qr_family(p)
    assert fam.c_r_code.k == fam.c_nr_code.k == (p + 1) // 2
    assert fam.c_r_bar.k == fam.c_nr_bar.k == (p - 1) // 2
    assert fam.c_r_bar.g == X_PLUS_1 * fam.g_r
    assert X_PLUS_1 * fam.g_r * fam.g_nr == x_n_minus_1(p)
    assert fam.g_r.degree == fam.g_nr.degree == (p - 1) // 2


@pytest.mark.parametrize("p", [7, 23, 31, 47, 71, 127])
def test_dual_generator_is_x_plus_one_times_g(p):
    fam = build_qr_family(p)
    for g in (fam.g_r, fam.g_nr):
        h = x_n_minus_1(p) // g
        assert h.reversed() == X_PLUS_1 * g


@pytest.mark.parametrize("p", [31, 23])
def test_verify_lemma2(p):
    rep = verify_lemma2(build_qr_family(p))
    assert rep.ok
    assert all(rep.as_dict()[k] for k in rep.as_dict() if k != "p")


def test_verify_lemma2_refuses_plus_one():
    fam = build_qr_family(17)
    assert dual(fam.c_r_code) != fam.c_r_bar  # for p = 1 mod 8 the dual is the other bar code
    with pytest.raises(ValueError, match="-1 mod 8"):
        verify_lemma2(fam)


def test_example1_printed_bar_is_not_a_multiple_of_x_plus_one():
    printed = parse("x^16+x^15+x^13+x^12+x^8+x^6+x^3+x+1")
    assert printed.at_one() == 1
    assert printed != X_PLUS_1 * EX1_G
    assert Poly(printed.value ^ (X_PLUS_1 * EX1_G).value) == parse("x")
