from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanrep.exact import BiPoly, LAM, H

ONE = BiPoly.one()


def test_add_trivial():
    assert LAM + LAM == LAM.scale(2)


def test_mul_by_identity():
    p = LAM - 2
    assert p * ONE == p


def test_specialized_product_matches_golden_entry():
    # -lam(lam-1) h^2 at lam=7 is the golden (0,2) entry of the 8x8 H matrix
    p = (-LAM * (LAM - 1)).mul_h(2)
    assert p.subs_lam(7) == BiPoly.term(-42, 0, 2)


def test_specialize_lambda_examples():
    assert (LAM - 0).subs_lam(2) == BiPoly.const(2)          # lam - 2n, n=0, j=1
    p = BiPoly.const(6) * (LAM - 5)                          # (n+1)(lam - n) at n=5
    assert p.subs_lam(7) == BiPoly.const(12)


def test_specialize_sigma2_partial_sum():
    # independent oracle: rho2(k) at lam=7 evaluated directly from its formula,
    # then summed k=0..5
    lam = Fraction(7)

    def rho2(n):
        acc = Fraction(0)
        for k in range(n):
            acc -= (k + 1) * (k + 2) * (lam - k) * (lam - k - 1)
        acc -= Fraction((n + 1) * (n + 2), 2) * (lam - n) * (lam - n - 1)
        return acc

    assert sum(rho2(k) for k in range(6)) == -3024


def test_canonical_form_drops_zero_terms():
    p = LAM - LAM
    assert p.is_zero
    assert list(p.items()) == []
    assert p == BiPoly.zero()


def test_divide_h_exact_and_failing():
    p = BiPoly.term(3, 1, 2)
    assert p.divide_h(2) == BiPoly.term(3, 1, 0)
    with pytest.raises(ValueError):
        (p + ONE).divide_h(1)


def test_negate_h_flips_odd_powers_only():
    p = BiPoly.term(1, 0, 1) + BiPoly.term(2, 1, 2)
    assert p.negate_h() == BiPoly.term(-1, 0, 1) + BiPoly.term(2, 1, 2)


def test_homogeneity_query():
    assert BiPoly.term(5, 3, 2).is_homogeneous_h(2)
    assert not (BiPoly.term(5, 3, 2) + H).is_homogeneous_h(2)
    assert BiPoly.zero().is_homogeneous_h(4)


def test_constant_value():
    assert BiPoly.const(Fraction(3, 4)).constant_value() == Fraction(3, 4)
    with pytest.raises(ValueError):
        LAM.constant_value()


def test_json_round_trip():
    p = BiPoly.term(Fraction(-21, 2), 0, 2) + BiPoly.term(1, 3, 0) - 5
    obj = p.to_obj()
    assert {"c": "-21/2", "l": 0, "h": 2} in obj
    assert BiPoly.from_obj(obj) == p


def test_pow():
    assert (LAM + 1) ** 2 == LAM * LAM + LAM.scale(2) + 1
    assert (LAM + 1) ** 0 == ONE


coeffs = st.fractions(
    min_value=-10, max_value=10, max_denominator=6
)
polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), coeffs, max_size=4
).map(BiPoly)


@settings(max_examples=120, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + b == b + a
    assert a - a == BiPoly.zero()
