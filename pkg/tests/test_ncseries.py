from fractions import Fraction

import pytest

from jordanrep.errors import IllFormedComposition, ZeroOmega
from jordanrep.exact import SeriesScalar
from jordanrep.ncseries import (
    AlgebraPresentation,
    NCElement,
    e2_presentation,
    e3_presentation,
    momentum_spectrum,
    normal_order,
    normal_order_word,
    series_function_apply,
    suite_e2,
    suite_e3,
    suite_qe3,
)


def F(n, d=1):
    return Fraction(n, d)


def test_presentations_pass_jacobi():
    e2_presentation()
    e3_presentation()


def test_broken_presentation_fails_jacobi():
    # sl(2)-like rules with one structure constant corrupted
    def g(i):
        e = [0, 0, 0]
        e[i] = 1
        return tuple(e)

    with pytest.raises(ValueError, match="Jacobi"):
        AlgebraPresentation(
            names=("E", "H", "F"),
            rules={
                (1, 0): {g(0): F(2)},
                (2, 0): {g(0): F(-1)},   # should close on H, not E
                (2, 1): {g(2): F(2)},
            },
        )


def test_normal_order_single_swap():
    p = e3_presentation()
    el = normal_order(("J+", "J-"), p, order=4)
    jm_jp = normal_order(("J-", "J+"), p, order=4)
    j0 = NCElement.generator(p, "J0", 4)
    assert (el - jm_jp - j0).is_zero


def test_normal_order_commuting_translations():
    p = e3_presentation()
    el = normal_order(("Pi-", "Pi+"), p, order=2)
    assert list(el.terms) == [(0, 0, 0, 1, 0, 1)]
    assert el.terms[(0, 0, 0, 1, 0, 1)] == SeriesScalar.constant(1, 2)


def test_normal_order_schedules_agree(rng):
    for p in (e2_presentation(), e3_presentation()):
        for _ in range(60):
            word = tuple(rng.randrange(p.size) for _ in range(rng.randint(0, 5)))
            reference = normal_order_word(word, p)
            assert normal_order_word(word, p, schedule="rightmost") == reference
            assert normal_order_word(word, p, schedule="random", rng=rng) == reference


def test_normal_order_respects_associative_regrouping(rng):
    p = e3_presentation()
    for _ in range(40):
        u = tuple(rng.randrange(p.size) for _ in range(2))
        v = tuple(rng.randrange(p.size) for _ in range(2))
        combined = normal_order(u + v, p, order=3)
        regrouped = normal_order(u, p, order=3) * normal_order(v, p, order=3)
        assert (combined - regrouped).is_zero


def test_series_function_ln_map():
    # (1/w) ln(1 + w Pi+) = Pi+ - (w/2) Pi+^2 + (w^2/3) Pi+^3 ...
    p = e3_presentation()
    pi_p = NCElement.generator(p, "Pi+", 3)
    result = series_function_apply("ln1p", pi_p.mul_t(1)).div_t(1)
    mono = lambda k: (0, 0, 0, k, 0, 0)
    assert result.terms[mono(1)].coeffs[0] == 1
    assert result.terms[mono(2)].coeffs[1] == F(-1, 2)
    assert result.terms[mono(3)].coeffs[2] == F(1, 3)


def test_series_function_arctanh_map():
    # (2/h) arctanh(h P+ / 2) = P+ + (h^2/12) P+^3 + ...
    p = e2_presentation()
    pp = NCElement.generator(p, "P+", 4)
    result = series_function_apply("arctanh", pp.mul_t(1).scale(F(1, 2))).div_t(1).scale(2)
    assert result.terms[(0, 1, 0)].coeffs[0] == 1
    assert result.terms[(0, 3, 0)].coeffs[2] == F(1, 12)


def test_series_function_sqrt_of_one():
    p = e2_presentation()
    zero = NCElement.zero(p, 5)
    result = series_function_apply("sqrt1p", zero)
    assert (result - NCElement.one(p, 5)).is_zero


def test_series_function_rejects_nonzero_valuation():
    p = e2_presentation()
    with pytest.raises(IllFormedComposition):
        series_function_apply("exp", NCElement.generator(p, "P+", 4))


def test_suite_e2_passes():
    report = suite_e2(8)
    assert report.passed, [e.relation_label for e in report.failures()]
    chi_eta = next(e for e in report.entries if e.relation_label == "[chi,eta] = 0")
    assert chi_eta.status == "pass"


def test_suite_e3_passes():
    report = suite_e3(8)
    assert report.passed, [e.relation_label for e in report.failures()]
    labels = {e.relation_label for e in report.entries}
    assert "[P+,P-] = 0" in labels
    assert "[J0,P-] = -2P- + (w/2)P0^2" in labels
    assert "round trip: P0 e^{wP+} = Pi0" in labels


def test_suite_qe3_passes():
    report = suite_qe3(6)
    assert report.passed, [e.relation_label for e in report.failures()]
    labels = {e.relation_label for e in report.entries}
    assert "[P0,P+] = 0" in labels
    assert any(label.startswith("C1 = P+ P-") for label in labels)


@pytest.mark.parametrize("order", [2, 4, 6])
def test_truncation_monotonicity(order):
    assert suite_e2(order).passed
    assert suite_e3(order).passed
    assert suite_qe3(order).passed


def test_deformed_generators_reduce_classically():
    # order-0 parts of the e3 inverse-map generators are the classical ones
    from jordanrep.ncseries import _e3_deformed

    p = e3_presentation()
    pi_p, pi_0, pi_m, p_plus, p_zero, p_minus = _e3_deformed(p, 6)
    for deformed, classical in ((p_plus, pi_p), (p_zero, pi_0), (p_minus, pi_m)):
        assert deformed.order_part(0) == classical.order_part(0)


def test_report_locates_series_failures():
    report = suite_e2(4)
    # corrupt a residual by hand through the public checker
    p = e2_presentation()
    residual = NCElement.generator(p, "P+", 4).mul_t(2).div_t(1)
    report.check_series_zero("forced failure", residual, 3)
    entry = report.entries[-1]
    assert entry.status == "fail"
    assert "order 1" in entry.detail and "P+" in entry.detail


def test_momentum_spectrum_classification():
    scan = momentum_spectrum(1.0, [-2.0, -1.0, 0.0, 1.0])
    classes = {row["input"]: row["class"] for row in scan["rows"]}
    assert classes == {-2.0: "complex", -1.0: "singular", 0.0: "regular", 1.0: "regular"}
    assert scan["singular_hit"]
    row_complex = next(r for r in scan["rows"] if r["class"] == "complex")
    import math

    assert row_complex["im_p_plus"] == pytest.approx(math.pi)
    row_zero = next(r for r in scan["rows"] if r["input"] == 0.0)
    assert row_zero["re_p_plus"] == 0.0
    assert row_zero["p_minus"] == pytest.approx(1.25)
    assert row_zero["p_zero"] == 1.0


def test_momentum_spectrum_nearest_approach_diagnostic():
    scan = momentum_spectrum(1.0, [-0.75, 0.25])
    assert not scan["singular_hit"]
    assert scan["nearest_approach"]["input"] == -0.75


def test_momentum_spectrum_rejects_zero_omega():
    with pytest.raises(ZeroOmega):
        momentum_spectrum(0.0, [1.0])
