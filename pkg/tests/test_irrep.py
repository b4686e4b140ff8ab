from fractions import Fraction

import pytest

from jordanrep.exact import BiPoly, PolyMatrix, charpoly
from jordanrep.irrep import (
    Irrep,
    act,
    casimir,
    classical_rep,
    ensure_half_integer,
    map_to_deformed,
    singular_vector,
    verify_hopf,
    verify_sl2_relations,
    verma_basis_irrep,
)
from jordanrep.verma import build_table

import golden

HALF = Fraction(1, 2)


def test_ensure_half_integer():
    assert ensure_half_integer("7/2") == Fraction(7, 2)
    with pytest.raises(ValueError):
        ensure_half_integer(Fraction(1, 3))
    with pytest.raises(ValueError):
        ensure_half_integer(-1)


def test_singular_vector_table():
    for lam, expected in golden.SINGULAR_VECTORS.items():
        sv = singular_vector(Fraction(lam, 2))
        assert len(sv.coeffs) == len(expected)
        for p, (coeff, value) in enumerate(zip(sv.coeffs, expected), start=1):
            assert coeff == BiPoly.term(value, 0, 2 * p), (lam, p)
            assert coeff.is_homogeneous_h(2 * p)


def test_singular_vector_levels_layout():
    sv = singular_vector(2)
    vec = sv.levels()
    assert vec[5] == BiPoly.one()
    assert vec[3] == BiPoly.term(21, 0, 2)
    assert vec[1] == BiPoly.term(36, 0, 4)


def test_singular_vector_annihilated_and_eigen():
    # X kills the singular vector exactly; H has eigenvalue lam - 2(2j+1)
    for lam in range(13):
        table = build_table(lam + 2)
        sv = singular_vector(Fraction(lam, 2), table)
        vec = sv.levels()
        assert act(table, "X", vec, lam=lam) == {}, lam
        h_vec = act(table, "H", vec, lam=lam)
        eigen = BiPoly.const(lam - 2 * (lam + 1))
        assert h_vec == {m: eigen * c for m, c in vec.items()}, lam


def test_trivial_irrep_j_zero():
    r = verma_basis_irrep(0)
    assert r.dim == 1
    assert r.X.is_zero and r.Y.is_zero and r.H.is_zero
    assert verify_sl2_relations(r).passed
    sc, value = casimir(r)
    assert sc and value.is_zero


def test_verma_irrep_j_half():
    r = verma_basis_irrep(HALF)
    assert r.X == PolyMatrix([[0, 1], [0, 0]])
    assert r.Y == PolyMatrix([[0, 0], [1, 0]])
    assert r.H == PolyMatrix.diagonal([1, -1])


def test_verma_irrep_seven_halves_golden():
    r = verma_basis_irrep(Fraction(7, 2))
    assert r.X == golden.VERMA_X
    assert r.Y == golden.VERMA_Y
    assert r.H == golden.VERMA_H


def test_verma_irrep_j_two_y_corrections():
    r = verma_basis_irrep(2)
    assert r.Y[3, 4] == BiPoly.term(-21, 0, 2)
    assert r.Y[1, 4] == BiPoly.term(-36, 0, 4)
    assert r.Y[2, 1] == BiPoly.one()


def test_classical_rep_small():
    r = classical_rep(HALF)
    assert r.plus == PolyMatrix([[0, 1], [0, 0]])
    assert r.minus == PolyMatrix([[0, 0], [1, 0]])
    assert r.zero == PolyMatrix.diagonal([1, -1])
    r1 = classical_rep(1)
    assert [r1.plus[i, i + 1] for i in range(2)] == [BiPoly.const(2)] * 2
    assert [r1.minus[i + 1, i] for i in range(2)] == [BiPoly.one()] * 2
    r7 = classical_rep(Fraction(7, 2))
    superdiag = [r7.plus[i, i + 1].constant_value() for i in range(7)]
    assert superdiag == [7, 12, 15, 16, 15, 12, 7]


def test_classical_rep_brackets():
    for j in (HALF, 1, Fraction(3, 2), 2):
        r = classical_rep(j)
        assert (r.zero * r.plus - r.plus * r.zero) == r.plus.scale(2)
        assert (r.zero * r.minus - r.minus * r.zero) == r.minus.scale(-2)
        assert (r.plus * r.minus - r.minus * r.plus) == r.zero


def test_map_to_deformed_half_is_classical():
    c = classical_rep(HALF)
    r = map_to_deformed(c)
    assert (r.X, r.Y, r.H) == (c.plus, c.minus, c.zero)


def test_map_to_deformed_seven_halves_golden():
    r = map_to_deformed(classical_rep(Fraction(7, 2)))
    assert r.X == golden.DIAGONAL_X
    assert r.Y == golden.DIAGONAL_Y
    assert r.H == golden.DIAGONAL_H


def test_map_to_deformed_j_one_two_term_series():
    c = classical_rep(1)
    r = map_to_deformed(c)
    # J+^3 = 0, so the deformed X is J+ itself
    assert r.X == c.plus
    assert r.X[0, 2].is_zero
    # Y = J- - (h^2/8){J+^2, J-}; the (0,1) entry computed by hand
    sandwich = c.plus * c.plus * c.minus + c.minus * c.plus * c.plus
    expected = sandwich[0, 1].scale(Fraction(-1, 8)).mul_h(2)
    assert r.Y[0, 1] == expected
    assert expected == BiPoly.term(Fraction(-1, 2), 0, 2)


@pytest.mark.parametrize("j", [HALF, 1, Fraction(3, 2), Fraction(7, 2), 3])
def test_relations_both_bases(j):
    assert verify_sl2_relations(verma_basis_irrep(j)).passed
    assert verify_sl2_relations(map_to_deformed(classical_rep(j))).passed


def test_relations_negative_control():
    r = verma_basis_irrep(Fraction(3, 2))
    rows = [list(row) for row in r.X.entries]
    rows[0][1] = -rows[0][1]
    corrupted = Irrep(j=r.j, basis=r.basis, X=PolyMatrix(rows), Y=r.Y, H=r.H)
    report = verify_sl2_relations(corrupted)
    assert not report.passed
    failing = report.failures()
    assert failing
    assert "mismatch at" in failing[0].detail


def test_traces_vanish():
    for j in (HALF, 1, Fraction(5, 2)):
        for r in (verma_basis_irrep(j), map_to_deformed(classical_rep(j))):
            assert r.X.trace().is_zero
            assert r.Y.trace().is_zero
            assert r.H.trace().is_zero


def test_casimir_values():
    sc, value = casimir(verma_basis_irrep(HALF))
    assert sc and value == BiPoly.const(Fraction(3, 4))
    # both bases agree for j = 7/2, and the scalar is exactly j(j+1)
    sc_v, v_verma = casimir(verma_basis_irrep(Fraction(7, 2)))
    sc_d, v_diag = casimir(map_to_deformed(classical_rep(Fraction(7, 2))))
    assert sc_v and sc_d and v_verma == v_diag == BiPoly.const(Fraction(63, 4))


@pytest.mark.parametrize("j", [HALF, 1, 2, Fraction(5, 2)])
def test_casimir_classical_limit(j):
    for r in (verma_basis_irrep(j), map_to_deformed(classical_rep(j))):
        sc, value = casimir(r)
        assert sc
        assert value.subs_h(0).constant_value() == j * (j + 1)


def _weight_ladder_charpoly(j, dim):
    # expand prod_n (x - (2j - 2n)) over exact scalars, lowest power first
    coeffs = [Fraction(1)]
    for n in range(dim):
        mu = Fraction(2 * j - 2 * n)
        coeffs = [Fraction(0)] + coeffs
        coeffs = [
            coeffs[k] - (mu * coeffs[k + 1] if k + 1 < len(coeffs) else 0)
            for k in range(len(coeffs))
        ]
    return [BiPoly.const(c) for c in reversed(coeffs)]


def test_h_spectrum_via_characteristic_polynomial():
    j = HALF
    while j <= 6:
        r = verma_basis_irrep(j)
        assert charpoly(r.H) == _weight_ladder_charpoly(j, r.dim), j
        d = map_to_deformed(classical_rep(j))
        assert d.H == PolyMatrix.diagonal(
            [Fraction(2 * j - 2 * n) for n in range(d.dim)]
        ), j
        j += Fraction(1, 2)


def test_basis_equivalence():
    for jj in (1, Fraction(3, 2), 2, Fraction(7, 2), 4):
        a = verma_basis_irrep(jj)
        b = map_to_deformed(classical_rep(jj))
        assert casimir(a)[1] == casimir(b)[1]
        for name in ("X", "Y", "H"):
            assert charpoly(getattr(a, name)) == charpoly(getattr(b, name)), (jj, name)


def test_classical_limit_of_verma_matrices():
    r = verma_basis_irrep(Fraction(5, 2))
    lam = 5
    x0 = r.X.subs_h(0)
    h0 = r.H.subs_h(0)
    y0 = r.Y.subs_h(0)
    for n in range(r.dim):
        assert h0[n, n] == BiPoly.const(lam - 2 * n)
        if n + 1 < r.dim:
            assert x0[n, n + 1] == BiPoly.const((n + 1) * (lam - n))
            assert y0[n + 1, n] == BiPoly.one()
    assert x0.first_difference(r.X.map_entries(lambda p: p.subs_h(0))) is None


@pytest.mark.parametrize("j1,j2", [(HALF, HALF), (1, HALF)])
def test_hopf_checks(j1, j2):
    report = verify_hopf(j1, j2)
    assert report.passed
    labels = [e.relation_label for e in report.entries]
    assert any("counit" in label and "X" in label for label in labels)
    assert any("antipode" in label for label in labels)


def test_irrep_json_round_trip():
    r = verma_basis_irrep(Fraction(5, 2))
    again = Irrep.from_obj(r.to_obj())
    assert again == r
