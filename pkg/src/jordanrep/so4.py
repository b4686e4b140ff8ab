"""The deformed so(4) built on two commuting copies of the deformed sl(2).

Copy 1 carries deformation parameter +h and copy 2 carries -h (the -h copy
is produced by the substitution h -> -h on matrix entries).  On the tensor
product of two finite-dimensional irreps we form

    J+ = X1 + X2                     K+ = X1 - X2
    J- = Y1 e^{hX2} + e^{-hX1} Y2    K- = Y1 e^{hX2} - e^{-hX1} Y2
    J0 = H1 e^{hX2} + e^{-hX1} H2    K0 = H1 e^{hX2} - e^{-hX1} H2

and verify the full list of bracket relations and the coalgebra maps as
exact polynomial-matrix identities.  All exponentials terminate: the raising
matrices are strictly upper triangular, so J+ and K+ (and any combination of
X1, X2) are nilpotent.

Verification runs on concrete representations: passing at several (j1, j2)
pairs is evidence for the abstract identities, not a proof, and the default
suite covers (1/2,1/2), (1,1/2) and (1,1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch
from .exact import (
    PolyMatrix,
    TensorSum,
    anticommutator,
    commutator,
    nilpotent_apply,
)
from .irrep import classical_rep, ensure_half_integer, map_to_deformed, sinh_over_h
from .report import VerificationReport

GENERATOR_NAMES = ("J+", "J-", "J0", "K+", "K-", "K0")


@dataclass(frozen=True)
class So4Rep:
    """Six composite generators on a (2j1+1)(2j2+1)-dimensional space,
    together with the per-copy tensored triples they were built from."""

    j1: Fraction
    j2: Fraction
    J_plus: PolyMatrix
    J_minus: PolyMatrix
    J_zero: PolyMatrix
    K_plus: PolyMatrix
    K_minus: PolyMatrix
    K_zero: PolyMatrix
    copies: dict

    @property
    def dim(self) -> int:
        return self.J_plus.rows

    def generators(self) -> dict[str, PolyMatrix]:
        return {
            "J+": self.J_plus,
            "J-": self.J_minus,
            "J0": self.J_zero,
            "K+": self.K_plus,
            "K-": self.K_minus,
            "K0": self.K_zero,
        }


def _exp(m: PolyMatrix, sign: int) -> PolyMatrix:
    return nilpotent_apply("exp", m.scale(sign), h_scale=1)


def build_so4(j1, j2) -> So4Rep:
    j1, j2 = ensure_half_integer(j1), ensure_half_integer(j2)
    one = map_to_deformed(classical_rep(j1))
    two = map_to_deformed(classical_rep(j2))
    # copy 2 carries parameter -h
    x2s, y2s, h2s = two.X.negate_h(), two.Y.negate_h(), two.H.negate_h()

    i1 = PolyMatrix.identity(one.dim)
    i2 = PolyMatrix.identity(two.dim)
    x1 = one.X.kron(i2)
    y1 = one.Y.kron(i2)
    h1 = one.H.kron(i2)
    x2 = i1.kron(x2s)
    y2 = i1.kron(y2s)
    h2 = i1.kron(h2s)

    e_x2 = i1.kron(_exp(x2s, +1))      # e^{h X2}
    f_x1 = _exp(one.X, -1).kron(i2)    # e^{-h X1}

    return So4Rep(
        j1=j1,
        j2=j2,
        J_plus=x1 + x2,
        J_minus=y1 * e_x2 + f_x1 * y2,
        J_zero=h1 * e_x2 + f_x1 * h2,
        K_plus=x1 - x2,
        K_minus=y1 * e_x2 - f_x1 * y2,
        K_zero=h1 * e_x2 - f_x1 * h2,
        copies={
            "x1": x1, "y1": y1, "h1": h1,
            "x2": x2, "y2": y2, "h2": h2,
        },
    )


def verify_so4_relations(r: So4Rep) -> VerificationReport:
    """Every bracket of the composite algebra as an exact identity."""
    report = VerificationReport(f"so4 relations j1={r.j1} j2={r.j2}")
    jp, jm, j0 = r.J_plus, r.J_minus, r.J_zero
    kp, km, k0 = r.K_plus, r.K_minus, r.K_zero

    sinh_jp = nilpotent_apply("sinh", jp, h_scale=1)
    cosh_jp = nilpotent_apply("cosh", jp, h_scale=1)
    two_sinh_over_h = sinh_over_h(jp).scale(2)
    e_mkp = _exp(kp, -1)   # e^{-h K+}
    e_pjp = _exp(jp, +1)   # e^{+h J+}
    e_mjp = _exp(jp, -1)   # e^{-h J+}

    report.check_matrix_identity("[J0,J+] = (2/h) sinh(hJ+)",
                                 commutator(j0, jp), two_sinh_over_h)
    report.check_matrix_identity("[K0,K+] = (2/h) sinh(hJ+)",
                                 commutator(k0, kp), two_sinh_over_h)
    report.check_matrix_identity("[J0,J-] = -{J-, cosh(hJ+)}",
                                 commutator(j0, jm), -anticommutator(jm, cosh_jp))
    report.check_matrix_identity("[J+,J-] = J0", commutator(jp, jm), j0)
    report.check_matrix_identity("[K+,K-] = J0", commutator(kp, km), j0)
    report.check_matrix_identity(
        "[K0,K-] = -{J-, e^{-hK+}} - {K-, sinh(hJ+)}",
        commutator(k0, km),
        -anticommutator(jm, e_mkp) - anticommutator(km, sinh_jp),
    )
    cosh_minus_exp = (cosh_jp - e_mkp).divide_h(1).scale(2)
    report.check_matrix_identity("[J0,K+] = (2/h)(cosh(hJ+) - e^{-hK+})",
                                 commutator(j0, kp), cosh_minus_exp)
    report.check_matrix_identity("[K0,J+] = (2/h)(cosh(hJ+) - e^{-hK+})",
                                 commutator(k0, jp), cosh_minus_exp)

    # h/8-weighted quadratic tail shared by [J0,K-] and [K0,J-]
    plus_part = (j0 + k0) * e_mjp + e_mjp * (j0 + k0)
    minus_part = (j0 - k0) * e_pjp + e_pjp * (j0 - k0)
    quad = (plus_part * minus_part).scale(Fraction(1, 8)).mul_h(1)
    report.check_matrix_identity(
        "[J0,K-] = -{K-, cosh(hJ+)} - (h/8)(J0+K0,e^{-hJ+})(J0-K0,e^{hJ+})",
        commutator(j0, km),
        -anticommutator(km, cosh_jp) - quad,
    )
    report.check_matrix_identity(
        "[K0,J-] = -{K-, e^{-hK+}} - {J-, sinh(hJ+)} + (h/8)(J0+K0,e^{-hJ+})(J0-K0,e^{hJ+})",
        commutator(k0, jm),
        -anticommutator(km, e_mkp)
        - (sinh_jp * jm + jm * sinh_jp)
        + quad,
    )
    report.check_matrix_identity("[J+,K-] = K0", commutator(jp, km), k0)
    report.check_matrix_identity("[K+,J-] = K0", commutator(kp, jm), k0)
    report.check_matrix_identity("[J+,K+] = 0", commutator(jp, kp),
                                 PolyMatrix.zeros(r.dim, r.dim))
    jmkm = (
        -((jm + km) * (e_mjp * (j0 - k0) * e_pjp + (j0 - k0))).scale(Fraction(1, 4))
        - (((j0 + k0) * e_mjp + e_mjp * (j0 + k0)) * (jm - km) * e_pjp).scale(Fraction(1, 4))
    ).mul_h(1)
    report.check_matrix_identity(
        "[J-,K-] = -(h/4)(J-+K-)(e^{-hJ+}(J0-K0)e^{hJ+}+(J0-K0)) - (h/4)((J0+K0),e^{-hJ+})(J--K-)e^{hJ+}",
        commutator(jm, km),
        jmkm,
    )
    report.check_matrix_identity(
        "[J0,K0] = 2 J0 sinh(hJ+) + 2 K0 (e^{-hK+} - cosh(hJ+))",
        commutator(j0, k0),
        (j0 * sinh_jp).scale(2) + (k0 * (e_mkp - cosh_jp)).scale(2),
    )
    return report


# -- coalgebra -------------------------------------------------------------------
#
# Coproducts on the tensor square are handled as sums of Kronecker pairs so
# products never touch assembled dim^2 x dim^2 matrices.


def _coproducts_direct(r: So4Rep) -> dict[str, TensorSum]:
    """Route (a): coproducts written directly in the composite generators."""
    i = PolyMatrix.identity(r.dim)
    cosh_jp = nilpotent_apply("cosh", r.J_plus, h_scale=1)
    sinh_jp = nilpotent_apply("sinh", r.J_plus, h_scale=1)
    e_mkp = _exp(r.K_plus, -1)
    return {
        "J+": TensorSum([(r.J_plus, i), (i, r.J_plus)]),
        "J-": TensorSum([(r.J_minus, cosh_jp), (e_mkp, r.J_minus), (r.K_minus, sinh_jp)]),
        "J0": TensorSum([(r.J_zero, cosh_jp), (e_mkp, r.J_zero), (r.K_zero, sinh_jp)]),
        "K+": TensorSum([(r.K_plus, i), (i, r.K_plus)]),
        "K-": TensorSum([(r.K_minus, cosh_jp), (e_mkp, r.K_minus), (r.J_minus, sinh_jp)]),
        "K0": TensorSum([(r.K_zero, cosh_jp), (e_mkp, r.K_zero), (r.J_zero, sinh_jp)]),
    }


def _coproducts_per_copy(r: So4Rep) -> dict[str, TensorSum]:
    """Route (b): apply the per-copy coproducts to the defining combinations.

    Copy i has D(X_i) = X_i (x) 1 + 1 (x) X_i (so exponentials of X_i are
    group-like), D(Y_i) = Y_i (x) e^{h theta_i X_i} + e^{-h theta_i X_i} (x) Y_i
    with theta_1 = +1, theta_2 = -1, and likewise for H_i."""
    c = r.copies
    i = PolyMatrix.identity(r.dim)
    e_x1p = _exp(c["x1"], +1)
    e_x1m = _exp(c["x1"], -1)
    e_x2p = _exp(c["x2"], +1)
    e_x2m = _exp(c["x2"], -1)

    def primitive(m):
        return TensorSum([(m, i), (i, m)])

    def twisted(m, e_plus, e_minus):
        # D(g) = g (x) e^{h theta X} + e^{-h theta X} (x) g
        return TensorSum([(m, e_plus), (e_minus, m)])

    d_x1 = primitive(c["x1"])
    d_x2 = primitive(c["x2"])
    d_y1 = twisted(c["y1"], e_x1p, e_x1m)
    d_h1 = twisted(c["h1"], e_x1p, e_x1m)
    d_y2 = twisted(c["y2"], e_x2m, e_x2p)   # theta_2 = -1 swaps the exponentials
    d_h2 = twisted(c["h2"], e_x2m, e_x2p)
    d_e_x2 = TensorSum([(e_x2p, e_x2p)])    # group-like: D(e^{hX2}) = e^{hX2} (x) e^{hX2}
    d_f_x1 = TensorSum([(e_x1m, e_x1m)])

    d_jm = d_y1 * d_e_x2 + d_f_x1 * d_y2
    d_j0 = d_h1 * d_e_x2 + d_f_x1 * d_h2
    d_km = d_y1 * d_e_x2 + (-(d_f_x1 * d_y2))
    d_k0 = d_h1 * d_e_x2 + (-(d_f_x1 * d_h2))
    return {
        "J+": d_x1 + d_x2,
        "J-": d_jm,
        "J0": d_j0,
        "K+": d_x1 + (-d_x2),
        "K-": d_km,
        "K0": d_k0,
    }


def _antipodes_direct(r: So4Rep) -> dict[str, PolyMatrix]:
    cosh_jp = nilpotent_apply("cosh", r.J_plus, h_scale=1)
    sinh_jp = nilpotent_apply("sinh", r.J_plus, h_scale=1)
    e_pkp = _exp(r.K_plus, +1)
    return {
        "J+": -r.J_plus,
        "J-": -(e_pkp * (r.J_minus * cosh_jp - r.K_minus * sinh_jp)),
        "J0": -(e_pkp * (r.J_zero * cosh_jp - r.K_zero * sinh_jp)),
        "K+": -r.K_plus,
        "K-": -(e_pkp * (r.K_minus * cosh_jp - r.J_minus * sinh_jp)),
        "K0": -(e_pkp * (r.K_zero * cosh_jp - r.J_zero * sinh_jp)),
    }


def _antipodes_per_copy(r: So4Rep) -> dict[str, PolyMatrix]:
    """The antipode is an anti-homomorphism, so on the combinations:
    S(Y1 e^{hX2}) = S(e^{hX2}) S(Y1), with per-copy values
    S(Y_i) = -e^{h theta_i X_i} Y_i e^{-h theta_i X_i} and S(X_i) = -X_i."""
    c = r.copies
    e_x1p, e_x1m = _exp(c["x1"], +1), _exp(c["x1"], -1)
    e_x2p, e_x2m = _exp(c["x2"], +1), _exp(c["x2"], -1)
    s_y1 = -(e_x1p * c["y1"] * e_x1m)
    s_h1 = -(e_x1p * c["h1"] * e_x1m)
    s_y2 = -(e_x2m * c["y2"] * e_x2p)
    s_h2 = -(e_x2m * c["h2"] * e_x2p)
    s_e_x2 = e_x2m          # S(e^{hX2}) = e^{-hX2}
    s_f_x1 = e_x1p          # S(e^{-hX1}) = e^{hX1}
    return {
        "J+": -c["x1"] - c["x2"],
        "J-": s_e_x2 * s_y1 + s_y2 * s_f_x1,
        "J0": s_e_x2 * s_h1 + s_h2 * s_f_x1,
        "K+": -c["x1"] + c["x2"],
        "K-": s_e_x2 * s_y1 - s_y2 * s_f_x1,
        "K0": s_e_x2 * s_h1 - s_h2 * s_f_x1,
    }


def verify_so4_coalgebra(r_left: So4Rep, r_right: So4Rep) -> VerificationReport:
    """Coproducts computed two ways on the tensor square, antipodes against
    per-copy antipodes, and counit compatibility."""
    if (r_left.j1, r_left.j2) != (r_right.j1, r_right.j2):
        raise DimensionMismatch("both sides must carry the same (j1, j2)")
    r = r_left
    report = VerificationReport(f"so4 coalgebra j1={r.j1} j2={r.j2}")

    direct = _coproducts_direct(r)
    per_copy = _coproducts_per_copy(r_right)
    for name in GENERATOR_NAMES:
        report.check_matrix_identity(
            f"coproduct of {name}: direct = per-copy",
            direct[name].to_matrix(),
            per_copy[name].to_matrix(),
        )

    s_direct = _antipodes_direct(r)
    s_per_copy = _antipodes_per_copy(r)
    for name in GENERATOR_NAMES:
        report.check_matrix_identity(
            f"antipode of {name}: direct = per-copy",
            s_direct[name],
            s_per_copy[name],
        )

    # counit: all six generators have counit zero, and collapsing the left
    # tensor leg of the direct coproduct must reproduce the generator.  The
    # counit evaluation sends every generator matrix to the 1x1 zero, hence
    # cosh -> 1, sinh -> 0, e^{-hK+} -> 1.
    gens = r.generators()
    for name in GENERATOR_NAMES:
        collapsed = _collapse_left_leg(direct[name], gens)
        report.check_matrix_identity(
            f"counit (eps x id) on {name}", collapsed, gens[name]
        )
    return report


def _collapse_left_leg(tensor_sum: TensorSum, gens: dict[str, PolyMatrix]) -> PolyMatrix:
    """Apply the counit to the left tensor legs.

    Left legs are generators (counit 0), identity / group-like exponentials
    (counit 1), or cosh/sinh of a generator (counit 1 / 0).  Rather than
    pattern-match we evaluate each left-leg matrix at the one-dimensional
    trivial representation: legs here are polynomials in the six generators,
    and the trivial representation sends each generator to 0, which is
    exactly the counit on this list."""
    gen_values = list(gens.values())
    acc = None
    for left, right in tensor_sum.pairs:
        weight = _counit_value(left, gen_values)
        term = right.scale(weight)
        acc = term if acc is None else acc + term
    return acc


def _counit_value(leg: PolyMatrix, gens: list[PolyMatrix]):
    """Counit of the specific left-leg matrices appearing in the direct
    coproducts: 0 for a generator, else the scalar of the identity-plus-
    nilpotent combination (always 1 here)."""
    for g in gens:
        if leg == g:
            return Fraction(0)
    # remaining legs are 1, e^{-hK+}, cosh(hJ+) or sinh(hJ+); their counit is
    # their classical scalar part, read off at h = 0 in the top-left entry of
    # the h->0 limit (identity-like -> 1, sinh-like -> 0).
    limit = leg.subs_h(0)
    value = limit[0, 0].constant_value()
    d = leg.rows
    if limit == PolyMatrix.identity(d).scale(value):
        return value
    raise ValueError("unexpected left leg in coproduct")
