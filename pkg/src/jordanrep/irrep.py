"""Finite-dimensional irreducible representations of the deformed algebra.

For weight lam = 2j the Verma module acquires a singular vector

    w_s = w_{2j+1} + sum_{p=1}^{[j]} C_p w_{2j-2p+1},

whose coefficients solve a triangular linear system in the X elements
specialized at lam = 2j.  Factoring out the submodule it generates leaves a
(2j+1)-dimensional irreducible on w_0..w_{2j}: X and H restrict from the
element table, and Y is the unit subdiagonal plus corrections -C_p in the
last column.

The same irreps arise from the invertible nonlinear map on a classical
spin-j triple (J+, J-, J0),

    X = (2/h) arctanh(h J+ / 2),
    Y = sqrt(1 - h^2 J+^2/4) J- sqrt(1 - h^2 J+^2/4),
    H = J0,

whose series terminate by nilpotency.  Both constructions are verified
against the defining relations

    [H, X] = (2/h) sinh(h X),   [H, Y] = -{Y, cosh(h X)},   [X, Y] = H,

the Casimir, and the Hopf structure maps, all as exact matrix identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularLeadingElement
from .exact import (
    BiPoly,
    PolyMatrix,
    anticommutator,
    commutator,
    nilpotent_apply,
)
from .report import VerificationReport
from .verma import ElementTable, build_table

_ZERO = BiPoly.zero()


def ensure_half_integer(j) -> Fraction:
    """Coerce j to a nonnegative half-integer Fraction."""
    j = Fraction(j)
    if j < 0 or (2 * j).denominator != 1:
        raise ValueError(f"j must be a nonnegative half-integer, got {j}")
    return j


@dataclass(frozen=True)
class SingularVector:
    """Coefficients C_1..C_[j] of the singular vector at weight lam = 2j.

    C_p multiplies w_{2j-2p+1}; each is homogeneous of degree 2p in h.  For
    j < 1 the list is empty and the singular vector is w_{2j+1} itself."""

    j: Fraction
    coeffs: tuple[BiPoly, ...]

    @property
    def lam(self) -> int:
        return int(2 * self.j)

    def levels(self) -> dict[int, BiPoly]:
        """The vector as a map level -> coefficient."""
        top = self.lam + 1
        vec = {top: BiPoly.one()}
        for p, c in enumerate(self.coeffs, start=1):
            vec[top - 2 * p] = c
        return vec


@dataclass(frozen=True)
class Irrep:
    """A (2j+1)-dimensional triple of polynomial matrices.

    basis "verma" indexes w_0..w_{2j} by the power of the lowering
    generator; basis "diagonal" orders weights descending so H comes out
    diagonal (2j, 2j-2, ..., -2j).  Entries are polynomials in h only."""

    j: Fraction
    basis: str
    X: PolyMatrix
    Y: PolyMatrix
    H: PolyMatrix

    @property
    def dim(self) -> int:
        return int(2 * self.j) + 1

    def to_obj(self) -> dict:
        return {
            "kind": "irrep",
            "j": str(self.j),
            "dim": self.dim,
            "basis": self.basis,
            "basis_order": (
                "w_0..w_2j by lowering power"
                if self.basis == "verma"
                else "weights descending 2j..-2j"
            ),
            "matrices": {
                "X": self.X.to_obj(),
                "Y": self.Y.to_obj(),
                "H": self.H.to_obj(),
            },
        }

    @staticmethod
    def from_obj(obj) -> "Irrep":
        return Irrep(
            j=ensure_half_integer(obj["j"]),
            basis=obj["basis"],
            X=PolyMatrix.from_obj(obj["matrices"]["X"]),
            Y=PolyMatrix.from_obj(obj["matrices"]["Y"]),
            H=PolyMatrix.from_obj(obj["matrices"]["H"]),
        )


@dataclass(frozen=True)
class ClassicalRep:
    """Spin-j matrices of the undeformed triple, weights descending."""

    j: Fraction
    plus: PolyMatrix
    minus: PolyMatrix
    zero: PolyMatrix

    @property
    def dim(self) -> int:
        return int(2 * self.j) + 1


# -- actions on Verma vectors -------------------------------------------------


def act(table: ElementTable, generator: str, vector: dict[int, BiPoly], lam=None) -> dict[int, BiPoly]:
    """Apply the table-defined X or H action to sum_n v_n w_n.

    With ``lam`` given, elements are specialized before use.  Y needs no
    table: it shifts levels up by one."""
    out: dict[int, BiPoly] = {}
    for n, coeff in vector.items():
        if coeff.is_zero:
            continue
        if generator == "Y":
            out[n + 1] = out.get(n + 1, _ZERO) + coeff
            continue
        start = n - 1 if generator == "X" else n
        for m in range(start, -1, -2):
            elem = table.X(n, m) if generator == "X" else table.H(n, m)
            if lam is not None:
                elem = elem.subs_lam(lam)
            if not elem.is_zero:
                out[m] = out.get(m, _ZERO) + elem * coeff
    return {m: c for m, c in out.items() if not c.is_zero}


# -- singular vectors ---------------------------------------------------------


def singular_vector(j, table: ElementTable | None = None) -> SingularVector:
    """Solve the triangular zero-mode system at lam = 2j by forward
    substitution."""
    j = ensure_half_integer(j)
    lam = int(2 * j)
    num = int(j)  # [j] coefficients
    if table is None:
        table = build_table(lam + 1)
    coeffs: list[BiPoly] = []
    for r in range(1, num + 1):
        acc = table.X(lam + 1, lam - 2 * r).subs_lam(lam)
        for p in range(1, r):
            acc = acc + coeffs[p - 1] * table.X(lam + 1 - 2 * p, lam - 2 * r).subs_lam(lam)
        lead = table.X(lam + 1 - 2 * r, lam - 2 * r).subs_lam(lam)
        try:
            lead_value = lead.constant_value()
        except ValueError:
            lead_value = Fraction(0)
        if lead_value == 0:
            raise SingularLeadingElement(
                f"diagonal element X_{lam + 1 - 2 * r}^{lam - 2 * r}(lam={lam}) vanished"
            )
        coeffs.append(acc.scale(-1 / lead_value))
    return SingularVector(j=j, coeffs=tuple(coeffs))


# -- the two constructions ------------------------------------------------------


def verma_basis_irrep(j, table: ElementTable | None = None) -> Irrep:
    """X, H restricted from the specialized table; Y = unit subdiagonal plus
    the singular-vector corrections in the last column."""
    j = ensure_half_integer(j)
    lam = int(2 * j)
    dim = lam + 1
    if table is None:
        table = build_table(lam + 1)
    sv = singular_vector(j, table)

    xm = [[table.X(n, m).subs_lam(lam) for n in range(dim)] for m in range(dim)]
    hm = [[table.H(n, m).subs_lam(lam) for n in range(dim)] for m in range(dim)]
    ym = [[_ZERO] * dim for _ in range(dim)]
    for n in range(dim - 1):
        ym[n + 1][n] = BiPoly.one()
    for p, c in enumerate(sv.coeffs, start=1):
        ym[lam - 2 * p + 1][lam] = -c
    return Irrep(j=j, basis="verma", X=PolyMatrix(xm), Y=PolyMatrix(ym), H=PolyMatrix(hm))


def classical_rep(j) -> ClassicalRep:
    """Spin-j matrices in the basis w_j, w_{j-1}, ..., w_{-j}."""
    j = ensure_half_integer(j)
    dim = int(2 * j) + 1
    plus = [[_ZERO] * dim for _ in range(dim)]
    minus = [[_ZERO] * dim for _ in range(dim)]
    zero = [[_ZERO] * dim for _ in range(dim)]
    two_j = int(2 * j)
    for i in range(dim):
        zero[i][i] = BiPoly.const(two_j - 2 * i)
        if i >= 1:
            # raising from column i (m = j - i) up to row i-1
            plus[i - 1][i] = BiPoly.const(i * (two_j - i + 1))
        if i + 1 < dim:
            minus[i + 1][i] = BiPoly.one()
    return ClassicalRep(j=j, plus=PolyMatrix(plus), minus=PolyMatrix(minus), zero=PolyMatrix(zero))


def map_to_deformed(c: ClassicalRep) -> Irrep:
    """The invertible nonlinear map applied to a classical triple; all series
    terminate because the raising matrix is nilpotent."""
    x = nilpotent_apply("arctanh", c.plus.scale(Fraction(1, 2)), h_scale=1)
    x = x.divide_h(1).scale(2)
    root = nilpotent_apply("sqrt1p", (c.plus * c.plus).scale(Fraction(-1, 4)), h_scale=2)
    y = root * c.minus * root
    return Irrep(j=c.j, basis="diagonal", X=x, Y=y, H=c.zero)


# -- exact verification -----------------------------------------------------------


def sinh_over_h(x: PolyMatrix) -> PolyMatrix:
    """(1/h) sinh(h x), exact because every series term carries h-degree >= 1."""
    return nilpotent_apply("sinh", x, h_scale=1).divide_h(1)


def verify_sl2_relations(r: Irrep) -> VerificationReport:
    """The three defining relations as exact matrix identities."""
    report = VerificationReport(f"sl2 relations j={r.j} basis={r.basis}")
    cosh_hx = nilpotent_apply("cosh", r.X, h_scale=1)
    report.check_matrix_identity(
        "[H,X] = (2/h) sinh(hX)", commutator(r.H, r.X), sinh_over_h(r.X).scale(2)
    )
    report.check_matrix_identity(
        "[H,Y] = -{Y, cosh(hX)}", commutator(r.H, r.Y), -anticommutator(r.Y, cosh_hx)
    )
    report.check_matrix_identity("[X,Y] = H", commutator(r.X, r.Y), r.H)
    return report


def casimir(r: Irrep) -> tuple[bool, BiPoly]:
    """The central element as a matrix; returns (is_scalar, scalar value)."""
    sinh_hx = nilpotent_apply("sinh", r.X, h_scale=1)
    c = anticommutator(r.Y, sinh_hx).divide_h(1).scale(Fraction(1, 2))
    c = c + (r.H * r.H).scale(Fraction(1, 4))
    c = c + (sinh_hx * sinh_hx).scale(Fraction(1, 4))
    value = c[0, 0]
    is_scalar = (c - PolyMatrix.identity(r.dim).scale(value)).is_zero
    return is_scalar, value


# -- Hopf structure on tensor products ----------------------------------------------
#
# The coproduct triple on V_{j1} (x) V_{j2}:
#   D(X) = X(x)1 + 1(x)X,
#   D(Y) = Y(x)e^{hX} + e^{-hX}(x)Y,
#   D(H) = H(x)e^{hX} + e^{-hX}(x)H.
# The counit is the one-dimensional trivial representation (all generators 0),
# and the antipode identity m(S(x)id)D(g) = eps(g) 1 collapses to single-space
# matrix identities via S(X) = -X, S(Y) = -e^{hX} Y e^{-hX}, S(H) likewise.


def _exp_h(x: PolyMatrix, sign: int) -> PolyMatrix:
    return nilpotent_apply("exp", x.scale(sign), h_scale=1)


def coproduct_triple(a: Irrep, b: Irrep) -> tuple[PolyMatrix, PolyMatrix, PolyMatrix]:
    ea, eb = _exp_h(a.X, +1), _exp_h(b.X, +1)
    fa = _exp_h(a.X, -1)
    ia, ib = PolyMatrix.identity(a.dim), PolyMatrix.identity(b.dim)
    dx = a.X.kron(ib) + ia.kron(b.X)
    dy = a.Y.kron(eb) + fa.kron(b.Y)
    dh = a.H.kron(eb) + fa.kron(b.H)
    return dx, dy, dh


def _trivial_rep() -> Irrep:
    z = PolyMatrix.zeros(1, 1)
    return Irrep(j=Fraction(0), basis="diagonal", X=z, Y=z, H=z)


def verify_hopf(j1, j2) -> VerificationReport:
    """Coproduct, counit and antipode identities on V_{j1} (x) V_{j2}."""
    j1, j2 = ensure_half_integer(j1), ensure_half_integer(j2)
    report = VerificationReport(f"hopf j1={j1} j2={j2}")
    a = map_to_deformed(classical_rep(j1))
    b = map_to_deformed(classical_rep(j2))

    dx, dy, dh = coproduct_triple(a, b)
    dim = a.dim * b.dim
    cosh_dx = nilpotent_apply("cosh", dx, h_scale=1)
    report.check_matrix_identity(
        "coproduct [H,X] = (2/h) sinh(hX)", commutator(dh, dx), sinh_over_h(dx).scale(2)
    )
    report.check_matrix_identity(
        "coproduct [H,Y] = -{Y, cosh(hX)}", commutator(dh, dy), -anticommutator(dy, cosh_dx)
    )
    report.check_matrix_identity("coproduct [X,Y] = H", commutator(dx, dy), dh)

    # counit axiom: collapsing either tensor leg to the trivial representation
    # must reproduce the generator on the other leg.
    eps = _trivial_rep()
    for side, rep in (("left", a), ("right", b)):
        if side == "left":
            ex, ey, eh = coproduct_triple(eps, rep)
        else:
            ex, ey, eh = coproduct_triple(rep, eps)
        report.check_matrix_identity(f"counit (eps x id) on X [{side} j={rep.j}]", ex, rep.X)
        report.check_matrix_identity(f"counit (eps x id) on Y [{side} j={rep.j}]", ey, rep.Y)
        report.check_matrix_identity(f"counit (eps x id) on H [{side} j={rep.j}]", eh, rep.H)

    # antipode identity on each factor
    for rep in (a, b):
        e_plus = _exp_h(rep.X, +1)
        e_minus = _exp_h(rep.X, -1)
        zero = PolyMatrix.zeros(rep.dim, rep.dim)
        s_y = -(e_plus * rep.Y * e_minus)
        s_h = -(e_plus * rep.H * e_minus)
        report.check_matrix_identity(
            f"antipode m(S x id)D(X) = 0 [j={rep.j}]", -rep.X + rep.X, zero
        )
        report.check_matrix_identity(
            f"antipode m(S x id)D(Y) = 0 [j={rep.j}]", s_y * e_plus + e_plus * rep.Y, zero
        )
        report.check_matrix_identity(
            f"antipode m(S x id)D(H) = 0 [j={rep.j}]", s_h * e_plus + e_plus * rep.H, zero
        )
    return report
