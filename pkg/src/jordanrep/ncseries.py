"""PBW normal ordering over truncated power series in the deformation parameter.

Elements of an enveloping algebra are held in Poincare-Birkhoff-Witt normal
form: a map from exponent vectors over a fixed, ordered generator list to
truncated series in the deformation parameter.  Products are reduced to
normal form by swapping adjacent out-of-order generator pairs with the
presentation's commutation rules; each swap either lowers the inversion
count or strictly shortens the word, so rewriting terminates.

The presentations used here are the *classical* Euclidean algebras: the
deformed generators are defined as nonlinear series in the classical ones,
and the deformed relations are then verified order by order.  A suite's
residuals are exact rational series; "pass" means identically zero through
at least the requested truncation order.

PBW generator order: J+ < J0 < J- < Pi+ < Pi0 < Pi- for the rank-two case,
and J < P+ < P- for the planar one.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import IllFormedComposition, ZeroOmega
from .exact import SeriesScalar, stream_coefficients
from .exact.poly import as_fraction
from .report import VerificationReport

# -- presentations ------------------------------------------------------------


class AlgebraPresentation:
    """Ordered generators plus commutators [g_a, g_b] for a > b.

    Rule values are linear combinations of generators encoded as
    ``{exponent_tuple: Fraction}``; an absent pair means the generators
    commute.  The Jacobi identity is checked on all triples at construction.
    """

    def __init__(self, names, rules):
        self.names = tuple(names)
        self.size = len(self.names)
        canon: dict[tuple[int, int], dict] = {}
        for (a, b), combo in rules.items():
            if not (0 <= b < a < self.size):
                raise ValueError(f"rule pair {(a, b)} must satisfy a > b")
            combo = {
                tuple(mono): as_fraction(c)
                for mono, c in combo.items()
                if c != 0
            }
            for mono in combo:
                if len(mono) != self.size:
                    raise ValueError("rule output references a foreign generator set")
            if combo:
                canon[(a, b)] = combo
        self.rules = canon
        self._check_jacobi()

    def __hash__(self):
        return hash(self.names)

    def __eq__(self, other):
        return self is other

    def generator_exponent(self, idx: int) -> tuple[int, ...]:
        e = [0] * self.size
        e[idx] = 1
        return tuple(e)

    def bracket(self, a: int, b: int) -> dict:
        """[g_a, g_b] as a linear combination, for any index order."""
        if a == b:
            return {}
        if a > b:
            return dict(self.rules.get((a, b), {}))
        flipped = self.rules.get((b, a), {})
        return {mono: -c for mono, c in flipped.items()}

    def _bracket_linear(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for mu, cu in u.items():
            a = mu.index(1)
            for mv, cv in v.items():
                b = mv.index(1)
                for mono, c in self.bracket(a, b).items():
                    out[mono] = out.get(mono, Fraction(0)) + cu * cv * c
        return {m: c for m, c in out.items() if c != 0}

    def _check_jacobi(self):
        gens = [
            {self.generator_exponent(i): Fraction(1)} for i in range(self.size)
        ]
        for a in range(self.size):
            for b in range(a + 1, self.size):
                for c in range(b + 1, self.size):
                    acc: dict = {}
                    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                        inner = self._bracket_linear(gens[x], gens[y])
                        outer = self._bracket_linear(inner, gens[z])
                        for mono, q in outer.items():
                            acc[mono] = acc.get(mono, Fraction(0)) + q
                    if any(q != 0 for q in acc.values()):
                        raise ValueError(
                            f"Jacobi identity fails on generators {a},{b},{c}"
                        )

    def monomial_str(self, mono: tuple[int, ...]) -> str:
        parts = []
        for idx, e in enumerate(mono):
            if e == 1:
                parts.append(self.names[idx])
            elif e > 1:
                parts.append(f"{self.names[idx]}^{e}")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=1)
def e2_presentation() -> AlgebraPresentation:
    """Classical planar Euclidean algebra: [J, P+-] = +-P+-, [P+, P-] = 0."""
    J, PP, PM = 0, 1, 2

    def g(i):
        e = [0, 0, 0]
        e[i] = 1
        return tuple(e)

    return AlgebraPresentation(
        names=("J", "P+", "P-"),
        rules={
            (PP, J): {g(PP): Fraction(-1)},
            (PM, J): {g(PM): Fraction(1)},
        },
    )


@lru_cache(maxsize=1)
def e3_presentation() -> AlgebraPresentation:
    """Classical three-dimensional Euclidean algebra with commuting
    translations (Pi+, Pi0, Pi-) and the rotation triple (J+, J0, J-)."""
    JP, J0, JM, PP, P0, PM = range(6)

    def g(i):
        e = [0] * 6
        e[i] = 1
        return tuple(e)

    return AlgebraPresentation(
        names=("J+", "J0", "J-", "Pi+", "Pi0", "Pi-"),
        rules={
            (J0, JP): {g(JP): Fraction(2)},
            (JM, JP): {g(J0): Fraction(-1)},
            (JM, J0): {g(JM): Fraction(2)},
            (PP, J0): {g(PP): Fraction(-2)},
            (PP, JM): {g(P0): Fraction(1)},
            (P0, JP): {g(PP): Fraction(2)},
            (P0, JM): {g(PM): Fraction(-2)},
            (PM, JP): {g(P0): Fraction(-1)},
            (PM, J0): {g(PM): Fraction(2)},
        },
    )


# -- normal ordering -----------------------------------------------------------


def _word_of(mono: tuple[int, ...]) -> tuple[int, ...]:
    word = []
    for idx, e in enumerate(mono):
        word.extend([idx] * e)
    return tuple(word)


def _exponent_of(word: tuple[int, ...], size: int) -> tuple[int, ...]:
    e = [0] * size
    for idx in word:
        e[idx] += 1
    return tuple(e)


def normal_order_word(
    word: tuple[int, ...],
    p: AlgebraPresentation,
    schedule: str = "leftmost",
    rng=None,
) -> dict[tuple[int, ...], Fraction]:
    """Reduce a generator word to normal form; returns exponent -> coefficient.

    ``schedule`` picks which adjacent inversion to swap first ("leftmost",
    "rightmost" or "random" with an ``rng``); any schedule yields the same
    normal form, which the confluence tests exercise."""
    result: dict[tuple[int, ...], Fraction] = {}
    stack: list[tuple[tuple[int, ...], Fraction]] = [(tuple(word), Fraction(1))]
    while stack:
        w, coeff = stack.pop()
        positions = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not positions:
            mono = _exponent_of(w, p.size)
            acc = result.get(mono, Fraction(0)) + coeff
            if acc == 0:
                result.pop(mono, None)
            else:
                result[mono] = acc
            continue
        if schedule == "leftmost":
            i = positions[0]
        elif schedule == "rightmost":
            i = positions[-1]
        elif schedule == "random":
            i = positions[rng.randrange(len(positions))]
        else:
            raise ValueError(f"unknown schedule {schedule!r}")
        swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
        stack.append((swapped, coeff))
        for mono, c in p.bracket(w[i], w[i + 1]).items():
            stack.append((w[:i] + _word_of(mono) + w[i + 2:], coeff * c))
    return result


@lru_cache(maxsize=200_000)
def _normal_order_cached(word: tuple[int, ...], p: AlgebraPresentation):
    return normal_order_word(word, p)


def normal_order(word, p: AlgebraPresentation, order: int) -> "NCElement":
    """Normal-order a generator word (indices or names) into an element."""
    idx_word = tuple(
        w if isinstance(w, int) else p.names.index(w) for w in word
    )
    terms = {
        mono: SeriesScalar.constant(c, order)
        for mono, c in _normal_order_cached(idx_word, p).items()
    }
    return NCElement(p, order, terms)


# -- elements --------------------------------------------------------------------


class NCElement:
    """Normal-ordered polynomial in the generators with series coefficients."""

    __slots__ = ("presentation", "order", "terms")

    def __init__(self, presentation, order, terms):
        self.presentation = presentation
        self.order = order
        canon = {}
        for mono, s in terms.items():
            s = s.truncate(order)
            if not s.is_zero:
                canon[mono] = s
        self.terms = canon

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero(p: AlgebraPresentation, order: int) -> "NCElement":
        return NCElement(p, order, {})

    @staticmethod
    def one(p: AlgebraPresentation, order: int) -> "NCElement":
        return NCElement(
            p, order, {(0,) * p.size: SeriesScalar.constant(1, order)}
        )

    @staticmethod
    def generator(p: AlgebraPresentation, name: str, order: int) -> "NCElement":
        idx = p.names.index(name)
        return NCElement(
            p, order, {p.generator_exponent(idx): SeriesScalar.constant(1, order)}
        )

    # -- ring operations ----------------------------------------------------------

    def _merge(self, other, sign: int) -> "NCElement":
        if self.presentation is not other.presentation:
            raise ValueError("elements live over different presentations")
        order = min(self.order, other.order)
        out = {m: s.truncate(order) for m, s in self.terms.items()}
        for m, s in other.terms.items():
            s = s.truncate(order) if sign > 0 else -s.truncate(order)
            if m in out:
                out[m] = out[m] + s
            else:
                out[m] = s
        return NCElement(self.presentation, order, out)

    def __add__(self, other):
        return self._merge(other, +1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def __neg__(self):
        return NCElement(
            self.presentation, self.order, {m: -s for m, s in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, NCElement):
            return NotImplemented
        if self.presentation is not other.presentation:
            raise ValueError("elements live over different presentations")
        p = self.presentation
        order = min(self.order, other.order)
        out: dict[tuple[int, ...], SeriesScalar] = {}
        for ma, sa in self.terms.items():
            wa = _word_of(ma)
            for mb, sb in other.terms.items():
                s = sa * sb
                if s.is_zero:
                    continue
                for mono, c in _normal_order_cached(wa + _word_of(mb), p).items():
                    term = s.scale(c)
                    if mono in out:
                        out[mono] = out[mono] + term
                    else:
                        out[mono] = term.truncate(order)
        return NCElement(p, order, out)

    def scale(self, q) -> "NCElement":
        q = as_fraction(q)
        if q == 0:
            return NCElement.zero(self.presentation, self.order)
        return NCElement(
            self.presentation, self.order, {m: s.scale(q) for m, s in self.terms.items()}
        )

    def mul_t(self, k: int = 1) -> "NCElement":
        """Multiply by the k-th power of the deformation parameter."""
        return NCElement(
            self.presentation, self.order + k, {m: s.mul_t(k) for m, s in self.terms.items()}
        )

    def div_t(self, k: int = 1) -> "NCElement":
        """Exact division; every coefficient series must start at order k."""
        return NCElement(
            self.presentation, self.order - k, {m: s.div_t(k) for m, s in self.terms.items()}
        )

    # -- queries ---------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def valuation_positive(self) -> bool:
        """True when every coefficient series vanishes at order zero."""
        return all(s.coeffs[0] == 0 for s in self.terms.values())

    def order_part(self, k: int) -> dict[tuple[int, ...], Fraction]:
        """Monomial -> rational coefficient at a single series order."""
        out = {}
        for m, s in self.terms.items():
            if k <= s.order and s.coeffs[k] != 0:
                out[m] = s.coeffs[k]
        return out

    def first_nonzero(self):
        """(monomial string, order, coefficient) of the lowest-order nonzero
        coefficient, scanning monomials deterministically; None if zero."""
        best = None
        for mono in sorted(self.terms):
            s = self.terms[mono]
            for k, c in enumerate(s.coeffs):
                if c != 0:
                    if best is None or k < best[1]:
                        best = (self.presentation.monomial_str(mono), k, c)
                    break
        return best

    def __str__(self):
        if not self.terms:
            return "0"
        p = self.presentation
        return " + ".join(
            f"({list(s.coeffs)})*{p.monomial_str(m)}" for m, s in sorted(self.terms.items())
        )

    __repr__ = __str__


def commutator_nc(a: NCElement, b: NCElement) -> NCElement:
    return a * b - b * a


def series_function_apply(kind: str, x: NCElement, order: int | None = None) -> NCElement:
    """sum_k f_k x^k for a named elementary function, fully normal-ordered.

    The argument must have strictly positive valuation in the deformation
    parameter so the sum terminates at the truncation order.  The `1p`
    function tags take the deviation from 1 (ln(1+x), sqrt(1+x), 1/(1+x))."""
    if not x.valuation_positive():
        raise IllFormedComposition(
            f"{kind} needs an argument of positive order in the deformation parameter"
        )
    n = x.order if order is None else min(order, x.order)
    coeffs = stream_coefficients(kind, n + 1)
    p = x.presentation
    acc = NCElement.one(p, n).scale(coeffs[0]) if coeffs[0] else NCElement.zero(p, n)
    power = NCElement.one(p, n)
    for k in range(1, n + 1):
        power = power * x
        if power.is_zero:
            break
        if coeffs[k]:
            acc = acc + power.scale(coeffs[k])
    return acc


# -- verification suites ------------------------------------------------------------
#
# Each suite works at an internal truncation a few orders above the requested
# one, so the exact divisions by the deformation parameter still leave every
# residual known to at least the requested order.

_SLACK = 4


def suite_e2(order: int) -> VerificationReport:
    """Deformed planar Euclidean algebra via the nonlinear map on e(2).

    chi = (2/h) arctanh(h P+ / 2), eta = (1 - (h P+ / 2)^2) P-, zeta = 2J.
    Verifies the deformed brackets and the Casimir identity
    P+ P- = (eta/h) sinh(h chi), with sinh/cosh of h chi computed both by
    direct series composition and through the closed rational forms
    h P+ (1 - h^2 P+^2/4)^{-1} and (1 + h^2 P+^2/4)(1 - h^2 P+^2/4)^{-1}."""
    if order < 2:
        raise ValueError("order must be at least 2")
    w = order + _SLACK
    p = e2_presentation()
    report = VerificationReport(
        f"e2 order={order}",
        meta={"pbw_order": " < ".join(p.names), "truncation_order": order},
    )
    one = NCElement.one(p, w)
    J = NCElement.generator(p, "J", w)
    pp = NCElement.generator(p, "P+", w)
    pm = NCElement.generator(p, "P-", w)

    chi = series_function_apply("arctanh", pp.mul_t(1).scale(Fraction(1, 2))).div_t(1).scale(2)
    quarter_sq = (pp * pp).scale(Fraction(1, 4)).mul_t(2)   # (h P+/2)^2
    eta = pm - (pp * pp * pm).scale(Fraction(1, 4)).mul_t(2)
    zeta = J.scale(2)

    root = series_function_apply("sqrt1p", -quarter_sq)
    report.check_series_zero(
        "sandwich form of eta collapses: sqrt(1-u) P- sqrt(1-u) = (1-u) P-",
        root * pm * root - eta,
        order,
    )

    sinh_hchi = series_function_apply("sinh", chi.mul_t(1))
    cosh_hchi = series_function_apply("cosh", chi.mul_t(1))
    inv = series_function_apply("inv1p", -quarter_sq)
    sinh_closed = pp.mul_t(1) * inv
    cosh_closed = (one + quarter_sq) * inv
    report.check_series_zero(
        "sinh(h chi) matches closed rational form", sinh_hchi - sinh_closed, order
    )
    report.check_series_zero(
        "cosh(h chi) matches closed rational form", cosh_hchi - cosh_closed, order
    )

    report.check_series_zero(
        "[zeta,chi] = (2/h) sinh(h chi)",
        commutator_nc(zeta, chi) - sinh_hchi.div_t(1).scale(2),
        order,
    )
    report.check_series_zero(
        "[zeta,eta] = -2 eta cosh(h chi)",
        commutator_nc(zeta, eta) + (eta * cosh_hchi).scale(2),
        order,
    )
    report.check_series_zero("[chi,eta] = 0", commutator_nc(chi, eta), order)
    report.check_series_zero(
        "Casimir: P+ P- = (eta/h) sinh(h chi)",
        pp * pm - (eta * sinh_hchi).div_t(1),
        order,
    )
    return report


def _e3_deformed(p, w):
    """The inverse-map generators over the classical presentation."""
    pi_p = NCElement.generator(p, "Pi+", w)
    pi_0 = NCElement.generator(p, "Pi0", w)
    pi_m = NCElement.generator(p, "Pi-", w)
    y = pi_p.mul_t(1)                                   # omega Pi+
    p_plus = series_function_apply("ln1p", y).div_t(1)
    inv = series_function_apply("inv1p", y)             # (1 + omega Pi+)^{-1}
    p_minus = pi_m + (pi_0 * pi_0 * inv).scale(Fraction(1, 4)).mul_t(1)
    p_zero = pi_0 * inv
    return pi_p, pi_0, pi_m, p_plus, p_zero, p_minus


def suite_e3(order: int) -> VerificationReport:
    """Deformed three-dimensional Euclidean algebra via the inverse map

        P+ = (1/w) ln(1 + w Pi+),
        P- = Pi- + (w/4) Pi0^2 (1 + w Pi+)^{-1},
        P0 = Pi0 (1 + w Pi+)^{-1},

    on classical e(3): verifies all deformed brackets, the forward-map
    round trip, agreement of both closed forms of each Casimir, and that
    the Casimirs commute with all six deformed generators."""
    if order < 2:
        raise ValueError("order must be at least 2")
    w = order + _SLACK
    p = e3_presentation()
    report = VerificationReport(
        f"e3 order={order}",
        meta={"pbw_order": " < ".join(p.names), "truncation_order": order},
    )
    one = NCElement.one(p, w)
    jp = NCElement.generator(p, "J+", w)
    j0 = NCElement.generator(p, "J0", w)
    jm = NCElement.generator(p, "J-", w)
    pi_p, pi_0, pi_m, p_plus, p_zero, p_minus = _e3_deformed(p, w)

    e_minus = series_function_apply("exp", -(p_plus.mul_t(1)))   # e^{-w P+}
    e_plus = series_function_apply("exp", p_plus.mul_t(1))       # e^{+w P+}
    ladder_rhs = (one - e_minus).div_t(1).scale(2)               # (2/w)(1 - e^{-w P+})

    checks = [
        ("[J0,J+] = 2J+", commutator_nc(j0, jp) - jp.scale(2)),
        ("[J0,J-] = -2J-", commutator_nc(j0, jm) + jm.scale(2)),
        ("[J+,J-] = J0", commutator_nc(jp, jm) - j0),
        ("[P0,P+] = 0", commutator_nc(p_zero, p_plus)),
        ("[P0,P-] = 0", commutator_nc(p_zero, p_minus)),
        ("[P+,P-] = 0", commutator_nc(p_plus, p_minus)),
        ("[J0,P+] = (2/w)(1-e^{-wP+})", commutator_nc(j0, p_plus) - ladder_rhs),
        ("[P0,J+] = (2/w)(1-e^{-wP+})", commutator_nc(p_zero, jp) - ladder_rhs),
        (
            "[J0,P-] = -2P- + (w/2)P0^2",
            commutator_nc(j0, p_minus)
            + p_minus.scale(2)
            - (p_zero * p_zero).scale(Fraction(1, 2)).mul_t(1),
        ),
        (
            "[P0,J-] = -2e^{-wP+}P- - (w/2)P0^2",
            commutator_nc(p_zero, jm)
            + (e_minus * p_minus).scale(2)
            + (p_zero * p_zero).scale(Fraction(1, 2)).mul_t(1),
        ),
        ("[J+,P-] = P0", commutator_nc(jp, p_minus) - p_zero),
        ("[P+,J-] = P0", commutator_nc(p_plus, jm) - p_zero),
        ("[J+,P+] = 0", commutator_nc(jp, p_plus)),
        (
            "[J-,P-] = w P0 P-",
            commutator_nc(jm, p_minus) - (p_zero * p_minus).mul_t(1),
        ),
        (
            "[J0,P0] = -2 P0 (1-e^{-wP+})",
            commutator_nc(j0, p_zero) + (p_zero * (one - e_minus)).scale(2),
        ),
    ]
    for label, residual in checks:
        report.check_series_zero(label, residual, order)

    # forward map round trip
    report.check_series_zero(
        "round trip: (e^{wP+}-1)/w = Pi+", (e_plus - one).div_t(1) - pi_p, order
    )
    report.check_series_zero(
        "round trip: P- - (w/4)P0^2 e^{wP+} = Pi-",
        p_minus - (p_zero * p_zero * e_plus).scale(Fraction(1, 4)).mul_t(1) - pi_m,
        order,
    )
    report.check_series_zero(
        "round trip: P0 e^{wP+} = Pi0", p_zero * e_plus - pi_0, order
    )

    # Casimirs, both closed forms
    c1 = pi_p * pi_m + (pi_0 * pi_0).scale(Fraction(1, 4))
    c1_deformed = (e_plus - one).div_t(1) * (
        p_minus - (p_zero * p_zero * e_plus).scale(Fraction(1, 4)).mul_t(1)
    ) + (p_zero * p_zero * e_plus * e_plus).scale(Fraction(1, 4))
    report.check_series_zero("C1: both closed forms agree", c1 - c1_deformed, order)

    c2 = jp * pi_m + jm * pi_p + (j0 * pi_0).scale(Fraction(1, 2))
    c2_deformed = (
        jp * (p_minus - (p_zero * p_zero * e_plus).scale(Fraction(1, 4)).mul_t(1))
        + jm * (e_plus - one).div_t(1)
        + (j0 * p_zero * e_plus).scale(Fraction(1, 2))
    )
    report.check_series_zero("C2: both closed forms agree", c2 - c2_deformed, order)

    deformed_gens = [
        ("J+", jp), ("J0", j0), ("J-", jm),
        ("P+", p_plus), ("P0", p_zero), ("P-", p_minus),
    ]
    for name, g in deformed_gens:
        report.check_series_zero(f"[C1,{name}] = 0", commutator_nc(c1, g), order)
        report.check_series_zero(f"[C2,{name}] = 0", commutator_nc(c2, g), order)
    return report


def suite_qe3(order: int) -> VerificationReport:
    """The q-deformed three-dimensional Euclidean algebra via its map

        e^{-(W/2) P0} = (1 + C1 W^2/2) - (W/2) sqrt(1 + C1 W^2/4) Pi0,
        P+- e^{-(W/2) P0} = sqrt(1 + C1 W^2/4) Pi+-,

    with C1 = Pi+ Pi- + Pi0^2/4 the classical invariant, expanded in PBW
    form.  Verifies the full bracket list and the closed form of C1 in the
    deformed generators."""
    if order < 2:
        raise ValueError("order must be at least 2")
    w = order + _SLACK
    p = e3_presentation()
    report = VerificationReport(
        f"qe3 order={order}",
        meta={"pbw_order": " < ".join(p.names), "truncation_order": order},
    )
    one = NCElement.one(p, w)
    jp = NCElement.generator(p, "J+", w)
    j0 = NCElement.generator(p, "J0", w)
    jm = NCElement.generator(p, "J-", w)
    pi_p = NCElement.generator(p, "Pi+", w)
    pi_0 = NCElement.generator(p, "Pi0", w)
    pi_m = NCElement.generator(p, "Pi-", w)

    c1 = pi_p * pi_m + (pi_0 * pi_0).scale(Fraction(1, 4))
    root = series_function_apply("sqrt1p", c1.scale(Fraction(1, 4)).mul_t(2))
    a_dev = c1.scale(Fraction(1, 2)).mul_t(2) - (root * pi_0).scale(Fraction(1, 2)).mul_t(1)
    p_zero = -series_function_apply("ln1p", a_dev).div_t(1).scale(2)
    a_inv = series_function_apply("inv1p", a_dev)
    p_plus = root * pi_p * a_inv
    p_minus = root * pi_m * a_inv

    report.check_series_zero(
        "map consistency: e^{-(W/2)P0} reproduces its defining series",
        series_function_apply("exp", -(p_zero.mul_t(1).scale(Fraction(1, 2)))) - (one + a_dev),
        order,
    )

    e_p0 = series_function_apply("exp", p_zero.mul_t(1))    # e^{W P0}
    ladder_rhs = (e_p0 - one).div_t(1)                      # (1/W)(e^{W P0} - 1)

    checks = [
        ("[J0,J+] = 2J+", commutator_nc(j0, jp) - jp.scale(2)),
        ("[J0,J-] = -2J-", commutator_nc(j0, jm) + jm.scale(2)),
        ("[J+,J-] = J0", commutator_nc(jp, jm) - j0),
        ("[P0,P+] = 0", commutator_nc(p_zero, p_plus)),
        ("[P0,P-] = 0", commutator_nc(p_zero, p_minus)),
        ("[P+,P-] = 0", commutator_nc(p_plus, p_minus)),
        ("[J0,P+] = 2P+", commutator_nc(j0, p_plus) - p_plus.scale(2)),
        ("[J0,P-] = -2P-", commutator_nc(j0, p_minus) + p_minus.scale(2)),
        ("[P0,J+] = 2P+", commutator_nc(p_zero, jp) - p_plus.scale(2)),
        ("[P0,J-] = -2P-", commutator_nc(p_zero, jm) + p_minus.scale(2)),
        ("[J0,P0] = 0", commutator_nc(j0, p_zero)),
        (
            "[P+,J+] = W P+^2",
            commutator_nc(p_plus, jp) - (p_plus * p_plus).mul_t(1),
        ),
        (
            "[P-,J-] = -W P-^2",
            commutator_nc(p_minus, jm) + (p_minus * p_minus).mul_t(1),
        ),
        (
            "[J+,P-] = (1/W)(e^{W P0}-1)",
            commutator_nc(jp, p_minus) - ladder_rhs,
        ),
        (
            "[J-,P+] = -(1/W)(e^{W P0}-1)",
            commutator_nc(jm, p_plus) + ladder_rhs,
        ),
    ]
    for label, residual in checks:
        report.check_series_zero(label, residual, order)

    half = p_zero.mul_t(1).scale(Fraction(1, 2))
    e_half_p = series_function_apply("exp", half)
    e_half_m = series_function_apply("exp", -half)
    c1_deformed = p_plus * p_minus * e_half_m + (e_half_p + e_half_m - one.scale(2)).div_t(2)
    report.check_series_zero(
        "C1 = P+ P- e^{-(W/2)P0} + (1/W^2)(e^{(W/2)P0} + e^{-(W/2)P0} - 2)",
        c1_deformed - c1,
        order,
    )
    return report


# -- numerical singularity scan --------------------------------------------------
#
# The only floating-point code in the package, quarantined here: the inverse
# map evaluated on classical momentum eigenvalues.  The map degenerates where
# 1 + omega*pi_plus reaches zero and the leading eigenvalue picks up an
# imaginary part pi/omega beyond it.


def momentum_spectrum(omega: float, pi_plus_grid, pi_minus: float = 1.0, pi_zero: float = 1.0) -> dict:
    """Classify classical momentum eigenvalues under the inverse map.

    Returns the scan rows plus a diagnostic: either the exact singular hit or
    the nearest approach of 1 + omega*pi_plus to zero on the grid."""
    if omega == 0:
        raise ZeroOmega("the spectrum scan needs a nonzero deformation parameter")
    omega = float(omega)
    rows = []
    nearest = None
    singular_hit = False
    for value in pi_plus_grid:
        value = float(value)
        u = 1.0 + omega * value
        if nearest is None or abs(u) < abs(nearest[1]):
            nearest = (value, u)
        if u == 0.0:
            singular_hit = True
            rows.append(
                {
                    "input": value,
                    "class": "singular",
                    "re_p_plus": None,
                    "im_p_plus": None,
                    "p_minus": None,
                    "p_zero": None,
                }
            )
            continue
        p_minus = pi_minus + (omega / 4.0) * pi_zero**2 / u
        p_zero = pi_zero / u
        if u > 0.0:
            rows.append(
                {
                    "input": value,
                    "class": "regular",
                    "re_p_plus": math.log(u) / omega,
                    "im_p_plus": 0.0,
                    "p_minus": p_minus,
                    "p_zero": p_zero,
                }
            )
        else:
            rows.append(
                {
                    "input": value,
                    "class": "complex",
                    "re_p_plus": math.log(-u) / omega,
                    "im_p_plus": math.pi / omega,
                    "p_minus": p_minus,
                    "p_zero": p_zero,
                }
            )
    out = {
        "omega": omega,
        "pi_minus": float(pi_minus),
        "pi_zero": float(pi_zero),
        "rows": rows,
        "singular_hit": singular_hit,
    }
    if not singular_hit and nearest is not None:
        out["nearest_approach"] = {"input": nearest[0], "one_plus_omega_pi_plus": nearest[1]}
    return out
