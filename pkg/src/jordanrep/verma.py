"""Matrix elements of the deformed raising and Cartan actions on a Verma module.

The module basis is w_n = Y^n w_0 with w_0 the highest-weight vector.  The
actions of X and H step down the ladder in even gaps,

    X.w_n = sum_k X_n^{n-1-2k} w_{n-1-2k},
    H.w_n = sum_k H_n^{n-2k}   w_{n-2k},

and every element X_{m+2n+1}^m, H_{m+2n}^m is homogeneous of degree 2n in the
deformation parameter.  Elements at h-degree 0 are

    H_n^n = lam - 2n,          X_{n+1}^n = (n+1)(lam - n),

and the higher orders follow from two recursions: the degree-2n part of H is
a combinatorial sum of ordered products of lower-degree X elements (one
product per composition of 2n into an even number of positive odd integers),
and the same-degree X elements are partial sums of H elements:

    H_{m+2n}^m = - sum_{k=1}^{n} h^{2k}/(2k)! *
                   sum'_{compositions} ( 2 sum_{l<m} Z_l + Z_m ),
    X_{m+2n+1}^m = sum_{k=0}^{m} H_{k+2n}^k,

where Z_l is the descending product of X elements from level l+2n to level l
prescribed by the composition.  The weight symbol stays symbolic throughout;
specialization happens only at singular-vector solve time.

Closed forms for the degree-2 and degree-4 elements are implemented
separately and serve as an independent cross-check of the recursion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import BadParity, MissingElement
from .exact import BiPoly, LAM

_ZERO = BiPoly.zero()


def odd_compositions(total: int, num_parts: int) -> list[tuple[int, ...]]:
    """All ordered tuples of ``num_parts`` positive odd integers summing to
    ``total``, in lexicographic order.  Order matters: (7,1) and (1,7) are
    distinct compositions."""
    if total % 2 or num_parts % 2:
        raise BadParity(f"total={total} and num_parts={num_parts} must both be even")
    if total < 2 or num_parts < 2:
        raise ValueError("total and num_parts must be positive")
    if num_parts > total:
        raise ValueError("cannot split a total among more parts than its size")
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], remaining: int, parts_left: int):
        if parts_left == 1:
            if remaining >= 1 and remaining % 2 == 1:
                out.append(prefix + (remaining,))
            return
        # each later part is odd >= 1, so at most remaining - (parts_left - 1)
        for part in range(1, remaining - (parts_left - 1) + 1, 2):
            extend(prefix + (part,), remaining - part, parts_left - 1)

    extend((), total, num_parts)
    return out


class ElementTable:
    """Memoized matrix elements of the X and H actions up to a maximum level.

    A completed table is immutable by contract: the operations below only
    read from it.  Accessors return the zero polynomial for index pairs ruled
    out by parity or range (the action never maps below w_0)."""

    def __init__(self, max_level: int):
        self.max_level = max_level
        self._H: dict[tuple[int, int], BiPoly] = {}
        self._X: dict[tuple[int, int], BiPoly] = {}

    def H(self, n: int, m: int) -> BiPoly:
        if m < 0 or m > n or (n - m) % 2:
            return _ZERO
        try:
            return self._H[(n, m)]
        except KeyError:
            raise MissingElement(f"H_{n}^{m} is not in the table (L={self.max_level})")

    def X(self, n: int, m: int) -> BiPoly:
        if m < 0 or m >= n or (n - m) % 2 == 0:
            return _ZERO
        try:
            return self._X[(n, m)]
        except KeyError:
            raise MissingElement(f"X_{n}^{m} is not in the table (L={self.max_level})")

    def stored_items(self):
        """((kind, n, m), value) pairs for everything the table holds."""
        for (n, m), v in sorted(self._H.items()):
            yield ("H", n, m), v
        for (n, m), v in sorted(self._X.items()):
            yield ("X", n, m), v


def z_product(m: int, two_n: int, delta: int, comp: tuple[int, ...], table: ElementTable) -> BiPoly:
    """Ordered product of X elements descending from level m+2n-delta to
    m-delta by the steps of the composition.  Any factor that would act
    below w_0 makes the whole product zero."""
    if delta not in (0, 1):
        raise ValueError("delta must be 0 or 1")
    level = m + two_n - delta
    acc = BiPoly.one()
    for step in comp:
        nxt = level - step
        if nxt < 0:
            return _ZERO
        factor = table.X(level, nxt)
        if factor.is_zero:
            return _ZERO
        acc = acc * factor
        level = nxt
    return acc


def h_element(m: int, two_n: int, table: ElementTable) -> BiPoly:
    """H_{m+2n}^m from the reorganized recursion.  Needs every X element of
    h-degree below 2n to be present already."""
    if two_n == 0:
        return LAM - 2 * m
    n = two_n // 2
    acc = _ZERO
    for k in range(1, n + 1):
        pref = Fraction(-1, factorial(2 * k))
        comps = odd_compositions(two_n, 2 * k)
        inner = _ZERO
        for comp in comps:
            for l in range(m):
                z = z_product(l, two_n, 0, comp, table)
                if not z.is_zero:
                    inner = inner + z.scale(2)
            z = z_product(m, two_n, 0, comp, table)
            if not z.is_zero:
                inner = inner + z
        acc = acc + inner.scale(pref).mul_h(2 * k)
    return acc


def x_element(m: int, two_n: int, table: ElementTable) -> BiPoly:
    """X_{m+2n+1}^m as the partial sum of same-degree H elements."""
    if two_n == 0:
        return BiPoly.const(m + 1) * (LAM - m)
    acc = _ZERO
    for k in range(m + 1):
        acc = acc + table.H(k + two_n, k)
    return acc


def build_table(max_level: int) -> ElementTable:
    """Fill all H_n^m, X_n^m with n <= max_level, in increasing h-degree."""
    table = ElementTable(max_level)
    for two_n in range(0, max_level + 1, 2):
        for m in range(0, max_level - two_n + 1):
            table._H[(m + two_n, m)] = h_element(m, two_n, table)
        for m in range(0, max_level - two_n):
            table._X[(m + two_n + 1, m)] = x_element(m, two_n, table)
    return table


# -- closed forms for the h^2 and h^4 elements --------------------------------
#
# rho2/sigma2 give H_{n+2}^n = h^2 rho2(n) and X_{n+3}^n = h^2 sigma2(n);
# rho4/sigma4 the analogous h^4 elements.  The binomial-style factor in rho4
# pairing (lam - k) against (lam - k - 4) is read as the degree-4 falling
# factorial divided by 4!.


@lru_cache(maxsize=None)
def _rho2(n: int) -> BiPoly:
    acc = _ZERO
    for k in range(n):
        acc = acc - BiPoly.const((k + 1) * (k + 2)) * (LAM - k) * (LAM - k - 1)
    tail = BiPoly.const(Fraction((n + 1) * (n + 2), 2)) * (LAM - n) * (LAM - n - 1)
    return acc - tail


@lru_cache(maxsize=None)
def _sigma2(n: int) -> BiPoly:
    acc = _ZERO
    for k in range(n + 1):
        acc = acc + _rho2(k)
    return acc


def _falling4(shift: int) -> BiPoly:
    # (lam - shift)(lam - shift - 1)(lam - shift - 2)(lam - shift - 3)
    acc = BiPoly.one()
    for i in range(4):
        acc = acc * (LAM - shift - i)
    return acc


def _rho4_term(k: int) -> BiPoly:
    return (
        BiPoly.const(k + 4) * (LAM - k - 3) * _sigma2(k)
        + BiPoly.const(k + 1) * (LAM - k) * _sigma2(k + 1)
        + _falling4(k).scale(2 * comb(k + 4, 4))
    )


@lru_cache(maxsize=None)
def _rho4(n: int) -> BiPoly:
    acc = _ZERO
    for k in range(n):
        acc = acc - _rho4_term(k)
    return acc - _rho4_term(n).scale(Fraction(1, 2))


@lru_cache(maxsize=None)
def _sigma4(n: int) -> BiPoly:
    acc = _ZERO
    for k in range(n + 1):
        acc = acc + _rho4(k)
    return acc


_CLOSED_FORMS = {"rho2": _rho2, "sigma2": _sigma2, "rho4": _rho4, "sigma4": _sigma4}


def closed_form_oracle(kind: str, n: int) -> BiPoly:
    """Closed-form value of rho2/sigma2/rho4/sigma4 at index n, as a
    polynomial in the weight symbol (the caller attaches h^2 or h^4)."""
    if kind not in _CLOSED_FORMS:
        raise ValueError(f"unknown closed form {kind!r}")
    if n < 0:
        raise ValueError("index must be nonnegative")
    return _CLOSED_FORMS[kind](n)
