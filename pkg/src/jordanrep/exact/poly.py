"""Exact bivariate polynomials in the weight symbol and the deformation parameter.

Every scalar appearing in the representation machinery is a polynomial in two
commuting formal symbols -- ``lam`` (the highest weight, printed as a lambda)
and ``h`` (the deformation parameter) -- with arbitrary-precision rational
coefficients.  A :class:`BiPoly` stores a canonical term map
``(deg_lam, deg_h) -> Fraction`` with no zero coefficients, so two
polynomials are equal exactly when their term maps are equal.  All arithmetic
is exact; nothing here ever rounds.

The JSON encoding used throughout the command-line output is::

    rational  ->  "p/q" decimal string ("-42", "-21/2")
    BiPoly    ->  [{"c": "p/q", "l": deg_lam, "h": deg_h}, ...]

with terms sorted by ``(l, h)``.
"""

from __future__ import annotations

from fractions import Fraction


def as_fraction(value) -> Fraction:
    """Coerce an int, string or Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def fraction_to_str(q: Fraction) -> str:
    """Render a rational as 'p' or 'p/q' (denominator omitted when 1)."""
    return str(q)


class BiPoly:
    """Polynomial in ``lam`` and ``h`` over the rationals, in canonical form."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        canon = {}
        if terms:
            for (dl, dh), c in terms.items():
                c = as_fraction(c)
                if c == 0:
                    continue
                if dl < 0 or dh < 0:
                    raise ValueError("exponents must be nonnegative")
                key = (int(dl), int(dh))
                c0 = canon.get(key)
                if c0 is None:
                    canon[key] = c
                else:
                    c0 = c0 + c
                    if c0 == 0:
                        del canon[key]
                    else:
                        canon[key] = c0
        self._terms = canon

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return _ZERO

    @staticmethod
    def one() -> "BiPoly":
        return _ONE

    @staticmethod
    def const(value) -> "BiPoly":
        return BiPoly({(0, 0): as_fraction(value)})

    @staticmethod
    def lam() -> "BiPoly":
        return _LAM

    @staticmethod
    def h() -> "BiPoly":
        return _H

    @staticmethod
    def term(coeff, deg_lam: int, deg_h: int) -> "BiPoly":
        return BiPoly({(deg_lam, deg_h): as_fraction(coeff)})

    # -- mapping access ----------------------------------------------------

    def items(self):
        return self._terms.items()

    def coeff(self, deg_lam: int, deg_h: int) -> Fraction:
        return self._terms.get((deg_lam, deg_h), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def constant_value(self) -> Fraction:
        """The value of a degree-zero polynomial; error if any symbol survives."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) != {(0, 0)}:
            raise ValueError(f"{self} is not a constant")
        return self._terms[(0, 0)]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for key, c in other._terms.items():
            c0 = out.get(key)
            if c0 is None:
                out[key] = c
            else:
                c0 = c0 + c
                if c0 == 0:
                    del out[key]
                else:
                    out[key] = c0
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return _wrap({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for (la, ha), ca in a.items():
            for (lb, hb), cb in b.items():
                key = (la + lb, ha + hb)
                c0 = out.get(key)
                if c0 is None:
                    out[key] = ca * cb
                else:
                    c0 = c0 + ca * cb
                    if c0 == 0:
                        del out[key]
                    else:
                        out[key] = c0
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, q) -> "BiPoly":
        q = as_fraction(q)
        if q == 0:
            return _ZERO
        return _wrap({key: c * q for key, c in self._terms.items()})

    # -- substitutions -----------------------------------------------------

    def subs_lam(self, value) -> "BiPoly":
        """Evaluate the weight symbol at an exact rational value."""
        value = as_fraction(value)
        out = {}
        for (dl, dh), c in self._terms.items():
            c = c * value**dl
            if c == 0:
                continue
            key = (0, dh)
            c0 = out.get(key)
            if c0 is None:
                out[key] = c
            else:
                c0 = c0 + c
                if c0 == 0:
                    del out[key]
                else:
                    out[key] = c0
        return _wrap(out)

    def subs_h(self, value) -> "BiPoly":
        """Evaluate the deformation symbol at an exact rational value."""
        value = as_fraction(value)
        out = {}
        for (dl, dh), c in self._terms.items():
            c = c * value**dh
            if c == 0:
                continue
            key = (dl, 0)
            c0 = out.get(key)
            if c0 is None:
                out[key] = c
            else:
                c0 = c0 + c
                if c0 == 0:
                    del out[key]
                else:
                    out[key] = c0
        return _wrap(out)

    def negate_h(self) -> "BiPoly":
        """Substitute h -> -h."""
        return _wrap(
            {key: (-c if key[1] & 1 else c) for key, c in self._terms.items()}
        )

    def divide_h(self, k: int = 1) -> "BiPoly":
        """Exact division by h**k; every term must carry h-degree >= k."""
        if k == 0:
            return self
        out = {}
        for (dl, dh), c in self._terms.items():
            if dh < k:
                raise ValueError(f"term with h-degree {dh} is not divisible by h^{k}")
            out[(dl, dh - k)] = c
        return _wrap(out)

    def mul_h(self, k: int) -> "BiPoly":
        return _wrap({(dl, dh + k): c for (dl, dh), c in self._terms.items()})

    # -- degree queries ----------------------------------------------------

    def deg_lam(self) -> int:
        return max((dl for (dl, _) in self._terms), default=0)

    def deg_h(self) -> int:
        return max((dh for (_, dh) in self._terms), default=0)

    def is_homogeneous_h(self, degree: int) -> bool:
        """True when every term has h-degree exactly ``degree`` (zero counts)."""
        return all(dh == degree for (_, dh) in self._terms)

    def lambda_free(self) -> bool:
        return all(dl == 0 for (dl, _) in self._terms)

    # -- canonical comparisons ----------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- serialization -------------------------------------------------------

    def to_obj(self) -> list:
        return [
            {"c": fraction_to_str(self._terms[key]), "l": key[0], "h": key[1]}
            for key in sorted(self._terms)
        ]

    @staticmethod
    def from_obj(obj) -> "BiPoly":
        return BiPoly({(t["l"], t["h"]): Fraction(t["c"]) for t in obj})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (dl, dh) in sorted(self._terms, reverse=True):
            c = self._terms[(dl, dh)]
            sym = []
            if dl:
                sym.append("lam" if dl == 1 else f"lam^{dl}")
            if dh:
                sym.append("h" if dh == 1 else f"h^{dh}")
            if not sym:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(sym)
            else:
                body = str(abs(c)) + "*" + "*".join(sym)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"BiPoly({self})"


def _wrap(canon: dict) -> BiPoly:
    p = BiPoly.__new__(BiPoly)
    p._terms = canon
    return p


def _coerce(value):
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        if value == 0:
            return _ZERO
        return BiPoly({(0, 0): as_fraction(value)})
    return NotImplemented


_ZERO = _wrap({})
_ONE = _wrap({(0, 0): Fraction(1)})
_LAM = _wrap({(1, 0): Fraction(1)})
_H = _wrap({(0, 1): Fraction(1)})

#: The weight symbol and the deformation symbol, ready to use.
LAM = _LAM
H = _H
ZERO = _ZERO
ONE = _ONE
