"""Dense matrices over the exact polynomial ring, and terminating series.

Rectangular grids of :class:`~jordanrep.exact.poly.BiPoly` with exact
arithmetic.  Dimension mismatches raise; nothing is silently truncated.
Analytic functions (exp, sinh, arctanh, sqrt, ...) are evaluated on nilpotent
matrices only, where the Taylor series terminates and the result is again an
exact polynomial matrix.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DimensionMismatch, NotNilpotent
from .poly import BiPoly, as_fraction
from .series import STREAMS

_ZERO = BiPoly.zero()


def _entry(value) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BiPoly.const(value) if value else _ZERO
    raise TypeError(f"cannot use {value!r} as a matrix entry")


class PolyMatrix:
    """Immutable dense matrix with BiPoly entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows_of_entries):
        entries = tuple(
            tuple(_entry(v) for v in row) for row in rows_of_entries
        )
        if not entries or not entries[0]:
            raise ValueError("matrices must have positive dimensions")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise DimensionMismatch("ragged rows")
        self.rows = len(entries)
        self.cols = width
        self.entries = entries

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zeros(rows: int, cols: int) -> "PolyMatrix":
        return PolyMatrix([[_ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "PolyMatrix":
        one = BiPoly.one()
        return PolyMatrix(
            [[one if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def diagonal(values) -> "PolyMatrix":
        values = [_entry(v) for v in values]
        n = len(values)
        return PolyMatrix(
            [[values[i] if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    # -- access ---------------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def _require_same_shape(self, other: "PolyMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._require_same_shape(other)
        return PolyMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._require_same_shape(other)
        return PolyMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix([[-a for a in row] for row in self.entries])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self.__mul__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, BiPoly)):
            return self.scale(other)
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} times {other.rows}x{other.cols}"
            )
        bt = other.entries
        out = []
        for row in self.entries:
            # skip zero left entries: the representation matrices are sparse
            nz = [(k, a) for k, a in enumerate(row) if a]
            acc_row = []
            for j in range(other.cols):
                acc = _ZERO
                for k, a in nz:
                    b = bt[k][j]
                    if b:
                        acc = acc + a * b
                acc_row.append(acc)
            out.append(acc_row)
        return PolyMatrix(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, BiPoly)):
            return self.scale(other)
        return NotImplemented

    def scale(self, q) -> "PolyMatrix":
        if isinstance(q, BiPoly):
            return PolyMatrix([[a * q for a in row] for row in self.entries])
        q = as_fraction(q)
        return PolyMatrix([[a.scale(q) for a in row] for row in self.entries])

    def __pow__(self, n: int) -> "PolyMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch("powers need a square matrix")
        if n < 0:
            raise ValueError("negative matrix powers are not supported")
        result = PolyMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure ----------------------------------------------------------------

    def trace(self) -> BiPoly:
        if self.rows != self.cols:
            raise DimensionMismatch("trace needs a square matrix")
        acc = _ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for row in self.entries for a in row)

    def kron(self, other: "PolyMatrix") -> "PolyMatrix":
        """Tensor (Kronecker) product, row-major block convention."""
        out = []
        for ra in self.entries:
            for rb in other.entries:
                out.append([a * b for a in ra for b in rb])
        return PolyMatrix(out)

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(a) for a in row] for row in self.entries])

    def subs_lam(self, value) -> "PolyMatrix":
        return self.map_entries(lambda a: a.subs_lam(value))

    def subs_h(self, value) -> "PolyMatrix":
        return self.map_entries(lambda a: a.subs_h(value))

    def negate_h(self) -> "PolyMatrix":
        return self.map_entries(lambda a: a.negate_h())

    def divide_h(self, k: int = 1) -> "PolyMatrix":
        return self.map_entries(lambda a: a.divide_h(k))

    def mul_h(self, k: int = 1) -> "PolyMatrix":
        return self.map_entries(lambda a: a.mul_h(k))

    def first_difference(self, other: "PolyMatrix"):
        """(row, col, self_entry, other_entry) of the first mismatch, or None."""
        self._require_same_shape(other)
        for i in range(self.rows):
            for j in range(self.cols):
                if self.entries[i][j] != other.entries[i][j]:
                    return (i, j, self.entries[i][j], other.entries[i][j])
        return None

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    # -- serialization --------------------------------------------------------------

    def to_obj(self) -> list:
        return [[a.to_obj() for a in row] for row in self.entries]

    @staticmethod
    def from_obj(obj) -> "PolyMatrix":
        return PolyMatrix([[BiPoly.from_obj(a) for a in row] for row in obj])

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(str(a) for a in row) + "]" for row in self.entries
        )

    __repr__ = __str__


def commutator(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a * b - b * a


def anticommutator(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a * b + b * a


def nilpotent_apply(kind: str, m: PolyMatrix, h_scale: int = 0) -> PolyMatrix:
    """Evaluate an analytic function on a nilpotent matrix as a finite sum.

    Returns ``sum_k f_k (h^h_scale m)^k`` where ``f_k`` are the exact Taylor
    coefficients of the named elementary function (see
    :data:`~jordanrep.exact.series.STREAMS`).  The sum terminates because a
    nilpotent d-by-d matrix satisfies ``m^d = 0``; if it does not,
    :class:`NotNilpotent` is raised.

    ``h_scale`` attaches a power of the deformation symbol per order, so the
    usual call for exp(h X) is ``nilpotent_apply("exp", X, h_scale=1)``.
    """
    if m.rows != m.cols:
        raise DimensionMismatch("series evaluation needs a square matrix")
    d = m.rows
    stream = STREAMS[kind]()
    acc = PolyMatrix.identity(d).scale(next(stream))
    power = PolyMatrix.identity(d)
    for k in range(1, d + 1):
        power = power * m
        if power.is_zero:
            return acc
        if k == d:
            raise NotNilpotent(f"matrix power {d} is nonzero")
        coeff = next(stream)
        if coeff:
            term = power.scale(coeff)
            if h_scale:
                term = term.map_entries(lambda a, _k=k: a.mul_h(h_scale * _k))
            acc = acc + term
    return acc


def charpoly(m: PolyMatrix) -> list[BiPoly]:
    """Characteristic polynomial coefficients [1, c1, ..., cn] of det(xI - m).

    Faddeev-LeVerrier: exact over any commutative ring containing the
    rationals, so the coefficients come out as BiPoly values.
    """
    if m.rows != m.cols:
        raise DimensionMismatch("characteristic polynomial needs a square matrix")
    n = m.rows
    coeffs = [BiPoly.one()]
    aux = PolyMatrix.identity(n)
    mat = m
    for k in range(1, n + 1):
        if k > 1:
            aux = m * aux + PolyMatrix.identity(n).scale(coeffs[k - 1])
            mat = m * aux
        c = mat.trace().scale(Fraction(-1, k))
        coeffs.append(c)
    return coeffs


class TensorSum:
    """A sum of Kronecker pairs, multiplied without assembling big matrices.

    Used for coproduct checks on tensor squares: products obey
    (A (x) B)(C (x) D) = AC (x) BD, so all arithmetic happens on the small
    factors and the full matrix is assembled only for the final comparison.
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        self.pairs = list(pairs)

    def __add__(self, other: "TensorSum") -> "TensorSum":
        return TensorSum(self.pairs + other.pairs)

    def __mul__(self, other: "TensorSum") -> "TensorSum":
        return TensorSum(
            [(a * c, b * d) for (a, b) in self.pairs for (c, d) in other.pairs]
        )

    def __neg__(self) -> "TensorSum":
        return TensorSum([(-a, b) for (a, b) in self.pairs])

    def to_matrix(self) -> PolyMatrix:
        acc = None
        for a, b in self.pairs:
            m = a.kron(b)
            acc = m if acc is None else acc + m
        if acc is None:
            raise ValueError("empty tensor sum")
        return acc
