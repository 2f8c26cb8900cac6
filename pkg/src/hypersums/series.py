"""Truncated formal power series, Laurent series and bivariate series over Q.

Everything is exact.  A :class:`TruncatedSeries` of order ``N`` stores the
coefficients of ``z^0 .. z^N``; binary operations between series of different
orders truncate to the smaller order.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .rational import RationalLike, as_rational, binomial, format_rational, pochhammer


class ZeroConstantTerm(ZeroDivisionError):
    """Raised when inverting a series whose constant term is zero."""


class NonzeroConstantTerm(ValueError):
    """Raised when a series argument must vanish at z = 0 but does not."""


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike]):
        coeffs = tuple(as_rational(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = coeffs

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> "TruncatedSeries":
        return cls([c] + [0] * order)

    @classmethod
    def monomial(cls, k: int, order: int, c: RationalLike = 1) -> "TruncatedSeries":
        """c * z^k truncated at ``order`` (zero if k > order)."""
        coeffs = [Fraction(0)] * (order + 1)
        if k <= order:
            coeffs[k] = as_rational(c)
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(map(format_rational, self.coeffs))}])"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(as_rational(other), self.order)

    def __add__(self, other):
        other = self._coerce(other)
        m = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[k] + other.coeffs[k] for k in range(m + 1))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        m = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(m + 1):
            acc = Fraction(0)
            for j in range(k + 1):
                if a[j] and b[k - j]:
                    acc += a[j] * b[k - j]
            out.append(acc)
        return TruncatedSeries(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c: RationalLike) -> "TruncatedSeries":
        c = as_rational(c)
        return TruncatedSeries(c * x for x in self.coeffs)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse up to the truncation order."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroConstantTerm("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, len(a)):
            acc = sum((a[j] * out[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
            out.append(-acc * inv0)
        return TruncatedSeries(out)

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError("series power must be a non-negative integer")
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def egf_values(self) -> list[Fraction]:
        """Sequence encoded when this series is read as an EGF: k! * [z^k]."""
        return [factorial(k) * c for k, c in enumerate(self.coeffs)]

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]


def invert(s: TruncatedSeries) -> TruncatedSeries:
    return s.inverse()


def exp_series(c: RationalLike, order: int) -> TruncatedSeries:
    """e^{cz} to order ``order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    c = as_rational(c)
    out = [Fraction(1)]
    for k in range(1, order + 1):
        out.append(out[-1] * c / k)
    return TruncatedSeries(out)


def expm1_unit(d: RationalLike, order: int) -> TruncatedSeries:
    """The unit (e^{dz} - 1)/z, whose constant term is d."""
    d = as_rational(d)
    return TruncatedSeries(d ** (k + 1) / factorial(k + 1) for k in range(order + 1))


def from_egf_values(values: Sequence[RationalLike]) -> TruncatedSeries:
    """Series with k! * [z^k] equal to ``values[k]``."""
    return TruncatedSeries(as_rational(v) / factorial(k) for k, v in enumerate(values))


class LaurentSeries:
    """Coefficients of z^{-depth} .. z^{order} with a finite principal part."""

    __slots__ = ("depth", "coeffs")

    def __init__(self, depth: int, coeffs: Iterable[RationalLike]):
        if depth < 0:
            raise ValueError("depth must be non-negative")
        self.depth = depth
        self.coeffs = tuple(as_rational(c) for c in coeffs)
        if len(self.coeffs) <= depth:
            raise ValueError("Laurent series must reach at least z^0")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1 - self.depth

    def coefficient(self, k: int) -> Fraction:
        """[z^k] for -depth <= k <= order; zero below the principal part."""
        if k < -self.depth:
            return Fraction(0)
        return self.coeffs[k + self.depth]

    def principal_part(self) -> tuple[Fraction, ...]:
        """Coefficients of z^{-depth} .. z^{-1}."""
        return self.coeffs[: self.depth]

    def regular_part(self) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs[self.depth :])

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        depth = max(self.depth, other.depth)
        order = min(self.order, other.order)
        return LaurentSeries(
            depth,
            (self.coefficient(k) + other.coefficient(k) for k in range(-depth, order + 1)),
        )

    def __neg__(self):
        return LaurentSeries(self.depth, (-c for c in self.coeffs))

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, c: RationalLike) -> "LaurentSeries":
        c = as_rational(c)
        return LaurentSeries(self.depth, (c * x for x in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return self.depth == other.depth and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        return f"LaurentSeries(depth={self.depth}, [{', '.join(map(format_rational, self.coeffs))}])"

    def to_json(self) -> dict:
        return {"depth": self.depth, "coeffs": [format_rational(c) for c in self.coeffs]}


def laurent_from_quotient(
    numer: TruncatedSeries, denom_zero_order: int, denom_unit: TruncatedSeries
) -> LaurentSeries:
    """numer / (z^m * unit) as a Laurent series of depth m.

    The result reaches z^{M - m} where M is the common order of the operands.
    """
    m = denom_zero_order
    if m < 0:
        raise ValueError("zero order of the denominator must be non-negative")
    quotient = numer * denom_unit.inverse()
    if quotient.order < m:
        raise ValueError("working order too small for the requested shift")
    return LaurentSeries(m, quotient.coeffs)


def gauss_2f1_terminating(n: int, c: RationalLike, u: TruncatedSeries) -> TruncatedSeries:
    """2F1(1, -n; c; u) for a series u with u(0) = 0.

    Terminates at k = n since (-n)_k vanishes beyond; (1)_k / k! = 1.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if u[0] != 0:
        raise NonzeroConstantTerm("argument of the terminating 2F1 must vanish at z = 0")
    c = as_rational(c)
    total = TruncatedSeries.constant(1, u.order)
    power = TruncatedSeries.constant(1, u.order)
    for k in range(1, n + 1):
        denom = pochhammer(c, k)
        if denom == 0:
            raise ZeroDivisionError(f"lower parameter {c} hits a pole at k = {k}")
        power = power * u
        total = total + power.scale(pochhammer(-n, k) / denom)
    return total


class BivariateSeries:
    """Series in t whose coefficients are TruncatedSeries in z.

    ``rows[r]`` is [t^r]; t-order is ``len(rows) - 1``.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[TruncatedSeries]):
        self.rows = tuple(rows)
        if not self.rows:
            raise ValueError("need at least one t-coefficient")

    @property
    def t_order(self) -> int:
        return len(self.rows) - 1

    @property
    def z_order(self) -> int:
        return min(row.order for row in self.rows)

    def coefficient(self, r: int) -> TruncatedSeries:
        return self.rows[r]

    def __getitem__(self, rp):
        r, p = rp
        return self.rows[r][p]

    def __eq__(self, other):
        if isinstance(other, BivariateSeries):
            return self.rows == other.rows
        return NotImplemented

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        R = min(self.t_order, other.t_order)
        return BivariateSeries(self.rows[r] + other.rows[r] for r in range(R + 1))

    def __neg__(self):
        return BivariateSeries(-row for row in self.rows)

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + (-other)

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        R = min(self.t_order, other.t_order)
        rows = []
        for r in range(R + 1):
            acc = self.rows[0] * other.rows[r]
            for i in range(1, r + 1):
                acc = acc + self.rows[i] * other.rows[r - i]
            rows.append(acc)
        return BivariateSeries(rows)

    @classmethod
    def from_t_polynomial(cls, coeffs, R: int, N: int) -> "BivariateSeries":
        """sum_j coeffs[j] t^j, each coeffs[j] a z-series (or scalar), truncated at t^R."""
        rows = []
        for r in range(R + 1):
            c = coeffs[r] if r < len(coeffs) else 0
            if isinstance(c, TruncatedSeries):
                rows.append(c.truncate(N))
            else:
                rows.append(TruncatedSeries.constant(c, N))
        return cls(rows)

    def to_json(self) -> list[list[str]]:
        return [row.to_json() for row in self.rows]


def _grid(rows: int, cols: int):
    return [[Fraction(0)] * (cols + 1) for _ in range(rows + 1)]


def bivariate_expand(n: int, a: RationalLike, d: RationalLike, R: int, N: int) -> BivariateSeries:
    """Expand (e^{az} - (1-t)^{n+1} e^{(a+(n+1)d)z}) / ((1-t)^{n+1} (1 - (1-t)e^{dz})).

    The denominator is not a unit (it reduces to t modulo z), so the quotient
    is built z-order by z-order: writing D = t + sum_{k>=1} D_k z^k, each
    z-coefficient Q_k solves t*Q_k = Num_k - sum_{j<k} Q_j D_{k-j}, and the
    right-hand side must be divisible by t.  Each step costs one t-order, so
    the work runs at t-order R + N + 1.
    """
    if R < 0 or N < 0:
        raise ValueError("orders must be non-negative")
    a, d = as_rational(a), as_rational(d)
    T = R + N + 1
    # (1-t)^{-(n+1)} = sum_j C(n+j, j) t^j
    inv_one_minus_t_pow = [Fraction(binomial(n + j, j)) for j in range(T + 1)]

    e_a = exp_series(a, N)
    e_b = exp_series(a + (n + 1) * d, N)
    e_d = exp_series(d, N)

    # numerator, indexed [z-order][t-order], already divided by (1-t)^{n+1}:
    # e^{az}(1-t)^{-(n+1)} - e^{(a+(n+1)d)z}
    num = _grid(N, T)
    for k in range(N + 1):
        for j in range(T + 1):
            num[k][j] = e_a[k] * inv_one_minus_t_pow[j]
        num[k][0] -= e_b[k]

    # D = 1 - (1-t) e^{dz}; D_0 = t, D_k = -(1-t) d^k/k! for k >= 1
    den = _grid(N, T)
    den[0][1] = Fraction(1)
    for k in range(1, N + 1):
        den[k][0] = -e_d[k]
        den[k][1] = e_d[k]

    quot = _grid(N, T)
    for k in range(N + 1):
        rhs = list(num[k])
        for j in range(k):
            dk = den[k - j]
            qj = quot[j]
            for i in range(T + 1):
                if not qj[i]:
                    continue
                if dk[0]:
                    rhs[i] -= qj[i] * dk[0]
                if i + 1 <= T and dk[1]:
                    rhs[i + 1] -= qj[i] * dk[1]
        if rhs[0] != 0:
            raise ArithmeticError(f"quotient does not exist: t does not divide z^{k} residue")
        quot[k] = rhs[1:] + [Fraction(0)]
    # the top t-coefficients lost precision during the divisions; keep t^0..t^R
    rows = [TruncatedSeries(quot[k][r] for k in range(N + 1)) for r in range(R + 1)]
    return BivariateSeries(rows)
