"""q-combinatorics: q-integers, Gaussian binomials, Pochhammer products,
the Euler function and the modular discriminant.

Two data shapes are used besides Scalar: ``QSeries`` for truncated power
series in q over exact rationals, and ``TQSeries`` for the rectangular
(t-order, q-order) truncations of objects like the infinite Pochhammer
product, stored as one QSeries per t-degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalar import Scalar, ZERO, ONE, Q

__all__ = [
    "QSeries",
    "TQSeries",
    "q_int",
    "q_fact",
    "q_binom",
    "poch_finite",
    "poch_inf_product",
    "poch_inf_sum",
    "euler_phi",
    "discriminant",
    "EtaElement",
    "eta_from_phi",
    "eta_mul",
    "eta_inv",
    "eta_pow",
]


# ---------------------------------------------------------------------------
# q-integers, factorials, binomials (exact Scalars)

def q_int(k: int) -> Scalar:
    """1 + q + ... + q^(k-1), the empty sum for k = 0."""
    if k < 0:
        raise ValueError("q_int index must be >= 0")
    return Scalar.from_q_coeffs([1] * k)


def q_fact(k: int) -> Scalar:
    """Product of q_int(1) .. q_int(k); q_fact(0) = 1."""
    if k < 0:
        raise ValueError("q_fact index must be >= 0")
    acc = ONE
    for i in range(1, k + 1):
        acc = acc * q_int(i)
    return acc


def q_binom(n: int, k: int) -> Scalar:
    """Gaussian binomial coefficient; always a polynomial in q."""
    if not 0 <= k <= n:
        raise ValueError("q_binom needs 0 <= k <= n")
    return q_fact(n) / (q_fact(k) * q_fact(n - k))


# ---------------------------------------------------------------------------
# QSeries: truncated power series in q over Fraction

class QSeries:
    """Dense truncated series in q with exact rational coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @staticmethod
    def one(order: int) -> "QSeries":
        return QSeries(order, (1,))

    @staticmethod
    def zero(order: int) -> "QSeries":
        return QSeries(order, ())

    @staticmethod
    def from_scalar(a: Scalar, order: int) -> "QSeries":
        return QSeries(order, a.q_expansion(order))

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k <= self.order:
            return self.coeffs[k]
        raise IndexError(f"degree {k} beyond computed order {self.order}")

    def truncate(self, order: int) -> "QSeries":
        if order >= self.order:
            return self
        return QSeries(order, self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def _common(self, other: "QSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "QSeries") -> "QSeries":
        n = self._common(other)
        return QSeries(n, [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other: "QSeries") -> "QSeries":
        n = self._common(other)
        return QSeries(n, [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __neg__(self) -> "QSeries":
        return QSeries(self.order, [-c for c in self.coeffs])

    def __mul__(self, other: "QSeries") -> "QSeries":
        n = self._common(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return QSeries(n, out)

    def scale(self, c) -> "QSeries":
        c = Fraction(c)
        return QSeries(self.order, [c * a for a in self.coeffs])

    def shift(self, k: int) -> "QSeries":
        """Multiply by q**k (k >= 0), truncating at the same order."""
        if k < 0:
            raise ValueError("shift must be by a nonnegative power")
        return QSeries(self.order, (0,) * k + self.coeffs)

    def reciprocal(self) -> "QSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("reciprocal needs an invertible constant term")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / c0
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc -= self.coeffs[i] * out[k - i]
            out[k] = acc / c0
        return QSeries(self.order, out)

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.reciprocal() ** (-k)
        acc = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def to_scalar(self) -> Scalar:
        """The truncation read back as a polynomial in q."""
        return Scalar.from_q_coeffs(list(self.coeffs))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*q^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O(q^{self.order + 1})>"


# ---------------------------------------------------------------------------
# rectangular (t, q) truncations

class TQSeries:
    """Series in t whose coefficients are q-truncated series."""

    __slots__ = ("t_order", "q_order", "rows")

    def __init__(self, t_order: int, q_order: int, rows=()):
        rs = [r.truncate(q_order) if isinstance(r, QSeries) else QSeries(q_order, r)
              for r in rows][: t_order + 1]
        rs += [QSeries.zero(q_order)] * (t_order + 1 - len(rs))
        self.t_order = t_order
        self.q_order = q_order
        self.rows = tuple(rs)

    @staticmethod
    def one(t_order: int, q_order: int) -> "TQSeries":
        return TQSeries(t_order, q_order, (QSeries.one(q_order),))

    def coeff(self, k: int) -> QSeries:
        """Coefficient of t**k as a QSeries."""
        if 0 <= k <= self.t_order:
            return self.rows[k]
        raise IndexError(f"t-degree {k} beyond computed order {self.t_order}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TQSeries):
            return NotImplemented
        return (self.t_order == other.t_order and self.q_order == other.q_order
                and self.rows == other.rows)

    def __mul__(self, other: "TQSeries") -> "TQSeries":
        nt = min(self.t_order, other.t_order)
        nq = min(self.q_order, other.q_order)
        out = [QSeries.zero(nq) for _ in range(nt + 1)]
        for i, a in enumerate(self.rows[: nt + 1]):
            if a.is_zero():
                continue
            a = a.truncate(nq)
            for j in range(nt + 1 - i):
                b = other.rows[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b.truncate(nq)
        return TQSeries(nt, nq, out)

    def __pow__(self, k: int) -> "TQSeries":
        if k < 0:
            raise ValueError("negative TQSeries powers are not supported")
        acc = TQSeries.one(self.t_order, self.q_order)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc


def _poch_factor(n: int, t_order: int, q_order: int) -> TQSeries:
    """The single factor 1 - t*q^n."""
    rows = [QSeries.one(q_order)]
    if t_order >= 1:
        row1 = [0] * (q_order + 1)
        if n <= q_order:
            row1[n] = -1
        rows.append(QSeries(q_order, row1))
    return TQSeries(t_order, q_order, rows)


def poch_finite(n: int, q_order: int) -> TQSeries:
    """(t; q)_n, the product of (1 - t*q^k) for 0 <= k < n."""
    if n < 0:
        raise ValueError("Pochhammer length must be >= 0")
    acc = TQSeries.one(n, q_order)
    for k in range(n):
        acc = acc * _poch_factor(k, n, q_order)
    return acc


def poch_inf_product(t_order: int, q_order: int) -> TQSeries:
    """(t; q)_infinity via its product, factors cut at index q_order.

    Every omitted factor 1 - t*q^n with n > q_order differs from 1 only
    in q-degrees beyond the truncation, at every positive t-degree, so
    the cut is exact at this precision.
    """
    acc = TQSeries.one(t_order, q_order)
    for k in range(q_order + 1):
        acc = acc * _poch_factor(k, t_order, q_order)
    return acc


def poch_inf_sum(t_order: int, q_order: int) -> TQSeries:
    """(t; q)_infinity via the summation formula.

    The t^k coefficient is (-1)^k q^(k(k-1)/2) / ((1-q)^k [k]_q!), taken
    with the binomial exponent k(k-1)/2; each coefficient is a Scalar
    expanded to the q-truncation.
    """
    one_minus_q = ONE - Q
    rows = []
    for k in range(t_order + 1):
        num = Scalar.from_int((-1) ** k) * Scalar.q_power(k * (k - 1) // 2)
        den = q_fact(k) * one_minus_q ** k
        rows.append(QSeries.from_scalar(num / den, q_order))
    return TQSeries(t_order, q_order, rows)


# ---------------------------------------------------------------------------
# the Euler function and the discriminant

def euler_phi(q_order: int) -> QSeries:
    """The product of (1 - q^k) for k = 1..q_order, truncated."""
    if q_order < 1:
        raise ValueError("q-order must be >= 1")
    out = [0] * (q_order + 1)
    out[0] = 1
    for k in range(1, q_order + 1):
        # multiply by (1 - q^k) in place
        for i in range(q_order, k - 1, -1):
            out[i] -= out[i - k]
    return QSeries(q_order, out)


def discriminant(q_order: int) -> QSeries:
    """q times the 24th power of the Euler function, truncated.

    The coefficient of q^n is the n-th coefficient of the discriminant
    cusp form.
    """
    if q_order < 1:
        raise ValueError("q-order must be >= 1")
    phi24 = euler_phi(q_order) ** 24
    return QSeries(q_order, (Fraction(0),) + phi24.coeffs)


# ---------------------------------------------------------------------------
# eta bookkeeping: a fractional power of q times an honest series

@dataclass(frozen=True)
class EtaElement:
    """q**exponent times a power series, with an exact rational exponent.

    Keeps fractional powers of q out of the series type: the eta function
    itself is (exponent 1/24, body the Euler function).  Products add
    exponents and multiply bodies.
    """

    exponent: Fraction
    body: QSeries

    def fold(self) -> QSeries:
        """Push an integer exponent into the series; errors otherwise."""
        if self.exponent.denominator != 1:
            raise ValueError("cannot fold a genuinely fractional exponent")
        k = self.exponent.numerator
        if k < 0:
            raise ValueError("cannot fold a negative exponent into a series")
        body = self.body.truncate(self.body.order - k) if k else self.body
        out = (Fraction(0),) * k + self.body.coeffs
        return QSeries(self.body.order, out)


def eta_from_phi(q_order: int) -> EtaElement:
    """The eta function as q^(1/24) times the Euler function."""
    return EtaElement(Fraction(1, 24), euler_phi(q_order))


def eta_mul(e1: EtaElement, e2: EtaElement) -> EtaElement:
    return EtaElement(e1.exponent + e2.exponent, e1.body * e2.body)


def eta_inv(e: EtaElement) -> EtaElement:
    return EtaElement(-e.exponent, e.body.reciprocal())


def eta_pow(e: EtaElement, k: int) -> EtaElement:
    return EtaElement(e.exponent * k, e.body ** k)
