"""Truncated formal power series over the exact scalar field.

Two flavours are provided: ``Series`` in one variable, stored densely up
to an explicit order, and ``BiSeries`` in two variables truncated by
*total* degree.  Every arithmetic result carries order = min of the input
orders; no operation ever claims coefficients it has not computed.

All values are immutable and the operations are pure.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import Scalar, ZERO, ONE

__all__ = [
    "Series",
    "BiSeries",
    "compose",
    "reverse",
    "log1",
    "exp0",
    "pow_formal",
    "pow_bivariate",
]


def _as_scalar(c) -> Scalar:
    if isinstance(c, Scalar):
        return c
    if isinstance(c, int):
        return Scalar.from_int(c)
    if isinstance(c, Fraction):
        return Scalar.from_fraction(c)
    raise TypeError(f"cannot use {c!r} as a series coefficient")


class Series:
    """Dense truncated power series in one variable."""

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var: str, order: int, coeffs=()):
        if order < 0:
            raise ValueError("series order must be >= 0")
        cs = [_as_scalar(c) for c in coeffs][: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        self.var = var
        self.order = order
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(var: str, order: int) -> "Series":
        return Series(var, order, ())

    @staticmethod
    def constant(var: str, order: int, c) -> "Series":
        return Series(var, order, (c,))

    @staticmethod
    def generator(var: str, order: int) -> "Series":
        return Series(var, order, (ZERO, ONE))

    # -- access ---------------------------------------------------------------

    def __getitem__(self, k: int) -> Scalar:
        if 0 <= k <= self.order:
            return self.coeffs[k]
        raise IndexError(f"degree {k} beyond computed order {self.order}")

    def constant_term(self) -> Scalar:
        return self.coeffs[0]

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        return Series(self.var, order, self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self.var == other.var and self.order == other.order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.var, self.order, self.coeffs))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                terms.append(f"({c})*{self.var}^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O({self.var}^{self.order + 1})>"

    # -- arithmetic ------------------------------------------------------------

    def _common(self, other: "Series") -> int:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        return min(self.order, other.order)

    def __add__(self, other: "Series") -> "Series":
        n = self._common(other)
        return Series(self.var, n,
                      [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other: "Series") -> "Series":
        n = self._common(other)
        return Series(self.var, n,
                      [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __neg__(self) -> "Series":
        return Series(self.var, self.order, [-c for c in self.coeffs])

    def __mul__(self, other: "Series") -> "Series":
        n = self._common(other)
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series(self.var, n, out)

    def __truediv__(self, other: "Series") -> "Series":
        n = self._common(other)
        d0 = other.coeffs[0]
        if d0.is_zero():
            raise ZeroDivisionError(
                "series division needs an invertible constant term")
        out = [ZERO] * (n + 1)
        for k in range(n + 1):
            acc = self.coeffs[k]
            for i in range(1, k + 1):
                di = other.coeffs[i]
                if not di.is_zero():
                    acc = acc - di * out[k - i]
            out[k] = acc / d0
        return Series(self.var, n, out)

    def scale(self, c) -> "Series":
        c = _as_scalar(c)
        return Series(self.var, self.order, [c * a for a in self.coeffs])

    def add_scalar(self, c) -> "Series":
        c = _as_scalar(c)
        return Series(self.var, self.order,
                      (self.coeffs[0] + c,) + self.coeffs[1:])

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return (Series.constant(self.var, self.order, ONE) / self) ** (-k)
        acc = Series.constant(self.var, self.order, ONE)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def deriv(self) -> "Series":
        if self.order == 0:
            return Series(self.var, 0, ())
        return Series(self.var, self.order - 1,
                      [Scalar.from_int(k) * self.coeffs[k]
                       for k in range(1, self.order + 1)])

    def map_coeffs(self, fn) -> "Series":
        return Series(self.var, self.order, [fn(c) for c in self.coeffs])

    def rename(self, var: str) -> "Series":
        return Series(var, self.order, self.coeffs)


# ---------------------------------------------------------------------------
# composition and reversion

def compose(f: Series, g: Series) -> Series:
    """f(g) for g with zero constant term, truncated to the common order."""
    if f.var != g.var:
        raise ValueError(f"variable mismatch: {f.var} vs {g.var}")
    if not g.coeffs[0].is_zero():
        raise ValueError("composition needs an inner series with g(0) = 0")
    n = min(f.order, g.order)
    g = g.truncate(n)
    acc = Series.constant(f.var, n, f.coeffs[min(n, f.order)])
    for k in range(min(n, f.order) - 1, -1, -1):
        acc = acc * g
        acc = acc.add_scalar(f.coeffs[k])
    return acc


def reverse(f: Series) -> Series:
    """Compositional inverse of f with f(0) = 0 and f'(0) invertible.

    Solved coefficient by coefficient through the Lagrange inversion
    recurrence: n * [T**n] g = [w**(n-1)] (w / f(w))**n, with the powers of
    w/f built up incrementally.
    """
    if not f.coeffs[0].is_zero():
        raise ValueError("reversion needs f(0) = 0")
    if f.order < 1 or f.coeffs[1].is_zero():
        raise ValueError("reversion needs an invertible linear coefficient")
    n = f.order
    # u = f/w as a unit series of order n-1, then p = 1/u
    u = Series(f.var, max(n - 1, 0), f.coeffs[1:])
    p = Series.constant(f.var, u.order, ONE) / u
    out = [ZERO] * (n + 1)
    pw = Series.constant(f.var, u.order, ONE)
    for k in range(1, n + 1):
        pw = pw * p
        out[k] = pw.coeffs[k - 1] / Scalar.from_int(k)
    return Series(f.var, n, out)


# ---------------------------------------------------------------------------
# formal logarithm / exponential / powers

def log1(f: Series) -> Series:
    """Formal log of a series with constant term 1."""
    if not f.coeffs[0].is_one():
        raise ValueError("log needs constant term 1")
    n = f.order
    # integrate f'/f
    g = f.deriv() / f.truncate(max(n - 1, 0))
    out = [ZERO] * (n + 1)
    for k in range(1, n + 1):
        out[k] = g.coeffs[k - 1] / Scalar.from_int(k)
    return Series(f.var, n, out)


def exp0(f: Series) -> Series:
    """Formal exp of a series with constant term 0."""
    if not f.coeffs[0].is_zero():
        raise ValueError("exp needs constant term 0")
    n = f.order
    out = [ZERO] * (n + 1)
    out[0] = ONE
    # e' = f' e, solved degree by degree
    for k in range(1, n + 1):
        acc = ZERO
        for i in range(1, k + 1):
            fi = f.coeffs[i]
            if not fi.is_zero():
                acc = acc + Scalar.from_int(i) * fi * out[k - i]
        out[k] = acc / Scalar.from_int(k)
    return Series(f.var, n, out)


def pow_formal(f: Series, c) -> Series:
    """f**c for a series with constant term 1 and an arbitrary scalar c."""
    c = _as_scalar(c)
    return exp0(log1(f).scale(c))


# ---------------------------------------------------------------------------
# bivariate series, truncated by total degree

class BiSeries:
    """Sparse bivariate series truncated by total degree."""

    __slots__ = ("vars", "order", "terms")

    def __init__(self, vars, order: int, terms=None):
        self.vars = tuple(vars)
        if len(self.vars) != 2:
            raise ValueError("BiSeries needs exactly two variables")
        self.order = order
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                c = _as_scalar(c)
                if i + j <= order and not c.is_zero():
                    clean[(i, j)] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(vars, order: int) -> "BiSeries":
        return BiSeries(vars, order)

    @staticmethod
    def constant(vars, order: int, c) -> "BiSeries":
        return BiSeries(vars, order, {(0, 0): c})

    @staticmethod
    def generator(vars, order: int, which: int) -> "BiSeries":
        key = (1, 0) if which == 0 else (0, 1)
        return BiSeries(vars, order, {key: ONE})

    @staticmethod
    def from_series(f: Series, vars, order: int, which: int) -> "BiSeries":
        terms = {}
        for k, c in enumerate(f.coeffs[: order + 1]):
            if not c.is_zero():
                terms[(k, 0) if which == 0 else (0, k)] = c
        return BiSeries(vars, min(order, f.order), terms)

    # -- access ----------------------------------------------------------------

    def coeff(self, i: int, j: int) -> Scalar:
        if i + j > self.order:
            raise IndexError(
                f"degree ({i},{j}) beyond computed total order {self.order}")
        return self.terms.get((i, j), ZERO)

    def constant_term(self) -> Scalar:
        return self.terms.get((0, 0), ZERO)

    def truncate(self, order: int) -> "BiSeries":
        if order >= self.order:
            return self
        return BiSeries(self.vars, order, self.terms)

    def slice_first(self, k: int) -> Series:
        """Coefficient of (first variable)**k as a series in the second."""
        n = self.order - k
        out = [ZERO] * (n + 1)
        for (i, j), c in self.terms.items():
            if i == k:
                out[j] = c
        return Series(self.vars[1], n, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (self.vars == other.vars and self.order == other.order
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, self.order,
                     tuple(sorted(self.terms.items(),
                                  key=lambda kv: kv[0]))))

    def __repr__(self):
        x, y = self.vars
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        terms = [f"({c})*{x}^{i}*{y}^{j}" for (i, j), c in items]
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O(total degree {self.order + 1})>"

    # -- arithmetic --------------------------------------------------------------

    def _common(self, other: "BiSeries") -> int:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
        return min(self.order, other.order)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        n = self._common(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return BiSeries(self.vars, n, out)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.vars, self.order,
                        {k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        n = self._common(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            if i1 + j1 > n:
                continue
            for (i2, j2), c2 in other.terms.items():
                i, j = i1 + i2, j1 + j2
                if i + j <= n:
                    key = (i, j)
                    prev = out.get(key)
                    out[key] = c1 * c2 if prev is None else prev + c1 * c2
        return BiSeries(self.vars, n, out)

    def __truediv__(self, other: "BiSeries") -> "BiSeries":
        n = self._common(other)
        d0 = other.constant_term()
        if d0.is_zero():
            raise ZeroDivisionError(
                "bivariate division needs an invertible constant term")
        out: dict = {}
        num = self.terms
        # solve by increasing total degree
        for d in range(n + 1):
            for i in range(d + 1):
                j = d - i
                acc = num.get((i, j), ZERO)
                for (k, l), c in other.terms.items():
                    if (k, l) == (0, 0) or k > i or l > j:
                        continue
                    r = out.get((i - k, j - l))
                    if r is not None:
                        acc = acc - c * r
                if not acc.is_zero():
                    out[(i, j)] = acc / d0
        return BiSeries(self.vars, n, out)

    def scale(self, c) -> "BiSeries":
        c = _as_scalar(c)
        return BiSeries(self.vars, self.order,
                        {k: c * v for k, v in self.terms.items()})

    def __pow__(self, k: int) -> "BiSeries":
        if k < 0:
            raise ValueError("negative bivariate powers are not supported")
        acc = BiSeries.constant(self.vars, self.order, ONE)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def map_coeffs(self, fn) -> "BiSeries":
        return BiSeries(self.vars, self.order,
                        {k: fn(c) for k, c in self.terms.items()})

    def swap(self) -> "BiSeries":
        """Exchange the two variables."""
        return BiSeries((self.vars[1], self.vars[0]), self.order,
                        {(j, i): c for (i, j), c in self.terms.items()})


def bi_compose(f: Series, g: BiSeries) -> BiSeries:
    """f(g) for a univariate f and a bivariate g with zero constant term."""
    if not g.constant_term().is_zero():
        raise ValueError("composition needs an inner series with g(0,0) = 0")
    n = min(f.order, g.order)
    g = g.truncate(n)
    acc = BiSeries.constant(g.vars, n, f.coeffs[min(n, f.order)])
    for k in range(min(n, f.order) - 1, -1, -1):
        acc = acc * g
        acc = acc + BiSeries.constant(g.vars, n, f.coeffs[k])
    return acc


def bi_exp0(u: BiSeries) -> BiSeries:
    """exp of a bivariate series with zero constant term."""
    if not u.constant_term().is_zero():
        raise ValueError("exp needs constant term 0")
    n = u.order
    acc = BiSeries.constant(u.vars, n, ONE)
    term = BiSeries.constant(u.vars, n, ONE)
    for k in range(1, n + 1):
        term = term * u
        if term.is_zero():
            break
        term = term.scale(Scalar.from_fraction(Fraction(1, k)))
        acc = acc + term
    return acc


def pow_bivariate(f: Series, c) -> BiSeries:
    """f(T) raised to the formal power c*t, as a BiSeries in (t, T).

    Requires f(0) = 1.  The result is exp(c * t * log f), truncated by
    total degree at f.order, so the caller controls the precision through
    the order to which f was expanded.
    """
    c = _as_scalar(c)
    lg = log1(f).scale(c)
    n = f.order
    u = BiSeries.from_series(lg, ("t", f.var), n, which=1)
    t = BiSeries.generator(("t", f.var), n, which=0)
    return bi_exp0(t * u)
