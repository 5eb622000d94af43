"""The q-deformed formal group law and its verification machinery.

The law F(X,Y) = (X + Y + (1+q)XY)/(1 + qXY) over Z[q] is built here by
two independent routes: expansion of the closed rational form, and
exp/log transport, where

    log(T) = det^{-1} * log((1 - q*T)/(1 - T)),   det = 1 - q,
    exp(T) = the companion Moebius action applied to exp((1-q)*T),

so that F(X,Y) = exp(log X + log Y).  Setting q = 0 degenerates the law
to the multiplicative one X + Y + XY.

Associativity of a law given only as a truncated bivariate series is
checked through a dedicated three-variable substitution; a law that also
carries its closed rational form is checked exactly by cross-multiplying
the two association orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalar import Scalar, ZERO, ONE, Q, S, eval_q0
from .series import Series, BiSeries, compose, reverse, log1, exp0, bi_compose
from .mobius import q_mobius, q_mobius_inv, mob_apply, mob_det
from .report import Check, VerificationReport

__all__ = [
    "FormalGroupLaw",
    "qmob_series",
    "log_chi",
    "exp_chi",
    "f_chi_closed",
    "f_chi_from_log",
    "f_chi_derived_closed",
    "proposition_check",
    "multiplicative_law",
    "verify_fgl",
    "drinfeld_form",
    "cp_image",
    "fgl_inverse",
    "fgl_eval",
    "cartier_check",
]

_XY = ("X", "Y")


# ---------------------------------------------------------------------------
# the logarithm / exponential pair

def qmob_series(order: int) -> Series:
    """(1 - q*T)/(1 - T) as a series: 1 + (1-q)T + (1-q)T^2 + ..."""
    return mob_apply(q_mobius(), Series.generator("T", order))


def log_chi(order: int) -> Series:
    """det^{-1} * log of the basic unit series; equals sum [k]_q T^k / k."""
    det_inv = ONE / mob_det(q_mobius())
    return log1(qmob_series(order)).scale(det_inv)


def exp_chi(order: int) -> Series:
    """Moebius companion applied to exp((1-q) T); inverse of log_chi."""
    det = mob_det(q_mobius())
    inner = Series.generator("T", order).scale(det)
    return mob_apply(q_mobius_inv(), exp0(inner))


def cp_image(n: int) -> Scalar:
    """Orientation image of complex projective n-space: 1 + q + ... + q^n.

    Extracted from the logarithm the way one reads manifold classes off a
    complex orientation: (n+1) times the T^(n+1) coefficient.
    """
    if n < 0:
        raise ValueError("projective space dimension must be >= 0")
    lg = log_chi(n + 1)
    return Scalar.from_int(n + 1) * lg[n + 1]


# ---------------------------------------------------------------------------
# the law itself

def _closed_expand(closed, vars, order: int) -> BiSeries:
    num_terms, den_terms = closed
    num = BiSeries(vars, order, num_terms)
    den = BiSeries(vars, order, den_terms)
    return num / den


@dataclass(frozen=True)
class FormalGroupLaw:
    """A truncated group law, optionally with its closed rational form.

    ``closed`` is a pair of term dictionaries (numerator, denominator)
    over the two variables; when present it is exact (no truncation).
    """

    series: BiSeries
    closed: tuple | None = None

    @property
    def order(self) -> int:
        return self.series.order

    def coeff(self, i: int, j: int) -> Scalar:
        return self.series.coeff(i, j)


def f_chi_closed(order: int) -> FormalGroupLaw:
    """Expand (X + Y + (1+q)XY)/(1 + qXY) by total degree."""
    closed = (
        {(1, 0): ONE, (0, 1): ONE, (1, 1): ONE + Q},
        {(0, 0): ONE, (1, 1): Q},
    )
    return FormalGroupLaw(series=_closed_expand(closed, _XY, order),
                          closed=closed)


def f_chi_from_log(order: int) -> FormalGroupLaw:
    """Transport addition through the logarithm: exp(log X + log Y)."""
    lg = log_chi(order)
    ex = exp_chi(order)
    lx = BiSeries.from_series(lg, _XY, order, which=0)
    ly = BiSeries.from_series(lg, _XY, order, which=1)
    return FormalGroupLaw(series=bi_compose(ex, lx + ly))


def f_chi_derived_closed(order: int) -> FormalGroupLaw:
    """The closed form that the exp/log transport actually produces.

    Clearing exp(log X + log Y) through the Moebius pair gives, exactly,
    (X + Y - (1+q)XY)/(1 - qXY).  This is the unique law whose logarithm
    is sum [k]_q T^k / k; it differs from the form in ``f_chi_closed`` by
    more than a variable rescaling (the two laws have different
    logarithms), so the two are kept side by side and compared by
    ``proposition_check``.
    """
    closed = (
        {(1, 0): ONE, (0, 1): ONE, (1, 1): -(ONE + Q)},
        {(0, 0): ONE, (1, 1): -Q},
    )
    return FormalGroupLaw(series=_closed_expand(closed, _XY, order),
                          closed=closed)


def multiplicative_law(order: int) -> FormalGroupLaw:
    closed = ({(1, 0): ONE, (0, 1): ONE, (1, 1): ONE}, {(0, 0): ONE})
    return FormalGroupLaw(series=_closed_expand(closed, _XY, order),
                          closed=closed)


def proposition_check(order: int) -> VerificationReport:
    """Adjudicate which closed form the exp/log transport yields.

    Expands exp(log X + log Y) as a bivariate series and compares it,
    coefficient by coefficient, against the two candidate closed forms:
    the one with +(1+q)XY over 1 + qXY and the one with -(1+q)XY over
    1 - qXY.  Exactly one candidate matches (the minus form); the plus
    form fails already at the XY coefficient.
    """
    transported = f_chi_from_log(order).series
    checks = []
    for name, law in (("transport = plus form (X+Y+(1+q)XY)/(1+qXY)",
                       f_chi_closed(order)),
                      ("transport = minus form (X+Y-(1+q)XY)/(1-qXY)",
                       f_chi_derived_closed(order))):
        diff_key = None
        keys = set(transported.terms) | set(law.series.terms)
        for key in sorted(keys, key=lambda k: (sum(k), k)):
            if transported.terms.get(key, ZERO) != law.series.terms.get(key, ZERO):
                diff_key = key
                break
        checks.append(Check(name, order, diff_key is None,
                            None if diff_key is None else
                            f"first failing coefficient {diff_key}"))
    return VerificationReport(tuple(checks))


def drinfeld_form(order: int) -> FormalGroupLaw:
    """Rescale the law by half-integer powers of q into its symmetric form.

    s * F(X/s, Y/s) with s**2 = q has the closed expression
    (X + Y + (s^-1 + s)XY)/(1 + XY); the series part is computed by
    rescaling the expanded law, the closed part is attached independently
    so the two routes can be compared.
    """
    base = f_chi_closed(order).series
    s_inv = ONE / S
    terms = {}
    for (i, j), c in base.terms.items():
        terms[(i, j)] = c * S ** (1 - i - j)
    rescaled = BiSeries(_XY, order, terms)
    closed = (
        {(1, 0): ONE, (0, 1): ONE, (1, 1): s_inv + S},
        {(0, 0): ONE, (1, 1): ONE},
    )
    return FormalGroupLaw(series=rescaled, closed=closed)


# ---------------------------------------------------------------------------
# trivariate helpers for the associativity check
#
# A trivariate polynomial/series is a dict (i, j, k) -> Scalar; ``order``
# is the total-degree truncation, or None for exact polynomial work.

def _tri_mul(a: dict, b: dict, order) -> dict:
    out: dict = {}
    for (i1, j1, k1), c1 in a.items():
        for (i2, j2, k2), c2 in b.items():
            i, j, k = i1 + i2, j1 + j2, k1 + k2
            if order is not None and i + j + k > order:
                continue
            key = (i, j, k)
            prev = out.get(key)
            v = c1 * c2 if prev is None else prev + c1 * c2
            out[key] = v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _tri_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, ZERO) - c
        if v.is_zero():
            out.pop(k, None)
        else:
            out[k] = v
    return out


def _tri_scale_add(acc: dict, term: dict, c: Scalar, order) -> None:
    for key, v in term.items():
        if order is not None and sum(key) > order:
            continue
        w = acc.get(key, ZERO) + c * v
        if w.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = w


def _bi_terms_to_tri(terms: dict, slots: tuple) -> dict:
    """Lift bivariate terms into three variables; slots maps onto (0,1,2)."""
    out = {}
    for (i, j), c in terms.items():
        key = [0, 0, 0]
        key[slots[0]] = i
        key[slots[1]] = j
        out[tuple(key)] = c
    return out


def _tri_substitute_bi(terms: dict, a: dict, b: dict, order) -> dict:
    """Evaluate a bivariate term dict at trivariate arguments a and b."""
    max_i = max((i for (i, _) in terms), default=0)
    max_j = max((j for (_, j) in terms), default=0)
    one = {(0, 0, 0): ONE}
    apow = [one]
    for _ in range(max_i):
        apow.append(_tri_mul(apow[-1], a, order))
    bpow = [one]
    for _ in range(max_j):
        bpow.append(_tri_mul(bpow[-1], b, order))
    acc: dict = {}
    for (i, j), c in terms.items():
        _tri_scale_add(acc, _tri_mul(apow[i], bpow[j], order), c, order)
    return acc


def _tri_div(num: dict, den: dict, order: int) -> dict:
    d0 = den.get((0, 0, 0), ZERO)
    if d0.is_zero():
        raise ZeroDivisionError("trivariate division needs a unit constant term")
    out: dict = {}
    for d in range(order + 1):
        for i in range(d + 1):
            for j in range(d - i + 1):
                k = d - i - j
                acc = num.get((i, j, k), ZERO)
                for (p, r, t), c in den.items():
                    if (p, r, t) == (0, 0, 0) or p > i or r > j or t > k:
                        continue
                    prev = out.get((i - p, j - r, k - t))
                    if prev is not None:
                        acc = acc - c * prev
                if not acc.is_zero():
                    out[(i, j, k)] = acc / d0
    return out


def _first_tri_difference(a: dict, b: dict):
    keys = sorted(set(a) | set(b), key=lambda k: (sum(k), k))
    for k in keys:
        if a.get(k, ZERO) != b.get(k, ZERO):
            return k
    return None


def _assoc_generic(F: BiSeries, order: int):
    """Compare F(F(X,Y),Z) with F(X,F(Y,Z)) by truncated substitution."""
    inner_left = _bi_terms_to_tri(F.truncate(order).terms, (0, 1))
    inner_right = _bi_terms_to_tri(F.truncate(order).terms, (1, 2))
    zgen = {(0, 0, 1): ONE}
    xgen = {(1, 0, 0): ONE}
    terms = F.truncate(order).terms
    left = _tri_substitute_bi(terms, inner_left, zgen, order)
    right = _tri_substitute_bi(terms, xgen, inner_right, order)
    return _first_tri_difference(left, right)


def _assoc_closed(closed, order=None):
    """Exact associativity of a closed rational law by cross-multiplying.

    F = P/R; both association orders are rational with polynomial
    numerator and denominator, so equality is a polynomial identity and
    is decided exactly (no truncation).
    """
    P, R = closed
    du = max(max(i for (i, _) in P), max(i for (i, _) in R))
    dv = max(max(j for (_, j) in P), max(j for (_, j) in R))

    def outer(num_arg, den_arg, arg_slot_is_first, gen):
        # P(A/B, Z) and R(A/B, Z) cleared by B**du (first slot) or B**dv
        deg = du if arg_slot_is_first else dv
        bpow = [{(0, 0, 0): ONE}]
        for _ in range(deg):
            bpow.append(_tri_mul(bpow[-1], den_arg, None))
        apow = [{(0, 0, 0): ONE}]
        for _ in range(deg):
            apow.append(_tri_mul(apow[-1], num_arg, None))
        gpow = [{(0, 0, 0): ONE}]
        maxg = dv if arg_slot_is_first else du
        for _ in range(maxg):
            gpow.append(_tri_mul(gpow[-1], gen, None))

        def clear(terms):
            acc: dict = {}
            for (i, j), c in terms.items():
                e = i if arg_slot_is_first else j
                g = j if arg_slot_is_first else i
                t = _tri_mul(apow[e], bpow[deg - e], None)
                t = _tri_mul(t, gpow[g], None)
                _tri_scale_add(acc, t, c, None)
            return acc

        return clear(P), clear(R)

    # left: F(F(X,Y), Z)
    A = _bi_terms_to_tri(P, (0, 1))
    B = _bi_terms_to_tri(R, (0, 1))
    n1, d1 = outer(A, B, True, {(0, 0, 1): ONE})
    # right: F(X, F(Y,Z))
    A2 = _bi_terms_to_tri(P, (1, 2))
    B2 = _bi_terms_to_tri(R, (1, 2))
    n2, d2 = outer(A2, B2, False, {(1, 0, 0): ONE})

    diff = _tri_sub(_tri_mul(n1, d2, None), _tri_mul(n2, d1, None))
    if not diff:
        return None
    return min(diff, key=lambda k: (sum(k), k))


# ---------------------------------------------------------------------------
# axiom verification

def verify_fgl(F: FormalGroupLaw, order: int, assoc: str = "auto") -> VerificationReport:
    """Check unit, commutativity and associativity to total degree ``order``.

    ``assoc`` picks the associativity route: "generic" (truncated
    trivariate substitution), "closed" (exact cross-multiplied rational
    identity, requires the closed form) or "auto" (closed when present).
    Failures become report entries, not exceptions.
    """
    Fs = F.series.truncate(order)
    checks = []

    bad = None
    for (i, j), c in sorted(Fs.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        if j == 0 and not (i == 1 and c.is_one()) and not c.is_zero():
            bad = (i, j)
            break
    ok = bad is None and Fs.coeff(1, 0).is_one()
    checks.append(Check("unit F(X,0) = X", order, ok,
                        None if ok else f"first failing coefficient {bad}"))

    bad = None
    for (i, j), c in sorted(Fs.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        if i == 0 and not (j == 1 and c.is_one()) and not c.is_zero():
            bad = (i, j)
            break
    ok = bad is None and Fs.coeff(0, 1).is_one()
    checks.append(Check("unit F(0,Y) = Y", order, ok,
                        None if ok else f"first failing coefficient {bad}"))

    bad = None
    for (i, j), c in sorted(Fs.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        if Fs.coeff(j, i) != c:
            bad = (i, j)
            break
    checks.append(Check("commutativity F(X,Y) = F(Y,X)", order, bad is None,
                        None if bad is None else f"first failing coefficient {bad}"))

    use_closed = (assoc == "closed") or (assoc == "auto" and F.closed is not None)
    if use_closed:
        if F.closed is None:
            raise ValueError("no closed form available for the closed route")
        bad = _assoc_closed(F.closed)
        name = "associativity (exact, closed form)"
    else:
        bad = _assoc_generic(F.series, order)
        name = "associativity (truncated substitution)"
    checks.append(Check(name, order, bad is None,
                        None if bad is None else
                        f"first failing monomial {bad}, total degree {sum(bad)}"))

    return VerificationReport(tuple(checks))


# ---------------------------------------------------------------------------
# the formal inverse

def fgl_inverse(F: FormalGroupLaw, order: int) -> Series:
    """The series i(T) with F(T, i(T)) = 0, solved degree by degree."""
    Fs = F.series.truncate(order) if F.series.order > order else F.series
    if Fs.order < order:
        raise ValueError("law not expanded far enough for the requested order")
    gen = Series.generator("T", order)
    iota = [ZERO] * (order + 1)
    for n in range(1, order + 1):
        partial = Series("T", order, iota)
        h = _bi_eval(Fs, gen, partial, order)
        iota[n] = -h[n]
    return Series("T", order, iota)


def _bi_eval(F: BiSeries, f: Series, g: Series, order: int) -> Series:
    """Evaluate F at univariate series arguments (both with zero constant)."""
    if not (f.constant_term().is_zero() and g.constant_term().is_zero()):
        raise ValueError("substitution needs arguments with zero constant term")
    one = Series.constant(f.var, order, ONE)
    max_i = max((i for (i, _) in F.terms), default=0)
    max_j = max((j for (_, j) in F.terms), default=0)
    fpow = [one]
    for _ in range(min(max_i, order)):
        fpow.append(fpow[-1] * f)
    gpow = [one]
    for _ in range(min(max_j, order)):
        gpow.append(gpow[-1] * g)
    acc = Series.zero(f.var, order)
    for (i, j), c in F.terms.items():
        if i > order or j > order or i + j > order:
            continue
        acc = acc + (fpow[i] * gpow[j]).scale(c)
    return acc


def fgl_eval(F: FormalGroupLaw, f: Series, g: Series, order: int) -> Series:
    """Public wrapper: the law applied to two series arguments."""
    return _bi_eval(F.series, f, g, order)


# ---------------------------------------------------------------------------
# the exponential-character identity

def cartier_check(t_order: int, x_order: int) -> VerificationReport:
    """Adjudicate the exponent in 1 - U(T)^(-c*t) = 1 - e^(-t*log(T)).

    U(T) = (1 - qT)/(1 - T).  Writing det = 1 - q, the logarithm is
    det^{-1} * log U, which forces e^(t*log) = U^(det^{-1} t}); the check
    expands both sides per t-degree for the two exponent candidates
    c = det and c = det^{-1}, under both readings of the left-hand
    exponential (1 - e^{-u} and e^{u} - 1), and reports which combination
    holds coefficientwise.
    """
    U = qmob_series(x_order)
    L = log1(U)
    lg = log_chi(x_order)
    det = mob_det(q_mobius())
    candidates = [("c=1-q", det), ("c=(1-q)^-1", ONE / det)]
    readings = [("1-exp(-u)", True), ("exp(u)-1", False)]
    checks = []
    for rname, minus_reading in readings:
        for cname, c in candidates:
            # compare t^k coefficients for k = 1..t_order
            lhs_pow = Series.constant("T", x_order, ONE)
            rhs_pow = Series.constant("T", x_order, ONE)
            fact = Fraction(1)
            first_fail = None
            for k in range(1, t_order + 1):
                lhs_pow = lhs_pow * lg
                rhs_pow = rhs_pow * L
                fact *= k
                inv_fact = Scalar.from_fraction(Fraction(1, int(fact)))
                sign = Scalar.from_int((-1) ** (k + 1))
                if minus_reading:
                    lhs_k = lhs_pow.scale(sign * inv_fact)
                else:
                    lhs_k = lhs_pow.scale(inv_fact)
                rhs_k = rhs_pow.scale(sign * (c ** k) * inv_fact)
                if lhs_k != rhs_k:
                    diff = lhs_k - rhs_k
                    j = next(i for i, v in enumerate(diff.coeffs)
                             if not v.is_zero())
                    first_fail = (k, j)
                    break
            checks.append(Check(
                f"exponential-character identity [{rname}, {cname}]",
                (t_order, x_order),
                first_fail is None,
                None if first_fail is None else
                f"first failing coefficient t^{first_fail[0]} T^{first_fail[1]}"))
    return VerificationReport(tuple(checks))
