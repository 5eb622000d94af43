"""Exact coefficient arithmetic for q-series computations.

The universal scalar domain is the field Q(s) of rational functions in a
formal square root s of q (so q = s**2).  Working in one field keeps every
quantity exact; *where* an element lives (Z[q], Z[q,q^-1], Q[q], the
cyclotomic localization, ...) is decided by membership predicates instead
of a tower of ring types.

A Scalar is a reduced fraction num/den where

* num is a Laurent polynomial in s with rational coefficients, stored
  densely as ``(valuation, denominator, integer coefficient vector)``,
  i.e. ``s**val * (c0 + c1*s + ...) / d``;
* den is a primitive integer polynomial in s with nonzero constant term
  and positive leading coefficient (any power of s and any rational
  factor of the denominator are absorbed into num).

gcd(num, den) is trivial, so the representation is unique and structural
equality coincides with mathematical equality.  Scalars are immutable and
all operations are pure; they can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "Scalar",
    "RingMembership",
    "ZERO",
    "ONE",
    "Q",
    "S",
    "cyclotomic",
    "membership",
    "is_cromulent",
    "eval_q0",
    "eval_q1",
]


# ---------------------------------------------------------------------------
# Laurent polynomials over Q as plain tuples: (val, den, coeffs)
# meaning s**val * (coeffs[0] + coeffs[1]*s + ...) / den with integer coeffs,
# den >= 1, gcd(content(coeffs), den) == 1, and coeffs[0] != 0 != coeffs[-1]
# unless the polynomial is zero, which is stored as (0, 1, ()).

_LP_ZERO = (0, 1, ())
_LP_ONE = (0, 1, (1,))


def _content(coeffs) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _lp_make(val: int, den: int, coeffs) -> tuple:
    """Normalize a raw coefficient list into canonical LP form."""
    lo = 0
    hi = len(coeffs)
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    if lo == hi:
        return _LP_ZERO
    coeffs = coeffs[lo:hi]
    val += lo
    g = _content(coeffs)
    g = gcd(g, den)
    if g > 1:
        coeffs = [c // g for c in coeffs]
        den //= g
    return (val, den, tuple(coeffs))


def _lp_is_zero(a) -> bool:
    return not a[2]


def _lp_add(a, b):
    if _lp_is_zero(a):
        return b
    if _lp_is_zero(b):
        return a
    av, ad, ac = a
    bv, bd, bc = b
    g = gcd(ad, bd)
    ma = bd // g
    mb = ad // g
    den = ad * ma
    val = min(av, bv)
    out = [0] * (max(av + len(ac), bv + len(bc)) - val)
    for i, c in enumerate(ac):
        out[av - val + i] = c * ma
    for i, c in enumerate(bc):
        out[bv - val + i] += c * mb
    return _lp_make(val, den, out)


def _lp_neg(a):
    av, ad, ac = a
    return (av, ad, tuple(-c for c in ac))


def _lp_mul(a, b):
    if _lp_is_zero(a) or _lp_is_zero(b):
        return _LP_ZERO
    av, ad, ac = a
    bv, bd, bc = b
    out = [0] * (len(ac) + len(bc) - 1)
    for i, c in enumerate(ac):
        if c:
            for j, d in enumerate(bc):
                out[i + j] += c * d
    return _lp_make(av + bv, ad * bd, out)


def _lp_mul_int_poly(a, p):
    """Multiply an LP by an integer polynomial given as a bare tuple."""
    if p == (1,):
        return a
    return _lp_mul(a, (0, 1, p))


def _lp_scale(a, num: int, den: int):
    if num == 0:
        return _LP_ZERO
    av, ad, ac = a
    return _lp_make(av, ad * den, [c * num for c in ac])


def _lp_stretch(a, k: int):
    """Substitute s -> s**k (used for Adams operations via q -> q**k)."""
    av, ad, ac = a
    if not ac or k == 1:
        return a
    out = [0] * ((len(ac) - 1) * k + 1)
    for i, c in enumerate(ac):
        out[i * k] = c
    return (av * k, ad, tuple(out))


def _lp_even(a) -> bool:
    av, _, ac = a
    return all(c == 0 or (av + i) % 2 == 0 for i, c in enumerate(ac))


def _lp_eval(a, x: Fraction) -> Fraction:
    av, ad, ac = a
    acc = Fraction(0)
    for c in reversed(ac):
        acc = acc * x + c
    if av:
        if x == 0:
            raise ZeroDivisionError("evaluation at s = 0 with negative valuation")
        acc *= x ** av
    return acc / ad


# ---------------------------------------------------------------------------
# integer polynomials as bare tuples (implicit valuation 0), used for the
# denominator and for gcd extraction

def _ip_mul(a, b):
    if a == (1,):
        return b
    if b == (1,):
        return a
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return tuple(out)


def _ip_primitive(a):
    """Strip content and sign so the leading coefficient is positive."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    if not a:
        return ()
    c = _content(a)
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a)


def _ip_prem_reduce(a, b):
    """One full pseudo-remainder pass of a modulo b (deg b >= 1)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db:
        k = len(r) - 1 - db
        lr = r[-1]
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[k + i] -= lr * bc
        while r and r[-1] == 0:
            r.pop()
        if not r:
            break
    return r


def _ip_gcd(a, b):
    """Primitive gcd of two integer polynomials (primitive PRS)."""
    a = _ip_primitive(a)
    b = _ip_primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _ip_prem_reduce(a, b)
        if not r:
            return b
        a, b = b, _ip_primitive(r)
    return (1,)


def _ip_divexact(a, b):
    """Exact quotient of integer polynomials; remainder must vanish."""
    if b == (1,):
        return tuple(a)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                r[k + i] -= c * bc
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return tuple(q)


def _ip_divides(a, b):
    """Return a//b if b divides a exactly, else None."""
    if len(a) < len(b):
        return None
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db]
        if c % lb:
            return None
        c //= lb
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                r[k + i] -= c * bc
    if any(r):
        return None
    return tuple(q)


# ---------------------------------------------------------------------------
# Scalar


class Scalar:
    """An exact rational function in s (q = s**2), kept in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        # private: callers go through the constructors / arithmetic below
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "Scalar":
        if n == 0:
            return ZERO
        return Scalar((0, 1, (n,)), (1,))

    @staticmethod
    def from_fraction(x) -> "Scalar":
        x = Fraction(x)
        if x == 0:
            return ZERO
        return Scalar((0, x.denominator, (x.numerator,)), (1,))

    @staticmethod
    def s_power(k: int) -> "Scalar":
        return Scalar((k, 1, (1,)), (1,))

    @staticmethod
    def q_power(k: int) -> "Scalar":
        return Scalar((2 * k, 1, (1,)), (1,))

    @staticmethod
    def from_q_coeffs(coeffs) -> "Scalar":
        """Polynomial in q from a mapping degree -> rational coefficient."""
        if isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        acc = ZERO
        for k, c in items:
            c = Fraction(c)
            if c:
                acc = acc + Scalar.from_fraction(c) * Scalar.q_power(k)
        return acc

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num[2]

    def is_one(self) -> bool:
        return self.num == _LP_ONE and self.den == (1,)

    def lives_in_q(self) -> bool:
        """True when every s-exponent of num and den is even."""
        if not _lp_even(self.num):
            return False
        return all(c == 0 for c in self.den[1::2])

    def is_constant(self) -> bool:
        return self.den == (1,) and (self.is_zero() or
                                     (self.num[0] == 0 and len(self.num[2]) == 1))

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("scalar is not a rational constant")
        if self.is_zero():
            return Fraction(0)
        return Fraction(self.num[2][0], self.num[1])

    def as_int(self) -> int:
        x = self.as_fraction()
        if x.denominator != 1:
            raise ValueError("scalar is not an integer")
        return x.numerator

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if self.den == other.den:
            num = _lp_add(self.num, other.num)
            if self.den == (1,):
                return Scalar(num, (1,)) if num[2] else ZERO
            return _reduce(num, self.den)
        num = _lp_add(_lp_mul_int_poly(self.num, other.den),
                      _lp_mul_int_poly(other.num, self.den))
        return _reduce(num, _ip_mul(self.den, other.den))

    def __neg__(self) -> "Scalar":
        if self.is_zero():
            return self
        return Scalar(_lp_neg(self.num), self.den)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        num = _lp_mul(self.num, other.num)
        if not num[2]:
            return ZERO
        if self.den == (1,) and other.den == (1,):
            return Scalar(num, (1,))
        return _reduce(num, _ip_mul(self.den, other.den))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if other.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        num = _lp_mul(self.num, (0, 1, other.den) if other.den != (1,) else _LP_ONE)
        den = _lp_mul(other.num, (0, 1, self.den) if self.den != (1,) else _LP_ONE)
        return _make_scalar(num, den)

    def inverse(self) -> "Scalar":
        return ONE / self

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        acc = ONE
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- structure -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return canonical_str(self)

    # -- specialization ------------------------------------------------------

    def adams_substitute(self, k: int) -> "Scalar":
        """Substitute q -> q**k (equivalently s -> s**k on even exponents)."""
        if not self.lives_in_q():
            raise ValueError("Adams substitution requires an element living in q")
        if k < 1:
            raise ValueError("Adams index must be a positive integer")
        num = _lp_stretch(self.num, k)
        dco = [0] * ((len(self.den) - 1) * k + 1)
        for i, c in enumerate(self.den):
            dco[i * k] = c
        return _reduce(num, tuple(dco))

    def eval_s(self, x) -> Fraction:
        """Exact evaluation at a rational value of s."""
        x = Fraction(x)
        d = _lp_eval((0, 1, self.den), x)
        if d == 0:
            raise ZeroDivisionError(f"pole at s = {x}")
        return _lp_eval(self.num, x) / d

    def q_valuation(self) -> int:
        """Order of vanishing at q = 0 (negative for a pole)."""
        if self.is_zero():
            raise ValueError("zero scalar has no valuation")
        if not self.lives_in_q():
            raise ValueError("element does not live in q")
        return self.num[0] // 2

    def q_expansion(self, order: int):
        """Power-series coefficients in q at q = 0, degrees 0..order.

        Requires the element to live in q and to have no pole at q = 0.
        Returns a list of Fractions.
        """
        if not self.lives_in_q():
            raise ValueError("element does not live in q")
        if self.num[0] < 0:
            raise ZeroDivisionError("pole at q = 0")
        nval, nden, nco = self.num
        n = [Fraction(0)] * (order + 1)
        for i, c in enumerate(nco):
            e = (nval + i) // 2
            if c and e <= order:
                n[e] = Fraction(c, nden)
        d = [Fraction(0)] * (order + 1)
        for i, c in enumerate(self.den):
            if c and i // 2 <= order:
                d[i // 2] = Fraction(c)
        out = [Fraction(0)] * (order + 1)
        d0 = d[0]
        for k in range(order + 1):
            acc = n[k]
            for i in range(1, k + 1):
                if d[i]:
                    acc -= d[i] * out[k - i]
            out[k] = acc / d0
        return out

    def q_truncate(self, order: int) -> "Scalar":
        """Drop q-degrees above ``order``; only for polynomials in q."""
        if self.den != (1,) or not self.lives_in_q():
            raise ValueError("q_truncate needs a Laurent polynomial in q")
        nval, nden, nco = self.num
        kept = [c if (nval + i) <= 2 * order else 0 for i, c in enumerate(nco)]
        return Scalar(_lp_make(nval, nden, kept), (1,))

    def q_coefficient(self, k: int) -> Fraction:
        """Coefficient of q**k; only for Laurent polynomials in q."""
        if self.den != (1,) or not self.lives_in_q():
            raise ValueError("q_coefficient needs a Laurent polynomial in q")
        nval, nden, nco = self.num
        i = 2 * k - nval
        if i < 0 or i >= len(nco):
            return Fraction(0)
        return Fraction(nco[i], nden)


def _reduce(num, den) -> Scalar:
    """Build a Scalar from an LP numerator and a primitive-ish denominator."""
    if not num[2]:
        return ZERO
    if den != (1,):
        g = _ip_gcd(num[2], den)
        if len(g) > 1:
            num = _lp_make(num[0], num[1], list(_ip_divexact(num[2], g)))
            den = _ip_divexact(den, g)
    return Scalar(num, den)


def _make_scalar(num, den) -> Scalar:
    """Fully canonicalize num/den where both are Laurent polynomials."""
    if _lp_is_zero(den):
        raise ZeroDivisionError("scalar division by zero")
    if _lp_is_zero(num):
        return ZERO
    dval, dden, dco = den
    c = _content(dco)
    if dco[-1] < 0:
        c = -c
    prim = tuple(x // c for x in dco)
    nval, nden, nco = num
    if c < 0:
        nco = [-x for x in nco]
        c = -c
    num2 = _lp_make(nval - dval, nden * c, [x * dden for x in nco])
    return _reduce(num2, prim)


ZERO = Scalar(_LP_ZERO, (1,))
ONE = Scalar(_LP_ONE, (1,))
Q = Scalar.q_power(1)
S = Scalar.s_power(1)


# ---------------------------------------------------------------------------
# printing

def _fmt_term(c: int, e: int, lead: bool) -> str:
    """One term c*s**e, printed in q when e is even, in s when odd."""
    if e % 2 == 0:
        var, k = "q", e // 2
    else:
        var, k = "s", e
    if k == 0:
        body = str(abs(c))
    else:
        v = var if k == 1 else f"{var}^{k}"
        if abs(c) == 1:
            body = v
        else:
            body = f"{abs(c)}*{v}"
    if not lead:
        return body
    if c >= 0:
        return body
    # a leading negative power would parse as (-q)^k, so spell the -1 out
    if abs(c) == 1 and k not in (0, 1):
        return f"-1*{var}^{k}"
    return "-" + body


def _fmt_int_laurent(val: int, coeffs) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        e = val + i
        if not parts:
            parts.append(_fmt_term(c, e, lead=True))
        else:
            parts.append(" + " if c > 0 else " - ")
            parts.append(_fmt_term(c, e, lead=False))
    return "".join(parts) if parts else "0"


def canonical_str(a: Scalar) -> str:
    """Canonical string form, ascending exponents, q for even powers of s."""
    if a.is_zero():
        return "0"
    nval, nden, nco = a.num
    num_s = _fmt_int_laurent(nval, nco)
    den_poly = a.den if nden == 1 else tuple(nden * c for c in a.den)
    if den_poly == (1,):
        return num_s
    den_s = _fmt_int_laurent(0, den_poly)
    nterms = sum(1 for c in nco if c)
    dterms = sum(1 for c in den_poly if c)
    if nterms > 1:
        num_s = f"({num_s})"
    if dterms > 1:
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"


# ---------------------------------------------------------------------------
# cyclotomic polynomials and the cromulent localization

_cyclo_cache: dict = {}


def _cyclotomic_q_vec(d: int):
    """Phi_d as an integer coefficient tuple in q."""
    if d in _cyclo_cache:
        return _cyclo_cache[d]
    if d == 1:
        out = (-1, 1)
    else:
        num = [-1] + [0] * (d - 1) + [1]          # q**d - 1
        rem = tuple(num)
        for e in range(1, d):
            if d % e == 0:
                rem = _ip_divexact(rem, _cyclotomic_q_vec(e))
        out = rem
    _cyclo_cache[d] = out
    return out


def cyclotomic(d: int) -> Scalar:
    """The d-th cyclotomic polynomial in q, by the product recursion."""
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    vec = _cyclotomic_q_vec(d)
    out = [0] * (2 * (len(vec) - 1) + 1)
    for i, c in enumerate(vec):
        out[2 * i] = c
    return Scalar(_lp_make(0, 1, out), (1,))


def _totients_up_to(n: int):
    phi = list(range(n + 1))
    for p in range(2, n + 1):
        if phi[p] == p:                 # p prime
            for m in range(p, n + 1, p):
                phi[m] -= phi[m] // p
    return phi


def _den_cyclotomic_factors(den_q):
    """Factor an integer q-polynomial as a product of Phi_d with d >= 2.

    Returns the multiset of indices d, or None when some factor is not a
    cyclotomic polynomial of index >= 2.  A candidate index d can only
    divide when phi(d) <= deg, and phi(d) >= sqrt(d/2) bounds the search.
    """
    rem = den_q
    if rem == (1,):
        return []
    deg = len(rem) - 1
    if rem[-1] != 1 or rem[0] != 1:
        # products of Phi_d, d >= 2 are monic with constant term 1
        return None
    limit = 2 * deg * deg + 2
    phi = _totients_up_to(limit)
    found = []
    for d in range(2, limit + 1):
        if phi[d] > len(rem) - 1:
            continue
        f = _cyclotomic_q_vec(d)
        while True:
            quo = _ip_divides(rem, f)
            if quo is None:
                break
            rem = quo
            found.append(d)
            if rem == (1,):
                return found
    return found if rem == (1,) else None


def _den_as_q_vec(a: Scalar):
    return tuple(a.den[0::2])


def is_cromulent(a: Scalar) -> bool:
    """Membership in the localization of Z[q,q^-1] inverting every [k]_q.

    True iff a = p(q) / prod Phi_{d_i}(q) with p an integer Laurent
    polynomial in q and every d_i >= 2 (inverting the q-integers inverts
    exactly the cyclotomic polynomials of index >= 2 and nothing else).
    Integrality of the numerator is part of the test.
    """
    if not a.lives_in_q():
        raise ValueError("cromulence is only defined for elements living in q")
    if a.is_zero():
        return True
    if a.num[1] != 1:
        return False
    return _den_cyclotomic_factors(_den_as_q_vec(a)) is not None


@dataclass(frozen=True)
class RingMembership:
    """Flags for the subring tower Z[q] c Z[q,q^-1] c Z[q]_cr c Q(s)."""

    in_Z_q: bool
    in_Z_q_laurent: bool
    in_Q_q: bool
    in_cromulent: bool
    in_Q_s: bool = True


def membership(a: Scalar) -> RingMembership:
    lives = a.lives_in_q()
    den_one = a.den == (1,)
    integral = a.num[1] == 1
    poly = a.is_zero() or a.num[0] >= 0
    in_Q_q = lives and den_one and poly
    in_Z_q_laurent = lives and den_one and integral
    in_Z_q = in_Q_q and integral
    in_crom = lives and integral and (
        den_one or _den_cyclotomic_factors(_den_as_q_vec(a)) is not None)
    return RingMembership(in_Z_q=in_Z_q, in_Z_q_laurent=in_Z_q_laurent,
                          in_Q_q=in_Q_q, in_cromulent=in_crom)


# ---------------------------------------------------------------------------
# evaluation maps q -> 0 and q -> 1

def eval_q0(a: Scalar) -> Fraction:
    """Exact evaluation at q = 0; errors on a pole (Laurent numerator)."""
    if not a.lives_in_q():
        raise ValueError("evaluation at q = 0 requires an element living in q")
    if a.is_zero():
        return Fraction(0)
    if a.num[0] < 0:
        raise ZeroDivisionError("pole at q = 0")
    nval, nden, nco = a.num
    n0 = Fraction(nco[0], nden) if nval == 0 else Fraction(0)
    return n0 / a.den[0]


def eval_q1(a: Scalar) -> Fraction:
    """Exact evaluation at q = 1; errors on a pole (e.g. 1/(1-q))."""
    if not a.lives_in_q():
        raise ValueError("evaluation at q = 1 requires an element living in q")
    d = sum(a.den)
    if d == 0:
        raise ZeroDivisionError("pole at q = 1")
    return Fraction(sum(a.num[2]), a.num[1]) / d
