"""Products of complex projective spaces: Hodge polynomials, the
hard-Lefschetz representation of sl2 on their cohomology, and the
commutativity checks tying both to the q-integer orientation images.

The catalog is deliberately restricted to finite products of projective
spaces; these are the varieties whose Hodge and Lefschetz data are fully
explicit.  A product carries the diagonal sl2 action, so its
representation is the tensor product of one irreducible string per
factor, decomposed by the Clebsch-Gordan rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalar import Scalar, ZERO, ONE, Q, S, eval_q1
from .fgl import cp_image, log_chi
from .report import Check, VerificationReport

__all__ = [
    "Variety",
    "HodgePoly",
    "SL2Rep",
    "hodge",
    "euler_specialize",
    "yz_to_q",
    "rep_of_variety",
    "cg_tensor",
    "character",
    "decompose_character",
    "qdim_normalized",
    "lambda_rep",
    "diagram_check",
    "load_catalog",
]


# ---------------------------------------------------------------------------
# varieties and Hodge polynomials

@dataclass(frozen=True)
class Variety:
    """A product of projective spaces, one entry per factor dimension."""

    factors: tuple

    def __init__(self, factors=()):
        factors = tuple(int(n) for n in factors)
        if any(n < 0 for n in factors):
            raise ValueError("factor dimensions must be >= 0")
        object.__setattr__(self, "factors", factors)

    @property
    def dimension(self) -> int:
        return sum(self.factors)

    def __str__(self):
        if not self.factors:
            return "pt"
        return " x ".join(f"CP{n}" for n in self.factors)


class HodgePoly:
    """Bivariate integer polynomial of Hodge numbers, coefficient of
    Y^i Z^j the (i, j) Hodge number."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            if c:
                clean[key] = int(c)
        self.terms = clean

    def coeff(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def is_symmetric(self) -> bool:
        return all(self.coeff(j, i) == c for (i, j), c in self.terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, HodgePoly):
            return NotImplemented
        return self.terms == other.terms

    def __mul__(self, other: "HodgePoly") -> "HodgePoly":
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return HodgePoly(out)

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        body = " + ".join(f"{c}*Y^{i}*Z^{j}" for (i, j), c in items) or "0"
        return f"HodgePoly({body})"


def hodge(v: Variety) -> HodgePoly:
    """Hodge polynomial: product over factors of 1 + YZ + ... + (YZ)^n."""
    acc = HodgePoly({(0, 0): 1})
    for n in v.factors:
        acc = acc * HodgePoly({(k, k): 1 for k in range(n + 1)})
    return acc


def euler_specialize(h: HodgePoly, dim: int):
    """Euler characteristic from the Hodge numbers, with sanity flags.

    The alternating sum over (-1)^(i+j) h^(i,j) is the convention forced
    by chi(CP^1) = 2; a literal substitution Y, Z -> iY instead weights
    the diagonal by (-1)^k and does not produce chi * Y^dim, so it is not
    used (only its reality constraint is kept).  Returns (chi, ok) where
    ok certifies the checks that do hold on this catalog: no odd-total-
    degree terms (the substitution stays real), diagonal support, and top
    degree equal to twice the dimension.
    """
    chi = sum(((-1) ** (i + j)) * c for (i, j), c in h.terms.items())
    no_odd = all((i + j) % 2 == 0 for (i, j) in h.terms)
    diagonal = all(i == j for (i, j) in h.terms)
    top = max((i + j for (i, j) in h.terms), default=0)
    ok = no_odd and diagonal and top == 2 * dim
    return chi, ok


def yz_to_q(h: HodgePoly) -> Scalar:
    """Substitute YZ -> q on a diagonal Hodge polynomial."""
    for (i, j) in h.terms:
        if i != j:
            raise ValueError(f"off-diagonal Hodge number at {(i, j)}")
    return Scalar.from_q_coeffs({i: c for (i, _), c in h.terms.items()})


# ---------------------------------------------------------------------------
# the sl2 representation ring

class SL2Rep:
    """Finitely supported map highest weight -> multiplicity."""

    __slots__ = ("mult",)

    def __init__(self, mult=None):
        clean = {}
        for n, c in (mult or {}).items():
            if c:
                if n < 0:
                    raise ValueError("highest weights must be >= 0")
                clean[int(n)] = int(c)
        self.mult = clean

    @staticmethod
    def irrep(n: int) -> "SL2Rep":
        return SL2Rep({n: 1})

    @staticmethod
    def zero() -> "SL2Rep":
        return SL2Rep()

    def is_effective(self) -> bool:
        return all(c > 0 for c in self.mult.values())

    def is_zero(self) -> bool:
        return not self.mult

    def top_weight(self) -> int:
        if not self.mult:
            raise ValueError("the zero representation has no top weight")
        return max(self.mult)

    def dim(self) -> int:
        return sum(c * (n + 1) for n, c in self.mult.items())

    def __add__(self, other: "SL2Rep") -> "SL2Rep":
        out = dict(self.mult)
        for n, c in other.mult.items():
            out[n] = out.get(n, 0) + c
        return SL2Rep(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SL2Rep):
            return NotImplemented
        return self.mult == other.mult

    def __repr__(self):
        items = sorted(self.mult.items())
        body = " + ".join(f"{c}*V{n}" if c != 1 else f"V{n}"
                          for n, c in items) or "0"
        return f"SL2Rep({body})"


def cg_tensor(r1: SL2Rep, r2: SL2Rep) -> SL2Rep:
    """Clebsch-Gordan product, extended bilinearly."""
    out: dict = {}
    for m, c1 in r1.mult.items():
        for n, c2 in r2.mult.items():
            for k in range(abs(m - n), m + n + 1, 2):
                out[k] = out.get(k, 0) + c1 * c2
    return SL2Rep(out)


def character(r: SL2Rep) -> Scalar:
    """Sum of weight monomials: V_n contributes s^n + s^(n-2) + ... + s^-n."""
    acc = ZERO
    for n, c in r.mult.items():
        string = ZERO
        for j in range(n + 1):
            string = string + Scalar.s_power(n - 2 * j)
        acc = acc + Scalar.from_int(c) * string
    return acc


def decompose_character(p: Scalar) -> SL2Rep:
    """Invert ``character``: peel off irreducible strings from the top.

    Works for any symmetric Laurent polynomial in s with integer
    coefficients that is a virtual character; raises otherwise.
    """
    if p.den != (1,) or p.num[1] != 1:
        raise ValueError("not a character: needs integer Laurent coefficients")
    val, _, coeffs = p.num
    work = {val + i: c for i, c in enumerate(coeffs) if c}
    out = {}
    while work:
        w = max(work)
        if w < 0 or work.get(-w, 0) != work[w]:
            raise ValueError("not symmetric under s -> 1/s")
        c = work[w]
        out[w] = c
        for j in range(w + 1):
            e = w - 2 * j
            nv = work.get(e, 0) - c
            if nv:
                work[e] = nv
            else:
                work.pop(e, None)
    return SL2Rep(out)


def qdim_normalized(r: SL2Rep) -> Scalar:
    """Top-weight normalized character: s^w * character, landing in Z[q].

    For a single string V_n this gives 1 + q + ... + q^n; the top-weight
    normalization is the unique shift making the projective-space diagram
    commute on products.
    """
    if r.is_zero() or not r.is_effective():
        raise ValueError("normalization needs an effective, nonzero element")
    w = r.top_weight()
    return Scalar.s_power(w) * character(r)


def lambda_rep(r: SL2Rep, k: int) -> SL2Rep:
    """k-th exterior power via elementary symmetric functions of weights."""
    if not r.is_effective() and not r.is_zero():
        raise ValueError("exterior powers need an effective element")
    if k < 0:
        raise ValueError("exterior power index must be >= 0")
    # multiset of weights
    weights = []
    for n, c in sorted(r.mult.items()):
        for j in range(n + 1):
            weights.extend([n - 2 * j] * c)
    e = [ONE] + [ZERO] * k
    for w in weights:
        x = Scalar.s_power(w)
        for j in range(min(k, len(weights)), 0, -1):
            e[j] = e[j] + x * e[j - 1]
    return decompose_character(e[k])


def rep_of_variety(v: Variety) -> SL2Rep:
    """Hard-Lefschetz representation: tensor product of one string per factor."""
    acc = SL2Rep.irrep(0)
    for n in v.factors:
        acc = cg_tensor(acc, SL2Rep.irrep(n))
    return acc


# ---------------------------------------------------------------------------
# the commutative-diagram check

def diagram_check(v: Variety) -> VerificationReport:
    """Three independent routes to the same element of Z[q].

    (1) Hodge polynomial with YZ -> q, (2) top-weight normalized
    character of the Lefschetz representation, (3) product of the
    orientation images of the factors read off the group-law logarithm.
    """
    via_hodge = yz_to_q(hodge(v))
    via_rep = qdim_normalized(rep_of_variety(v))
    via_log = ONE
    for n in v.factors:
        via_log = via_log * cp_image(n)
    checks = (
        Check(f"{v}: Hodge route equals representation route", None,
              via_hodge == via_rep,
              None if via_hodge == via_rep else
              f"{via_hodge} != {via_rep}"),
        Check(f"{v}: representation route equals orientation route", None,
              via_rep == via_log,
              None if via_rep == via_log else f"{via_rep} != {via_log}"),
        Check(f"{v}: orientation route equals Hodge route", None,
              via_log == via_hodge,
              None if via_log == via_hodge else f"{via_log} != {via_hodge}"),
    )
    return VerificationReport(checks)


def load_catalog(path) -> list:
    """Parse a line-oriented catalog: ``name n1 n2 ... nr`` per line.

    Blank lines and lines starting with ``#`` are skipped.
    """
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            name = fields[0]
            try:
                dims = [int(x) for x in fields[1:]]
            except ValueError as exc:
                raise ValueError(
                    f"{path}:{lineno}: factor dimensions must be integers") from exc
            out.append((name, Variety(dims)))
    return out
