"""Verification reports: named exact checks with explicit orders."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """Outcome of one exact identity check.

    ``order`` records the truncation the check was run at (an int, a tuple
    of orders, or None for order-free identities); ``detail`` holds the
    first failing coefficient when the check fails.
    """

    name: str
    order: object
    passed: bool
    detail: str | None = None

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        where = "" if self.order is None else f" (order {self.order})"
        extra = "" if self.detail is None else f": {self.detail}"
        return f"{status} {self.name}{where}{extra}"


@dataclass(frozen=True)
class VerificationReport:
    """A bundle of checks; never claims an order beyond what was computed."""

    checks: tuple = field(default_factory=tuple)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


def check_equal(name: str, order, left, right, detail_on_fail: str | None = None) -> Check:
    ok = left == right
    detail = None
    if not ok:
        detail = detail_on_fail or f"{left!r} != {right!r}"
    return Check(name=name, order=order, passed=ok, detail=detail)
