"""Truncated formal power series over Q and square-root smoothness analysis.

A :class:`Jet` stores exact rational coefficients up to a truncation order.
A jet flagged ``exact`` represents a genuine polynomial: every coefficient
beyond the stored window is known to be zero, which is what turns the
valuation/parity answers below into certificates rather than best-effort
guesses.

The smoothness questions answered here are all of the shape "is
sqrt(g(x^2)) (optionally divided by x^m) a smooth function near 0 with
vanishing odd derivatives".  Writing g = c_a s^a + ... the factorization

    sqrt(g(x^2)) = |x|^a * sqrt(c_a) * E(x^2),   E(0) = 1,

reduces every such question to the valuation a, its parity relative to m,
and the sign of c_a.  No square root is ever expanded numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exactmath import INFINITE

DEFAULT_ORDER = 16

Valuation = Union[int, float, None]  # int, INFINITE, or None for "unknown"


@dataclass(frozen=True)
class Jet:
    """Truncated power series with rational coefficients, degree 0 upward."""

    coeffs: tuple[Fraction, ...]
    exact: bool = True

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("Jet needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def poly(cls, coeffs: Sequence, order: int = DEFAULT_ORDER) -> "Jet":
        """Jet of a polynomial; truncates (and flags it) past `order`."""
        cs = [Fraction(c) for c in coeffs]
        exact = all(c == 0 for c in cs[order + 1:])
        cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(tuple(cs), exact)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "Jet":
        return cls.poly([], order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "Jet":
        return cls.poly([0, 1], order)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if i <= self.order else Fraction(0)

    def degree(self) -> int:
        """Largest stored degree with nonzero coefficient (-1 for zero)."""
        for i in range(self.order, -1, -1):
            if self.coeffs[i] != 0:
                return i
        return -1

    def is_zero(self) -> bool:
        return self.exact and self.degree() == -1

    def truncate(self, order: int) -> "Jet":
        if order >= self.order:
            cs = self.coeffs + (Fraction(0),) * (order - self.order)
            return Jet(cs, self.exact)
        lost = any(c != 0 for c in self.coeffs[order + 1:])
        return Jet(self.coeffs[: order + 1], self.exact and not lost)

    def __add__(self, other: "Jet") -> "Jet":
        n = min(self.order, other.order)
        a, b = self.truncate(n), other.truncate(n)
        return Jet(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.exact and b.exact)

    def __sub__(self, other: "Jet") -> "Jet":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "Jet":
        c = Fraction(c)
        return Jet(tuple(c * x for x in self.coeffs), self.exact)

    def __mul__(self, other: "Jet") -> "Jet":
        n = min(self.order, other.order)
        a, b = self.truncate(n), other.truncate(n)
        out = [Fraction(0)] * (n + 1)
        for i, ca in enumerate(a.coeffs):
            if ca == 0:
                continue
            for j in range(0, n - i + 1):
                out[i + j] += ca * b.coeffs[j]
        exact = a.exact and b.exact
        if exact and a.degree() >= 0 and b.degree() >= 0 and a.degree() + b.degree() > n:
            exact = False  # true product overflows the window
        return Jet(tuple(out), exact)

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def eval_exact(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def deriv(self) -> "Jet":
        if self.order == 0:
            return Jet((Fraction(0),), self.exact)
        cs = tuple(i * self.coeffs[i] for i in range(1, self.order + 1))
        return Jet(cs, self.exact)


def jet_arith(a: Jet, b: Jet, op: str) -> Jet:
    """Dispatch form of +, -, * for the serialization layer."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def compose(f: Jet, g: Jet) -> Jet:
    """Jet of f(g(x)); requires g(0) = 0."""
    if g.coeff(0) != 0:
        raise ValueError("compose: inner jet must vanish at 0")
    n = min(f.order, g.order)
    acc = Jet.zero(n)
    gn = g.truncate(n)
    for c in reversed(f.coeffs):
        acc = acc * gn + Jet.poly([c], n)
    if not f.exact:
        acc = Jet(acc.coeffs, False)
    return acc


def compose_square(g: Jet) -> Jet:
    """Jet of x -> g(x^2), truncation order doubled; odd coefficients zero."""
    out = [Fraction(0)] * (2 * g.order + 1)
    for i, c in enumerate(g.coeffs):
        out[2 * i] = c
    return Jet(tuple(out), g.exact)


def reversion(f: Jet) -> Jet:
    """Compositional inverse h with f(h(x)) = x up to the truncation order.

    Requires f(0) = 0 and f'(0) != 0.  The result is exact only when f is
    exactly linear; otherwise the inverse is a genuine infinite series.
    """
    if f.coeff(0) != 0:
        raise ValueError("reversion: f(0) must be 0")
    c1 = f.coeff(1)
    if c1 == 0:
        raise ValueError("reversion: f'(0) must be nonzero")
    n = f.order
    h = [Fraction(0), 1 / c1] + [Fraction(0)] * (n - 1)
    for m in range(2, n + 1):
        # coefficient of x^m in f(h(x)) with h_m still unset is e_m;
        # the full coefficient is e_m + c1*h_m and must vanish.
        e = _compose_coeff(f.coeffs, h, m)
        h[m] = -e / c1
    exact = f.exact and f.degree() <= 1
    return Jet(tuple(h), exact)


def _compose_coeff(f: Sequence[Fraction], h: Sequence[Fraction], m: int) -> Fraction:
    """Coefficient of x^m in f(h(x)), truncated at order m."""
    acc = [Fraction(0)] * (m + 1)
    hm = list(h[: m + 1])
    for c in reversed(f[: m + 1]):
        new = [Fraction(0)] * (m + 1)
        for i, a in enumerate(acc):
            if a == 0:
                continue
            for j in range(0, m - i + 1):
                new[i + j] += a * hm[j]
        new[0] += c
        acc = new
    return acc[m]


def valuation(g: Jet) -> Valuation:
    """Smallest degree with nonzero coefficient.

    INFINITE for the exact zero polynomial; None when a truncated jet is
    zero through its whole window (the answer is genuinely unknown).
    """
    for i, c in enumerate(g.coeffs):
        if c != 0:
            return i
    return INFINITE if g.exact else None


@dataclass(frozen=True)
class SqrtClass:
    """Classification of sqrt(g(x^2)) near x = 0."""

    tag: str  # identically_zero | smooth_even | odd_one_sided | negative_leading | unknown
    valuation: Optional[int] = None
    leading: Optional[Fraction] = None


def sqrt_factor_class(g: Jet) -> SqrtClass:
    """Decide smoothness of sqrt(g(x^2)) across x = 0 from valuation data.

    With a = valuation(g) and c_a its leading coefficient,
    sqrt(g(x^2)) = |x|^a sqrt(c_a) E(x^2); the absolute value drops out
    exactly when a is even.
    """
    a = valuation(g)
    if a is None:
        return SqrtClass("unknown")
    if a is INFINITE:
        return SqrtClass("identically_zero")
    c = g.coeffs[a]
    if c < 0:
        return SqrtClass("negative_leading", a, c)
    if a % 2 == 0:
        return SqrtClass("smooth_even", a, c)
    return SqrtClass("odd_one_sided", a, c)


@dataclass(frozen=True)
class DividedSmoothness:
    status: str  # holds | fails | unknown
    reason: Optional[str] = None  # parity | negative_power | negative_leading

    def holds(self) -> bool:
        return self.status == "holds"


def divided_smoothness(g: Jet, m: int) -> DividedSmoothness:
    """Smoothness of sqrt(g(x^2))/x^m on x >= 0 with vanishing odd derivatives.

    Holds iff g is identically zero (the lifted coordinate is then
    identically zero), or the valuation a satisfies a - m >= 0, a - m even,
    and the leading coefficient is positive.
    """
    a = valuation(g)
    if a is None:
        return DividedSmoothness("unknown")
    if a is INFINITE:
        return DividedSmoothness("holds")
    c = g.coeffs[a]
    if c < 0:
        return DividedSmoothness("fails", "negative_leading")
    if a - m < 0:
        return DividedSmoothness("fails", "negative_power")
    if (a - m) % 2 != 0:
        return DividedSmoothness("fails", "parity")
    return DividedSmoothness("holds")
