"""Exact integer polynomials in one variable q.

Coefficients are arbitrary precision integers stored constant term first
with no trailing zeros, so equal polynomials have equal tuples.

    >>> p = IntPoly((1, 2, 2, 1))
    >>> p * IntPoly.one()
    IntPoly((1, 2, 2, 1))
    >>> exact_div(p, IntPoly((1, 1)))
    IntPoly((1, 1, 1))
    >>> p.eval_at(1)
    6

The main clients are Poincare series of finite standard parabolics: the
generating function of the length statistic, computed from the degree
multiset of the classification rather than by enumerating elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import ClassificationResult, classify, degrees_of_label
from .coxeter import CoxeterSystem


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, coefficient tuple with constant term first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.coeffs
        if c and c[-1] == 0:
            while c and c[-1] == 0:
                c = c[:-1]
            object.__setattr__(self, "coeffs", c)

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly(())

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def constant(c: int) -> "IntPoly":
        return IntPoly((c,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(tuple(out))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(tuple(c * v for v in self.coeffs))

    def eval_at(self, c: int) -> int:
        """Exact evaluation at an integer point, by Horner."""
        acc = 0
        for v in reversed(self.coeffs):
            acc = acc * c + v
        return acc

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, v in enumerate(self.coeffs):
            if not v:
                continue
            if d == 0:
                term = str(v)
            else:
                mono = "q" if d == 1 else f"q^{d}"
                term = mono if abs(v) == 1 else f"{abs(v)}*{mono}"
                if v < 0 and not parts:
                    term = "-" + term
            if parts:
                parts.append(("- " if v < 0 and d > 0 else "+ ") + term)
            else:
                parts.append(term)
        return " ".join(parts)


def geometric(d: int) -> IntPoly:
    """1 + q + ... + q^(d-1)."""
    if d < 0:
        raise ValueError("negative length")
    return IntPoly((1,) * d)


def eval_at(p: IntPoly, c: int) -> int:
    return p.eval_at(c)


def divmod_poly(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Integer-coefficient long division from the top degree down.

    Fails when a leading coefficient does not divide exactly; for monic
    divisors (every Poincare series is monic) this is plain long division.
    """
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    dc = den.coeffs
    dd = len(dc) - 1
    lead = dc[-1]
    quo = [0] * max(len(rem) - dd, 0)
    for top in range(len(rem) - 1, dd - 1, -1):
        v = rem[top]
        if v == 0:
            continue
        if v % lead != 0:
            return IntPoly(tuple(quo)), IntPoly(tuple(rem))
        f = v // lead
        quo[top - dd] = f
        for i, c in enumerate(dc):
            rem[top - dd + i] -= f * c
    return IntPoly(tuple(quo)), IntPoly(tuple(rem))


def exact_div(num: IntPoly, den: IntPoly) -> IntPoly:
    """Quotient num/den in Z[q]; raises ValueError unless it is exact."""
    quo, rem = divmod_poly(num, den)
    if rem:
        raise ValueError("not divisible")
    return quo


def mod_poly(p: IntPoly, modulus: IntPoly) -> IntPoly:
    return divmod_poly(p, modulus)[1]


def poincare_from_classification(result: ClassificationResult) -> IntPoly:
    if not result.finite:
        raise ValueError("Poincare series requires a finite type subset")
    p = IntPoly.one()
    for _, label in result.components:
        for d in degrees_of_label(label):
            p = p * geometric(d)
    return p


def poincare_polynomial(
    sys: CoxeterSystem, subset: tuple[int, ...] | None = None
) -> IntPoly:
    """Length generating function of a finite standard parabolic.

    Computed as the product of 1 + q + ... + q^(d-1) over the reflection
    degrees d of every irreducible component. Evaluating at 1 recovers the
    group order; the polynomial is monic of degree equal to the longest
    element's length.
    """
    return poincare_from_classification(classify(sys, subset))
