"""Univariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Iterable


class PolynomialError(ArithmeticError):
    pass


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class RatPoly:
    """Polynomial in one variable t, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def t(cls) -> RatPoly:
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> RatPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.const(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _coerce(other) -> RatPoly:
        return other if isinstance(other, RatPoly) else RatPoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RatPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = RatPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        q = [Fraction(0)] * max(len(rem) - dq, 0)
        inv = 1 / other.lead
        for i in range(len(rem) - dq - 1, -1, -1):
            c = rem[i + dq] * inv
            q[i] = c
            if c:
                for j, d in enumerate(other.coeffs):
                    rem[i + j] -= c * d
        return RatPoly(q), RatPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: RatPoly) -> RatPoly:
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> RatPoly:
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> RatPoly:
        if self.is_zero():
            return self
        return RatPoly(c / self.lead for c in self.coeffs)

    def divides(self, other: RatPoly) -> bool:
        return (other % self).is_zero()

    def rational_roots(self) -> list[Fraction]:
        """Distinct rational roots, ascending."""
        if self.is_zero():
            raise PolynomialError("the zero polynomial has every number as a root")
        p = self
        roots = set()
        if not p.coeffs[0]:
            roots.add(Fraction(0))
            k = next(i for i, c in enumerate(p.coeffs) if c)
            p = RatPoly(p.coeffs[k:])
        if p.degree < 1:
            return sorted(roots)
        den = 1
        for c in p.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [int(c * den) for c in p.coeffs]
        a0, an = abs(ints[0]), abs(ints[-1])
        for num in _divisors(a0):
            for d in _divisors(an):
                for s in (1, -1):
                    r = Fraction(s * num, d)
                    if not p(r):
                        roots.add(r)
        return sorted(roots)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            terms.append(s)
        out = terms[0]
        for s in terms[1:]:
            out += s if s.startswith("-") else "+" + s
        return out

    def __repr__(self):
        return f"RatPoly({self})"


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    """Monic greatest common divisor (Euclidean algorithm)."""
    if p.is_zero() and q.is_zero():
        raise PolynomialError("gcd(0, 0) is undefined")
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: RatPoly) -> RatPoly:
    """Monic product of the distinct irreducible factors of ``p``."""
    if p.is_zero():
        raise PolynomialError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return RatPoly.const(1)
    return (p // poly_gcd(p, p.derivative())).monic()


def _sign_at_infinity(p: RatPoly, negative: bool) -> int:
    s = 1 if p.lead > 0 else -1
    return -s if negative and p.degree % 2 else s


def count_real_roots(p: RatPoly) -> int:
    """Number of distinct real roots, by Sturm's theorem in exact arithmetic."""
    if p.is_zero():
        raise PolynomialError("the zero polynomial has every number as a root")
    seq = [p, p.derivative()]
    while seq[-1]:
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        seq.append(r)
    seq = [q for q in seq if q]

    def changes(negative: bool) -> int:
        signs = [_sign_at_infinity(q, negative) for q in seq]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return changes(True) - changes(False)
