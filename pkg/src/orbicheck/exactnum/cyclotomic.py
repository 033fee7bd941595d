"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as its residue modulo the N-th cyclotomic polynomial,
i.e. as rational coefficients on the power basis 1, z, ..., z^(phi(N)-1).
Since that basis is a Q-basis of the field, equal field elements have equal
coefficient vectors once both sides live in the same field.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # integer polynomials, low degree first; den monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dd]
        out[i] = c
        if c:
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of z^k for k = 0 .. n-1 in Q(zeta_n)."""
    phi_poly = cyclotomic_poly(n)
    deg = len(phi_poly) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi_poly)]
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> tuple[Fraction, ...]:
    # Tr(z^j)/phi(n) = mu(n/g)/phi(n/g) with g = gcd(j, n): invariant under lifting
    weights = []
    for j in range(euler_phi(n)):
        m = n // gcd(j, n)
        weights.append(Fraction(_mobius(m), euler_phi(m)))
    return tuple(weights)


def _normalize_order(order: int) -> int:
    # Q(zeta_2) = Q
    if order < 1:
        raise ValueError(f"cyclotomic order must be positive, got {order}")
    return 1 if order == 2 else order


def _reduce(order: int, raw) -> tuple[Fraction, ...]:
    table = _power_table(order)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    for k, c in enumerate(raw):
        if not c:
            continue
        row = table[k % order]
        for j in range(deg):
            if row[j]:
                out[j] += c * row[j]
    return tuple(out)


class CycNum:
    """Element of the cyclotomic field Q(zeta_order).

    Binary operations between elements of different orders first lift both
    operands into Q(zeta_L) with L the lcm of the orders.

    >>> z = CycNum.zeta(8)
    >>> (z + z**-1) ** 2 == 2
    True
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, coeffs=(0,), order: int = 1):
        order = _normalize_order(order)
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        raw = [Fraction(c) for c in coeffs]
        self.order = order
        self.coeffs = _reduce(order, raw)
        self._hash = None

    @classmethod
    def _make(cls, order: int, coeffs: tuple[Fraction, ...]) -> CycNum:
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, value) -> CycNum:
        return cls._make(1, (Fraction(value),))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> CycNum:
        """The root of unity exp(2*pi*i*k/n)."""
        if n < 1:
            raise ValueError(f"cyclotomic order must be positive, got {n}")
        if n == 1:
            return cls.rational(1)
        if n == 2:
            return cls.rational(-1 if k % 2 else 1)
        return cls._make(n, tuple(Fraction(c) for c in _power_table(n)[k % n]))

    # structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, order: int) -> CycNum:
        """Re-express this element in Q(zeta_order); order must be a multiple."""
        order = _normalize_order(order)
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} into order {order}")
        if self.is_rational():
            return CycNum._make(order, (self.coeffs[0],) + (Fraction(0),) * (euler_phi(order) - 1))
        step = order // self.order
        raw = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for j, c in enumerate(self.coeffs):
            raw[j * step] = c
        return CycNum._make(order, _reduce(order, raw))

    def key(self) -> tuple:
        return (self.order, self.coeffs)

    # arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> CycNum | None:
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Rational)):
            return CycNum.rational(other)
        return None

    def _align(self, other: CycNum) -> tuple[CycNum, CycNum]:
        if self.order == other.order:
            return self, other
        order = _lcm(self.order, other.order)
        return self.lift(order), other.lift(order)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        return CycNum._make(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._make(self.order, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        return CycNum._make(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational():
            s = other.coeffs[0]
            base = self if other.order == self.order or other.order == 1 else self.lift(
                _lcm(self.order, other.order))
            return CycNum._make(base.order, tuple(x * s for x in base.coeffs))
        if self.is_rational():
            return other * self
        a, b = self._align(other)
        deg = len(a.coeffs)
        raw = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        raw[i + j] += x * y
        return CycNum._make(a.order, _reduce(a.order, raw))

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        if not self:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.is_rational():
            return CycNum._make(self.order, (1 / self.coeffs[0],) + self.coeffs[1:])
        # solve (multiplication-by-self matrix) x = e_0
        deg = len(self.coeffs)
        cols = []
        basis = _power_table(self.order)
        for j in range(deg):
            cols.append((self * CycNum._make(self.order, tuple(Fraction(c) for c in basis[j]))).coeffs)
        aug = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        for c in range(deg):
            p = next(r for r in range(c, deg) if aug[r][c])
            aug[c], aug[p] = aug[p], aug[c]
            piv = aug[c][c]
            aug[c] = [x / piv for x in aug[c]]
            for r in range(deg):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return CycNum._make(self.order, tuple(row[-1] for row in aug))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CycNum._make(self.order, (Fraction(1),) + (Fraction(0),) * (len(self.coeffs) - 1))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> CycNum:
        """Complex conjugate (z -> z^-1)."""
        n = self.order
        raw = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            raw[(-j) % n] += c
        return CycNum._make(n, _reduce(n, raw))

    # comparison ----------------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        a, b = self._align(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                w = _trace_weights(self.order)
                self._hash = hash(sum((c * x for c, x in zip(self.coeffs, w)), Fraction(0)))
        return self._hash

    def __complex__(self):
        import cmath

        return sum((float(c) * cmath.exp(2j * cmath.pi * k / self.order)
                    for k, c in enumerate(self.coeffs)), 0j)

    # display -------------------------------------------------------------

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
                continue
            z = f"zeta({self.order})" + (f"^{j}" if j > 1 else "")
            if c == 1:
                terms.append(z)
            elif c == -1:
                terms.append("-" + z)
            else:
                terms.append(f"{c}*{z}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __repr__(self):
        return f"CycNum({self})"


ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)
