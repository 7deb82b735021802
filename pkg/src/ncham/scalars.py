"""Exact coefficient arithmetic: rationals and the cyclotomic field Q(q).

The deformation parameter q is a primitive p-th root of unity, realized as
the quotient field Q[q]/(Phi_p(q)) where Phi_p is the p-th cyclotomic
polynomial.  Elements are stored in the power basis 1, q, ..., q^(phi(p)-1)
with Fraction coordinates, so q**p == 1 holds on the nose, every nonzero
element is invertible, and all arithmetic is exact.  p = 1 gives plain
rationals (q = 1), p = 2 gives q = -1 concretely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def _poly_divmod(a, b):
    """Quotient and remainder of Fraction coefficient lists (ascending)."""
    a = list(a)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _poly_trim(q), _poly_trim(a)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(p: int) -> tuple:
    """Coefficients of Phi_p, ascending, via x^p - 1 = prod_{d|p} Phi_d."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    if p == 1:
        return (Fraction(-1), Fraction(1))
    num = [Fraction(-1)] + [_ZERO] * (p - 1) + [Fraction(1)]
    for d in range(1, p):
        if p % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(p: int) -> tuple:
    """q^k reduced into the power basis, for k = 0 .. 2*(phi-1)."""
    phi = len(cyclotomic_polynomial(p)) - 1
    rows = []
    for k in range(2 * phi - 1):
        poly = [_ZERO] * k + [_ONE]
        _, rem = _poly_divmod(poly, list(cyclotomic_polynomial(p)))
        rem = rem + [_ZERO] * (phi - len(rem))
        rows.append(tuple(rem))
    return tuple(rows)


def euler_phi(p: int) -> int:
    return len(cyclotomic_polynomial(p)) - 1


class CycScalar:
    """An element of Q[q]/(Phi_p(q)), exact and immutable."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        self.p = p
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) != euler_phi(p):
            raise ValueError("coefficient vector has wrong length for p=%d" % p)

    @classmethod
    def from_rational(cls, p, value):
        c = [_ZERO] * euler_phi(p)
        c[0] = Fraction(value)
        return cls(p, c)

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.p != self.p:
                raise ValueError("cyclotomic orders differ: %d vs %d" % (self.p, other.p))
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.from_rational(self.p, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycScalar(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycScalar(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        phi = len(self.coeffs)
        conv = [_ZERO] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    conv[i + j] += a * b
        table = _power_table(self.p)
        out = [_ZERO] * phi
        for k, c in enumerate(conv):
            if c:
                row = table[k]
                for m in range(phi):
                    if row[m]:
                        out[m] += c * row[m]
        return CycScalar(self.p, out)

    __rmul__ = __mul__

    def inverse(self):
        """Extended Euclid in Q[x] against Phi_p; exact field inverse."""
        if not self:
            raise ZeroDivisionError("division by zero in Q(q)")
        r0, r1 = list(cyclotomic_polynomial(self.p)), _poly_trim(list(self.coeffs))
        s0, s1 = [], [_ONE]
        while len(r1) > 1:
            quo, rem = _poly_divmod(r0, r1)
            s_new = list(s0)
            s_new += [_ZERO] * (len(quo) + len(s1) - 1 - len(s_new))
            for i, qi in enumerate(quo):
                if qi:
                    for j, sj in enumerate(s1):
                        s_new[i + j] -= qi * sj
            r0, r1, s0, s1 = r1, rem, s1, _poly_trim(s_new)
        inv = 1 / r1[0]
        phi = euler_phi(self.p)
        out = [c * inv for c in s1] + [_ZERO] * (phi - len(s1))
        # s1 may exceed the basis length before reduction mod Phi_p
        if len(out) > phi:
            _, out = _poly_divmod(out, list(cyclotomic_polynomial(self.p)))
            out = list(out) + [_ZERO] * (phi - len(out))
        return CycScalar(self.p, out[:phi])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = CycScalar.from_rational(self.p, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __bool__(self):
        return any(self.coeffs)

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def is_rational(self):
        return not any(self.coeffs[1:])

    def monomial_form(self):
        """(k, r) if the element is r*q^k in the power basis, else None."""
        nz = [i for i, c in enumerate(self.coeffs) if c]
        if len(nz) == 1:
            return nz[0], self.coeffs[nz[0]]
        if not nz:
            return 0, _ZERO
        return None

    def __repr__(self):
        return "CycScalar(p=%d, %s)" % (self.p, str(self))

    def __str__(self):
        from .printing import scalar_str

        return scalar_str(self)


def cyc_zero(p: int) -> CycScalar:
    return CycScalar.from_rational(p, 0)


def cyc_one(p: int) -> CycScalar:
    return CycScalar.from_rational(p, 1)


def q_power(p: int, k: int) -> CycScalar:
    """q^(k mod p) reduced into the power basis of Q[q]/(Phi_p)."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    k %= p
    phi = euler_phi(p)
    if k < phi:
        c = [_ZERO] * phi
        c[k] = _ONE
        return CycScalar(p, c)
    poly = [_ZERO] * k + [_ONE]
    _, rem = _poly_divmod(poly, list(cyclotomic_polynomial(p)))
    rem = list(rem) + [_ZERO] * (phi - len(rem))
    return CycScalar(p, rem)
