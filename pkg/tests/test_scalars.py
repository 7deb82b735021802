"""Cyclotomic field arithmetic against an independent extended-Euclid oracle."""

import random
from fractions import Fraction

import pytest

from ncham.scalars import (CycScalar, cyclotomic_polynomial, cyc_one,
                           euler_phi, q_power)


# -- independent oracle: polynomial arithmetic over Q, from scratch ---------

def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def poly_mod(a, m):
    a = list(a)
    while len(a) >= len(m):
        c = a[-1] / m[-1]
        shift = len(a) - len(m)
        for j, y in enumerate(m):
            a[shift + j] -= c * y
        while a and not a[-1]:
            a.pop()
    return a


def oracle_inverse(coeffs, p):
    """Inverse in Q[q]/(Phi_p) by brute extended Euclid, independent code."""
    phi = list(cyclotomic_polynomial(p))
    r0, r1 = phi, [c for c in coeffs]
    while r1 and not r1[-1]:
        r1.pop()
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        # one division step
        q = [Fraction(0)] * (len(r0) - len(r1) + 1)
        rem = list(r0)
        while len(rem) >= len(r1):
            c = rem[-1] / r1[-1]
            q[len(rem) - len(r1)] = c
            for j, y in enumerate(r1):
                rem[len(rem) - len(r1) + j] -= c * y
            while rem and not rem[-1]:
                rem.pop()
        s_new = [x for x in s0] + [Fraction(0)] * max(
            0, len(q) + len(s1) - 1 - len(s0))
        for i, qi in enumerate(q):
            for j, sj in enumerate(s1):
                s_new[i + j] -= qi * sj
        while s_new and not s_new[-1]:
            s_new.pop()
        r0, r1, s0, s1 = r1, rem, s1, s_new
    lead = r1[0]
    inv = poly_mod([c / lead for c in s1], phi)
    inv += [Fraction(0)] * (euler_phi(p) - len(inv))
    return tuple(inv)


def rand_scalar(rng, p):
    phi = euler_phi(p)
    return CycScalar(p, [Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                         for _ in range(phi)])


def test_cyclotomic_polynomials():
    as_ints = lambda p: [int(c) for c in cyclotomic_polynomial(p)]
    assert as_ints(1) == [-1, 1]
    assert as_ints(2) == [1, 1]
    assert as_ints(3) == [1, 1, 1]
    assert as_ints(4) == [1, 0, 1]
    assert as_ints(6) == [1, -1, 1]
    assert as_ints(12) == [1, 0, -1, 0, 1]


def test_inverse_example_p3():
    """(1+q) * (-q) = 1 in Q[q]/(q^2+q+1)."""
    q = q_power(3, 1)
    one = cyc_one(3)
    assert (one + q) * (-q) == 1
    # the oracle agrees that -q is the inverse of 1+q
    assert oracle_inverse((Fraction(1), Fraction(1)), 3) == (-q).coeffs


def test_q_powers():
    assert q_power(3, 3) == 1
    assert q_power(2, 5).coeffs == (Fraction(-1),)   # q = -1 concretely
    assert q_power(3, 2).coeffs == (Fraction(-1), Fraction(-1))
    assert q_power(1, 7) == 1
    for p in (1, 2, 3, 4, 5, 6):
        for k in range(-2 * p, 2 * p + 1):
            assert q_power(p, k) * q_power(p, -k) == 1
            assert q_power(p, k) == q_power(p, 1) ** (k % p)


def test_trivial_inverse():
    for p in (1, 2, 3, 5):
        assert cyc_one(p).inverse() == 1


def test_field_axioms_randomized():
    rng = random.Random(20260809)
    for p in (1, 2, 3, 4, 5, 6):
        for _ in range(60):
            a, b, c = (rand_scalar(rng, p) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a
            assert a * b == b * a
            if a:
                assert a * a.inverse() == 1
                assert (b / a) * a == b


def test_division_against_oracle():
    rng = random.Random(7)
    for p in (2, 3, 4, 5):
        for _ in range(40):
            a = rand_scalar(rng, p)
            if not a:
                continue
            assert a.inverse().coeffs == oracle_inverse(a.coeffs, p)


def test_rational_embedding_commutes():
    rng = random.Random(1)
    for p in (1, 3, 4):
        emb = lambda r: CycScalar.from_rational(p, r)
        for _ in range(40):
            r = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            s = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            assert emb(r) + emb(s) == emb(r + s)
            assert emb(r) * emb(s) == emb(r * s)
            if s:
                assert emb(r) / emb(s) == emb(r / s)


def test_errors():
    with pytest.raises(ZeroDivisionError):
        cyc_one(3) / CycScalar.from_rational(3, 0)
    with pytest.raises(ValueError):
        cyc_one(3) + cyc_one(2)
    with pytest.raises(ValueError):
        q_power(0, 1)


def test_str_forms():
    assert str(cyc_one(3) - 2 * q_power(3, 1)) == "1 - 2q"
    assert str(q_power(5, 2)) == "q^2"
    assert str(CycScalar.from_rational(2, Fraction(2, 3))) == "2/3"
