"""Exact cyclotomic arithmetic, q-numbers, certified signs, signatures."""

import random
from fractions import Fraction

import mpmath
import pytest

from qads.cyclo import (CycloField, CycloNumber, DegenerateParameterError,
                        QParams, hermitian_signature, qbinom, qfactorial,
                        qint, sign_of_real)


def test_field_arithmetic_roundtrip():
    f = CycloField(16)
    z = f.zeta_power(1)
    assert z ** 16 == f.one
    assert z ** 8 == -f.one
    x = f.element([Fraction(3, 2), Fraction(-1), Fraction(0), Fraction(5)])
    assert x - x == f.zero
    assert x * x.inverse() == f.one
    assert (x * z) * (x * z).inverse() == f.one


def test_conjugation_is_automorphism():
    f = CycloField(24)
    rng = random.Random(7)
    for _ in range(20):
        a = f.element([Fraction(rng.randint(-4, 4)) for _ in range(8)])
        b = f.element([Fraction(rng.randint(-4, 4)) for _ in range(8)])
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()
        assert a.conjugate().conjugate() == a


def test_zero_test_is_exact():
    # zeta^2 is a primitive 8th root inside Q(zeta_16): relation z^8 = -1
    f = CycloField(16)
    z = f.zeta_power(2)
    acc = f.zero
    for k in range(8):
        acc = acc + z ** k * (1 if k % 2 == 0 else 1)
    # sum of all 8th roots of unity vanishes
    total = f.zero
    for k in range(8):
        total = total + z ** k
    assert total.is_zero()
    assert not (total + f.one).is_zero()


def test_qint_defining_values():
    p = QParams(8, 1)
    assert qint(1, 1, p) == p.field.one
    assert qint(p.M, 1, p).is_zero()          # [M] = 0
    two = qint(2, 1, p)
    assert two == p.q + p.q_power(-1)         # [2] = q + 1/q
    assert (two * two) == p.field.from_fraction(2)   # [2]^2 = 2 at m=8


def test_qint_antisymmetry_and_reality():
    for m, n in ((8, 1), (12, 1), (10, 3)):
        p = QParams(m, n)
        for k in range(-6, 7):
            for d in (1, Fraction(1, 2)):
                v = p.qnum(k, d)
                assert v == -p.qnum(-k, d)
                assert v.is_real()


def test_qint_periodicity_sweep():
    # [k + period] = [k] whenever q^(2 d period) = 1
    p = QParams(8, 1)
    for d, period in ((1, 8), (Fraction(1, 2), 16)):
        for k in range(-24, 25):
            assert p.qnum(k + period, d) == p.qnum(k, d)


def test_qfactorial_and_binom():
    p = QParams(8, 1)
    assert qfactorial(0, 1, p) == p.field.one
    assert qfactorial(4, 1, p).is_zero()      # contains [4] = 0
    assert qbinom(2, 1, 1, p) == qint(2, 1, p)
    with pytest.raises(DegenerateParameterError):
        qbinom(8, 4, 1, p)                    # divided powers would be needed


def test_degenerate_parameter_rejected():
    p = QParams(8, 1)
    with pytest.raises(DegenerateParameterError):
        p.qnum(3, 4)                          # q^4 = q^-4 at m=8


def test_sign_of_real_examples():
    p = QParams(8, 1)
    assert sign_of_real(p.field.zero) == 0
    assert sign_of_real(qint(2, 1, p)) == 1       # 2cos(pi/4) > 0
    assert sign_of_real(qint(5, 1, p)) == -1      # sin(5pi/4)/sin(pi/4)
    with pytest.raises(ValueError):
        sign_of_real(p.q)                          # not real


def test_sign_of_real_against_high_precision():
    # cross-check (not the decision path): 200-digit direct evaluation
    rng = random.Random(2024)
    f = CycloField(24)
    checked = 0
    with mpmath.workdps(200):
        for _ in range(1000):
            coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                      for _ in range(f.degree)]
            x = f.element(coeffs)
            x = x + x.conjugate()       # force a real element
            s = sign_of_real(x)
            val = mpmath.mpf(0)
            for k, c in enumerate(x.coeffs):
                if c:
                    val += mpmath.mpf(c.numerator) / c.denominator * \
                        mpmath.cos(2 * mpmath.pi * k / 24)
            if abs(val) > mpmath.mpf(10) ** -150:
                assert s == (1 if val > 0 else -1)
                checked += 1
            else:
                assert s == 0
    assert checked > 900


def test_hermitian_signature_examples():
    p = QParams(8, 1)
    f = p.field
    ident = [[f.one if i == j else f.zero for j in range(3)] for i in range(3)]
    assert hermitian_signature(ident) == (3, 0, 0)
    diag = [[f.one, f.zero, f.zero],
            [f.zero, -qint(2, 1, p), f.zero],
            [f.zero, f.zero, f.zero]]
    assert hermitian_signature(diag) == (1, 1, 1)


def test_hermitian_signature_rejects_non_hermitian():
    p = QParams(8, 1)
    f = p.field
    bad = [[f.zero, p.q], [p.q, f.zero]]      # off-diagonal not conjugate
    with pytest.raises(ValueError):
        hermitian_signature(bad)


def test_signature_congruence_invariance():
    # P^H G P has the same signature for invertible P
    p = QParams(12, 1)
    f = p.field
    rng = random.Random(5)

    def rand_elt():
        return f.element([Fraction(rng.randint(-2, 2)) for _ in range(4)])

    for _ in range(6):
        n = 3
        # random Hermitian G = A + A^H plus a real diagonal
        A = [[rand_elt() for _ in range(n)] for _ in range(n)]
        G = [[A[i][j] + A[j][i].conjugate() for j in range(n)] for i in range(n)]
        for i in range(n):
            G[i][i] = G[i][i] + f.from_fraction(rng.randint(-2, 2))
        # random unimodular P (integer shear matrices)
        P = [[f.one if i == j else f.zero for j in range(n)] for i in range(n)]
        for _ in range(4):
            i, j = rng.sample(range(n), 2)
            c = f.from_fraction(rng.randint(-2, 2))
            for k in range(n):
                P[k][j] = P[k][j] + P[k][i] * c
        PH = [[P[j][i].conjugate() for j in range(n)] for i in range(n)]
        from qads.linalg import mat_mul
        G2 = mat_mul(PH, mat_mul(G, P, f.zero), f.zero)
        assert hermitian_signature(G2) == hermitian_signature(G)


def test_json_roundtrip():
    p = QParams(8, 1)
    x = qint(2, 1, p) * Fraction(3, 7) + p.q
    obj = x.to_json()
    assert obj["order"] == 16
    assert CycloNumber.from_json(obj) == x
