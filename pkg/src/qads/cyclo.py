"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Every quantity that decides anything downstream (Gram signatures, unitarity
verdicts, determinant comparisons) is an element of Q(zeta_N) for N = 2m,
kept in the canonical power basis 1, zeta, ..., zeta^(phi(N)-1).  Equality
and zero tests are coefficient comparisons, never numeric evaluation.
Signs of elements of the real subfield are certified by interval arithmetic
with an exact zero pretest, under the distinguished embedding
zeta_N -> exp(2*pi*i/N).
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache

import mpmath

NEGATIVE, ZERO, POSITIVE = -1, 0, 1

_SIGN_PREC_START = 64
_SIGN_PREC_LIMIT = 1 << 14


class DegenerateParameterError(ValueError):
    """q-number denominator vanishes at these parameters."""


# ---------------------------------------------------------------------------
# integer polynomial helpers (for cyclotomic polynomials)

def _poly_div_exact(num, den):
    # exact division of integer polynomials, den monic up to sign
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    out = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[dd + k]
        assert c % den[dd] == 0
        c //= den[dd]
        out[k] = c
        for j in range(dd + 1):
            num[j + k] -= c * den[j]
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficient tuple (ascending) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    poly = [0] * n + [1]
    poly[0] = -1  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CycloField:
    """The field Q(zeta_N) with canonical reduction mod the N-th cyclotomic polynomial."""

    _instances = {}

    def __new__(cls, order):
        if order not in cls._instances:
            inst = super().__new__(cls)
            inst._init(order)
            cls._instances[order] = inst
        return cls._instances[order]

    def _init(self, order):
        self.order = order
        poly = cyclotomic_polynomial(order)
        self.degree = len(poly) - 1
        # reduction rows: zeta^k as canonical coefficient tuple, 0 <= k < order
        d = self.degree
        rows = []
        cur = [Fraction(0)] * d
        cur[0] = Fraction(1)
        for _ in range(order):
            rows.append(tuple(cur))
            # multiply by zeta: shift, then fold the top coefficient
            top = cur[d - 1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * poly[j]
        self._zeta_rows = rows
        self.zero = CycloNumber(self, tuple([Fraction(0)] * d))
        self.one = CycloNumber(self, rows[0])

    def zeta_power(self, k):
        return CycloNumber(self, self._zeta_rows[k % self.order])

    def from_fraction(self, x):
        x = Fraction(x)
        c = [Fraction(0)] * self.degree
        c[0] = x
        return CycloNumber(self, tuple(c))

    def element(self, coeffs):
        """Element sum_k coeffs[k] * zeta^k for any exponent range."""
        acc = [Fraction(0)] * self.degree
        for k, c in enumerate(coeffs):
            if c:
                row = self._zeta_rows[k % self.order]
                for j in range(self.degree):
                    acc[j] += c * row[j]
        return CycloNumber(self, tuple(acc))

    def __repr__(self):
        return f"CycloField({self.order})"


class CycloNumber:
    """Element of Q(zeta_N) in canonical coordinates; immutable."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.field is not self.field:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNumber(self.field,
                           tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNumber(self.field,
                           tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycloNumber(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.field.zero
            return CycloNumber(self.field, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        acc = list(prod[:d])
        rows = self.field._zeta_rows
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = rows[k]
                for j in range(d):
                    acc[j] += c * row[j]
        return CycloNumber(self.field, tuple(acc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # extended Euclid in Q[x] against the cyclotomic polynomial
        n = self.field.order
        mod = [Fraction(c) for c in cyclotomic_polynomial(n)]
        a = list(self.coeffs)
        r0, r1 = mod, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        # the cyclotomic polynomial is irreducible, so the gcd is a constant
        deg = max(i for i, c in enumerate(r0) if c)
        if deg != 0:
            raise ZeroDivisionError("element not invertible (reduction bug)")
        inv = [c / r0[0] for c in s0]
        return self.field.element(inv)

    def conjugate(self):
        """Complex conjugation: zeta -> zeta^{-1}."""
        f = self.field
        acc = [Fraction(0)] * f.degree
        for k, c in enumerate(self.coeffs):
            if c:
                row = f._zeta_rows[(-k) % f.order]
                for j in range(f.degree):
                    acc[j] += c * row[j]
        return CycloNumber(f, tuple(acc))

    def is_real(self):
        return self == self.conjugate()

    def is_rational(self):
        return not any(self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_fraction(other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.order, self.coeffs))
        return self._hash

    def __repr__(self):
        if self.is_zero():
            return "Cyclo(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*z^{k}" if k else f"{c}")
        return "Cyclo(" + " + ".join(parts) + f"; N={self.field.order})"

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return {"order": self.field.order,
                "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj):
        field = CycloField(obj["order"])
        coeffs = tuple(Fraction(s) for s in obj["coeffs"])
        assert len(coeffs) == field.degree
        return CycloNumber(field, coeffs)


def _frac_poly_divmod(a, b):
    a = list(a)
    db = max(i for i, c in enumerate(b) if c)
    lead = b[db]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[db + k] / lead
        if c:
            q[k] = c
            for j in range(db + 1):
                a[j + k] -= c * b[j]
    return q, a[:db] if db else [Fraction(0)]


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, c in enumerate(b):
        a[j] -= c
    return a


# ---------------------------------------------------------------------------
# root-of-unity parameters

class QParams:
    """Root-of-unity data: q = exp(2*pi*i*n/m), ambient field Q(zeta_2m).

    The ambient order is fixed at 2m once per instance so that q^(1/2) is
    available (it shows up in coproducts and in q-numbers of the short
    roots).  M = m for odd m, m/2 for even m; M_sub[i] is the order of
    vanishing lattice for the i-th positive root of B2.
    """

    def __init__(self, m, n=1):
        if m < 3 or n < 1:
            raise ValueError("need m >= 3, n >= 1")
        from math import gcd
        if gcd(m, n) != 1:
            raise ValueError("m and n must be coprime")
        self.m = m
        self.n = n
        self.M = m if m % 2 else m // 2
        mm = m if m % 2 else m // 2
        self.M_sub = {1: mm, 2: m, 3: m, 4: mm}
        self.field = CycloField(2 * m)

    def q_power(self, x):
        """q^x as an exact cyclotomic number; x rational with 2*n*x integral."""
        e = 2 * self.n * Fraction(x)
        if e.denominator != 1:
            raise ValueError(f"q^{x} does not lie in Q(zeta_{2 * self.m})")
        return self.field.zeta_power(e.numerator)

    @property
    def q(self):
        return self.q_power(1)

    def qnum(self, x, d=1):
        """Quantum number [x] at base q^d: (q^(dx) - q^(-dx)) / (q^d - q^(-d))."""
        d = Fraction(d)
        den = self.q_power(d) - self.q_power(-d)
        if den.is_zero():
            raise DegenerateParameterError(f"[.]_(q^{d}) undefined: q^{d} = q^{-d}")
        num = self.q_power(d * x) - self.q_power(-d * x)
        return num / den

    def __eq__(self, other):
        return isinstance(other, QParams) and (self.m, self.n) == (other.m, other.n)

    def __hash__(self):
        return hash((self.m, self.n))

    def __repr__(self):
        return f"QParams(m={self.m}, n={self.n})"


def qint(k, d, params):
    """The quantum integer [k] at base q^d, as an element of the real subfield."""
    if not isinstance(k, int):
        raise TypeError("k must be an integer; use QParams.qnum for rationals")
    return params.qnum(k, d)


def qfactorial(k, d, params):
    """[k]! = [1][2]...[k] at base q^d; [0]! = 1."""
    if k < 0:
        raise ValueError("negative q-factorial")
    out = params.field.one
    for j in range(1, k + 1):
        out = out * qint(j, d, params)
    return out


def qbinom(n, k, d, params):
    """Quantum binomial [n choose k] at base q^d via the product formula.

    Rejected when a denominator factor vanishes at the root of unity
    (that regime would require divided powers).
    """
    if k < 0 or k > n:
        return params.field.zero
    num = params.field.one
    den = params.field.one
    for j in range(1, k + 1):
        den = den * qint(j, d, params)
        num = num * qint(n - k + j, d, params)
    if den.is_zero():
        raise DegenerateParameterError(
            f"qbinom({n},{k}) needs divided powers at m={params.m}, n={params.n}")
    return num / den


# ---------------------------------------------------------------------------
# certified sign determination on the real subfield

def sign_of_real(x):
    """Exact sign of a real cyclotomic number: -1, 0 or +1.

    Decision path: exact zero test first, then interval arithmetic with
    doubling precision until the enclosure excludes zero.  The zero pretest
    guarantees termination.
    """
    if not isinstance(x, CycloNumber):
        raise TypeError("expected a CycloNumber")
    if not x.is_real():
        raise ValueError("sign_of_real: input is not fixed by conjugation")
    if x.is_zero():
        return ZERO
    N = x.field.order
    prec = _SIGN_PREC_START
    while prec <= _SIGN_PREC_LIMIT:
        iv = mpmath.iv
        old = iv.prec
        try:
            iv.prec = prec
            total = iv.mpf(0)
            twopi = 2 * iv.pi
            for k, c in enumerate(x.coeffs):
                if c:
                    # x real => x equals the real part of its embedding
                    term = iv.mpf(c.numerator) / c.denominator
                    total += term * iv.cos(twopi * k / N)
            if total > 0:
                return POSITIVE
            if total < 0:
                return NEGATIVE
        finally:
            iv.prec = old
        prec *= 2
    raise RuntimeError("sign determination exceeded precision limit")


def real_approx(x, dps=30):
    """Floating approximation of a real cyclotomic number (reporting only)."""
    with mpmath.workdps(dps):
        N = x.field.order
        tot = mpmath.mpf(0)
        for k, c in enumerate(x.coeffs):
            if c:
                tot += mpmath.mpf(c.numerator) / c.denominator * mpmath.cos(
                    2 * mpmath.pi * k / N)
        return tot


# ---------------------------------------------------------------------------
# exact Hermitian signature

def hermitian_signature(gram):
    """Signature (n_plus, n_zero, n_minus) of an exactly Hermitian matrix.

    Symmetric congruence pivoting over Q(zeta_N); pivot signs come from
    sign_of_real, so no floating point enters the decision path.
    """
    n = len(gram)
    if n == 0:
        return (0, 0, 0)
    field = None
    for row in gram:
        for e in row:
            if isinstance(e, CycloNumber):
                field = e.field
                break
        if field:
            break
    if field is None:
        raise TypeError("matrix entries must be CycloNumber")
    G = [[e if isinstance(e, CycloNumber) else field.from_fraction(e)
          for e in row] for row in gram]
    for i in range(n):
        for j in range(n):
            if G[i][j] != G[j][i].conjugate():
                raise ValueError("matrix is not exactly Hermitian")
    active = list(range(n))
    n_plus = n_minus = 0
    while active:
        piv = next((i for i in active if not G[i][i].is_zero()), None)
        if piv is None:
            # all active diagonal entries vanish; look for an off-diagonal one
            pair = None
            for a_idx, i in enumerate(active):
                for j in active[a_idx + 1:]:
                    if not G[i][j].is_zero():
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                break  # remaining block is identically zero
            i, j = pair
            t = G[i][j].inverse()   # e_i += t*e_j makes (e_i, e_i) = 2
            tc = t.conjugate()
            for k in active:
                G[i][k] = G[i][k] + tc * G[j][k]
            for k in active:
                G[k][i] = G[k][i] + G[k][j] * t
            continue
        s = sign_of_real(G[piv][piv])
        if s > 0:
            n_plus += 1
        else:
            n_minus += 1
        active.remove(piv)
        d = G[piv][piv]
        rest = list(active)
        col = {k: G[k][piv] for k in rest}
        row = {k: G[piv][k] for k in rest}
        dinv = d.inverse()
        for k in rest:
            ck = col[k] * dinv
            if ck.is_zero():
                continue
            for l in rest:
                G[k][l] = G[k][l] - ck * row[l]
    n_zero = n - n_plus - n_minus
    return (n_plus, n_zero, n_minus)


def fraction_to_str(x):
    return str(Fraction(x))


def fraction_from_str(s):
    return Fraction(s)
