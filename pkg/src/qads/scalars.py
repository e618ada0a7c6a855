"""Scalar domains for the rank-2 engine.

The straightening rules and all Verma-module machinery are written against
a small domain interface, so one implementation serves four coefficient
rings:

  * SymbolicDomain   -- Q(u), u an indeterminate standing for q^(1/2);
  * CycloDomain      -- Q(zeta_2m) at a root of unity;
  * RationalDomain   -- Q with u specialized to a generic rational point;
  * JetDomain        -- truncated Taylor jets in h along the deformation
                        q -> q e^(i pi h), lambda -> lambda + h rho, with
                        pi carried as a formal variable (exact vanishing
                        orders).
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloField, CycloNumber, QParams


# ---------------------------------------------------------------------------
# polynomials over Q (dense tuples, ascending)

def _trim(c):
    n = len(c)
    while n > 0 and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)])


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _trim(out)


def _pdivmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[db]
    if len(a) - 1 < db:
        return (), _trim(a)
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[db + k] / lead
        if c:
            q[k] = c
            for j in range(db + 1):
                a[j + k] -= c * b[j]
    return _trim(q), _trim(a)


def _pgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(x / lead for x in a)
    return a


def _peval(poly, x, zero, one):
    acc = zero
    for c in reversed(poly):
        acc = acc * x + c * one
    return acc


class RatFunc:
    """Rational function in u over Q; canonical form with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),), normalize=True):
        if normalize:
            num, den = _trim(num), _trim(den)
            if not den:
                raise ZeroDivisionError("zero denominator")
            if not num:
                den = (Fraction(1),)
            else:
                nz_den = [i for i, c in enumerate(den) if c]
                if len(nz_den) == 1:
                    # Laurent fast path: cancel the common power of u
                    k = nz_den[0]
                    v = next(i for i, c in enumerate(num) if c)
                    s = min(k, v)
                    if s:
                        num = num[s:]
                        den = den[s:]
                else:
                    g = _pgcd(num, den)
                    if len(g) > 1:
                        num = _pdivmod(num, g)[0]
                        den = _pdivmod(den, g)[0]
                lead = den[-1]
                if lead != 1:
                    num = tuple(x / lead for x in num)
                    den = tuple(x / lead for x in den)
        self.num = num
        self.den = den

    @staticmethod
    def const(x):
        x = Fraction(x)
        return RatFunc((x,) if x else (), (Fraction(1),), normalize=False)

    @staticmethod
    def u_power(k):
        """u^k for any integer k."""
        if k >= 0:
            return RatFunc((Fraction(0),) * k + (Fraction(1),), (Fraction(1),),
                           normalize=False)
        return RatFunc((Fraction(1),), (Fraction(0),) * (-k) + (Fraction(1),),
                       normalize=False)

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return RatFunc(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = _padd(_pmul(self.num, other.den), _pneg(_pmul(other.num, self.den)))
        return RatFunc(num, _pmul(self.den, other.den))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den, normalize=False)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        out = RatFunc.const(1)
        base = self
        if k < 0:
            base = RatFunc.const(1) / self
            k = -k
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def conj(self):
        """The involution u -> 1/u (complex conjugation on the unit circle)."""
        dn, dd = len(self.num) - 1, len(self.den) - 1
        num = tuple(reversed(self.num))
        den = tuple(reversed(self.den))
        if dd >= dn:
            num = (Fraction(0),) * (dd - dn) + num
        else:
            den = (Fraction(0),) * (dn - dd) + den
        return RatFunc(num, den)

    def is_monomial(self):
        """(sign, k) if self = sign * u^k, else None."""
        nz_num = [i for i, c in enumerate(self.num) if c]
        nz_den = [i for i, c in enumerate(self.den) if c]
        if len(nz_num) == 1 and len(nz_den) == 1:
            c = self.num[nz_num[0]] / self.den[nz_den[0]]
            if c in (1, -1):
                return (int(c), nz_num[0] - nz_den[0])
        return None

    def eval(self, x, zero, one):
        """Evaluate at a point of another ring (x = image of u)."""
        num = _peval(self.num, x, zero, one)
        den = _peval(self.den, x, zero, one)
        return num / den

    def __repr__(self):
        def fmt(p):
            return " + ".join(f"{c}*u^{k}" if k else str(c)
                              for k, c in enumerate(p) if c) or "0"
        if self.den == (Fraction(1),):
            return f"RatFunc({fmt(self.num)})"
        return f"RatFunc(({fmt(self.num)})/({fmt(self.den)}))"


def ratfunc_matrix_det(mat):
    """Determinant of a RatFunc matrix by row-cleared Bareiss elimination.

    Polynomial arithmetic with exact divisions only; avoids the gcd storm
    of field elimination on rational functions."""
    n = len(mat)
    if n == 0:
        return RatFunc.const(1)
    den_total = (Fraction(1),)
    rows = []
    for row in mat:
        d = (Fraction(1),)
        for e in row:
            d = _pmul(d, e.den)
        cleared = []
        for e in row:
            factor = _pdivmod(d, e.den)[0]
            cleared.append(_pmul(e.num, factor))
        rows.append(cleared)
        den_total = _pmul(den_total, d)
    sign = 1
    prev = (Fraction(1),)
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return RatFunc.const(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        pc = rows[c][c]
        for i in range(c + 1, n):
            ric = rows[i][c]
            new_row = list(rows[i])
            for j in range(c + 1, n):
                t = _padd(_pmul(pc, rows[i][j]), _pneg(_pmul(ric, rows[c][j])))
                q, r = _pdivmod(t, prev)
                assert not r, "Bareiss division not exact"
                new_row[j] = q
            rows[i] = new_row
        prev = pc
    det_poly = rows[n - 1][n - 1]
    if sign < 0:
        det_poly = _pneg(det_poly)
    return RatFunc(det_poly, den_total)


class LinFrac:
    """Affine function a + b*h of the deformation parameter (exact slopes)."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def _coerce(self, other):
        if isinstance(other, LinFrac):
            return other
        if isinstance(other, (int, Fraction)):
            return LinFrac(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LinFrac(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LinFrac(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LinFrac(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, LinFrac):
            if self.b and other.b:
                raise ValueError("product of two deformed quantities")
            return LinFrac(self.a * other.a, self.a * other.b + self.b * other.a)
        return LinFrac(self.a * Fraction(other), self.b * Fraction(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return LinFrac(self.a / Fraction(other), self.b / Fraction(other))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.a, self.b) == (other.a, other.b)

    def __repr__(self):
        return f"LinFrac({self.a} + {self.b}*h)"


# ---------------------------------------------------------------------------
# pi-polynomials and jets

class PiRat:
    """Rational function in the formal variable pi over Q(zeta_N)."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None, normalize=True):
        self.field = field
        if den is None:
            den = (field.one,)
        if normalize:
            num = _ptrim(num)
            den = _ptrim(den)
            if not den:
                raise ZeroDivisionError("zero denominator in PiRat")
            if not num:
                den = (field.one,)
            else:
                g = _cpgcd(field, num, den)
                if len(g) > 1:
                    num = _cpdiv(field, num, g)
                    den = _cpdiv(field, den, g)
                lead = den[-1]
                if lead != field.one:
                    inv = lead.inverse()
                    num = tuple(c * inv for c in num)
                    den = tuple(c * inv for c in den)
        self.num = num
        self.den = den

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def _c(self, other):
        if isinstance(other, PiRat):
            return other
        if isinstance(other, (int, Fraction)):
            x = self.field.from_fraction(other)
            return PiRat(self.field, (x,) if x else (), normalize=False)
        if isinstance(other, CycloNumber):
            return PiRat(self.field, (other,) if other else (), normalize=False)
        return NotImplemented

    def __add__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return NotImplemented
        num = _cpadd(_cpmul(self.num, other.den), _cpmul(other.num, self.den))
        return PiRat(self.field, num, _cpmul(self.den, other.den))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return NotImplemented
        num = _cpadd(_cpmul(self.num, other.den),
                     tuple(-c for c in _cpmul(other.num, self.den)))
        return PiRat(self.field, num, _cpmul(self.den, other.den))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PiRat(self.field, tuple(-c for c in self.num), self.den,
                     normalize=False)

    def __mul__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return NotImplemented
        return PiRat(self.field, _cpmul(self.num, other.num),
                     _cpmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._c(other)
        if not other.num:
            raise ZeroDivisionError
        return PiRat(self.field, _cpmul(self.num, other.den),
                     _cpmul(self.den, other.num))

    def __eq__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def conj(self):
        return PiRat(self.field, tuple(c.conjugate() for c in self.num),
                     tuple(c.conjugate() for c in self.den))

    def __repr__(self):
        return f"PiRat(num deg {len(self.num)-1}, den deg {len(self.den)-1})"


def _ptrim(c):
    c = list(c)
    while c and c[-1].is_zero():
        c.pop()
    return tuple(c)


def _cpadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _ptrim(out)


def _cpmul(a, b):
    if not a or not b:
        return ()
    first = a[0]
    zero = first.field.zero
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return _ptrim(out)


def _cpdivmod(field, a, b):
    a = list(a)
    db = len(b) - 1
    inv = b[db].inverse()
    if len(a) - 1 < db:
        return (), _ptrim(a)
    q = [field.zero] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[db + k] * inv
        if c:
            q[k] = c
            for j in range(db + 1):
                a[j + k] = a[j + k] - c * b[j]
    return _ptrim(q), _ptrim(a)


def _cpdiv(field, a, b):
    q, r = _cpdivmod(field, a, b)
    assert not r
    return q


def _cpgcd(field, a, b):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _cpdivmod(field, a, b)[1]
    if a:
        inv = a[-1].inverse()
        a = tuple(c * inv for c in a)
    return a


class Jet:
    """Truncated Taylor expansion in h with PiRat coefficients."""

    __slots__ = ("dom", "coeffs")

    def __init__(self, dom, coeffs):
        self.dom = dom
        coeffs = list(coeffs)[: dom.order + 1]
        coeffs += [dom.pi_zero] * (dom.order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def ord(self):
        """Index of the first nonzero coefficient, or None if zero to order."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return None

    def _c(self, other):
        if isinstance(other, Jet):
            return other
        if isinstance(other, (int, Fraction, CycloNumber, PiRat)):
            return self.dom.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return NotImplemented
        return Jet(self.dom, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return NotImplemented
        return Jet(self.dom, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Jet(self.dom, [-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return NotImplemented
        D = self.dom.order
        out = [self.dom.pi_zero] * (D + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > D:
                    break
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Jet(self.dom, out)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse of a unit jet (nonzero constant term)."""
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise ZeroDivisionError("jet is not a unit")
        D = self.dom.order
        inv0 = self.dom.pi_one / c0
        out = [inv0] + [self.dom.pi_zero] * D
        for k in range(1, D + 1):
            acc = self.dom.pi_zero
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j] * out[k - j]
            out[k] = -(acc / c0)
        return Jet(self.dom, out)

    def __truediv__(self, other):
        other = self._c(other)
        return self * other.inverse()

    def shift_down(self, k):
        """Divide by h^k; loses the top k coefficients of precision."""
        assert all(self.coeffs[i].is_zero() for i in range(k))
        return Jet(self.dom, list(self.coeffs[k:]) + [self.dom.pi_zero] * k)

    def conj(self):
        return Jet(self.dom, [c.conj() for c in self.coeffs])

    def __eq__(self, other):
        other = self._c(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        o = self.ord()
        return f"Jet(ord={o}, D={self.dom.order})"


# ---------------------------------------------------------------------------
# domains

class SymbolicDomain:
    """Coefficients in Q(u), u = q^(1/2) an indeterminate."""

    name = "symbolic"
    supports_conj = True

    def __init__(self):
        self.zero = RatFunc.const(0)
        self.one = RatFunc.const(1)

    def from_fraction(self, x):
        return RatFunc.const(x)

    def q_power(self, x):
        e = 2 * Fraction(x)
        if e.denominator != 1:
            raise ValueError(f"q^{x} is not a Laurent monomial in u")
        return RatFunc.u_power(e.numerator)

    def conj(self, a):
        return a.conj()

    def from_ratfunc(self, r):
        return r

    def __repr__(self):
        return "SymbolicDomain()"


class CycloDomain:
    """Coefficients in Q(zeta_2m) at q = exp(2 pi i n/m)."""

    name = "cyclo"
    supports_conj = True

    def __init__(self, params):
        self.params = params
        self.field = params.field
        self.zero = self.field.zero
        self.one = self.field.one
        self._u = params.q_power(Fraction(1, 2))
        self._rf_cache = {}

    def from_fraction(self, x):
        return self.field.from_fraction(x)

    def q_power(self, x):
        return self.params.q_power(x)

    def conj(self, a):
        return a.conjugate()

    def from_ratfunc(self, r):
        key = (r.num, r.den)
        out = self._rf_cache.get(key)
        if out is None:
            out = r.eval(self._u, self.zero, self.one)
            self._rf_cache[key] = out
        return out

    def __repr__(self):
        return f"CycloDomain({self.params})"


class RationalDomain:
    """Coefficients in Q with u = q^(1/2) a generic rational point.

    Conjugation is not available pointwise; this domain serves oracle
    computations (kernels, ranks) that never take adjoints.
    """

    name = "rational"
    supports_conj = False

    def __init__(self, u0):
        self.u0 = Fraction(u0)
        if self.u0 in (0, 1, -1):
            raise ValueError("u0 must be a generic point")
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self._rf_cache = {}

    def from_fraction(self, x):
        return Fraction(x)

    def q_power(self, x):
        e = 2 * Fraction(x)
        if e.denominator != 1:
            raise ValueError(f"q^{x} not defined in the rational domain")
        return self.u0 ** e.numerator

    def conj(self, a):
        raise NotImplementedError("no pointwise conjugation at a rational point")

    def from_ratfunc(self, r):
        key = (r.num, r.den)
        out = self._rf_cache.get(key)
        if out is None:
            out = r.eval(self.u0, self.zero, self.one)
            self._rf_cache[key] = out
        return out

    def __repr__(self):
        return f"RationalDomain(u0={self.u0})"


class JetDomain:
    """Jets in h along q -> q e^(i pi h); weights may carry h-slopes.

    Exponent arguments to q_power may be LinFrac; pi is formal, i must lie
    in the ambient cyclotomic field (even m).
    """

    name = "jet"
    supports_conj = True

    def __init__(self, params, order):
        if params.m % 2:
            raise ValueError("jet domain needs even m (i in the field)")
        self.params = params
        self.field = params.field
        self.order = order
        f = self.field
        self.pi_zero = PiRat(f, (), normalize=False)
        self.pi_one = PiRat(f, (f.one,), normalize=False)
        self.pi_var = PiRat(f, (f.zero, f.one), normalize=False)
        self.i_unit = f.zeta_power(f.order // 4)
        self.zero = Jet(self, [self.pi_zero])
        self.one = Jet(self, [self.pi_one])
        self._rf_cache = {}

    def constant(self, x):
        if isinstance(x, PiRat):
            return Jet(self, [x])
        if isinstance(x, CycloNumber):
            return Jet(self, [PiRat(self.field, (x,), normalize=False)])
        x = self.field.from_fraction(x)
        return Jet(self, [PiRat(self.field, (x,) if x else (), normalize=False)])

    def from_fraction(self, x):
        return self.constant(x)

    def _exp_i_pi(self, c1, c2):
        """exp(i pi (c1 h + c2 h^2)) as a jet; c1, c2 rational."""
        f = self.field
        arg = Jet(self, [self.pi_zero,
                         PiRat(f, (f.zero, self.i_unit * c1)) if c1 else self.pi_zero,
                         PiRat(f, (f.zero, self.i_unit * c2)) if c2 else self.pi_zero])
        out = self.one
        term = self.one
        fact = 1
        for j in range(1, self.order + 1):
            term = term * arg
            fact *= j
            out = out + term * Fraction(1, fact)
        return out

    def q_power(self, x):
        if isinstance(x, LinFrac):
            x0, x1 = x.a, x.b
        else:
            x0, x1 = Fraction(x), Fraction(0)
        key = (x0, x1)
        out = self._rf_cache.get(key)
        if out is not None:
            return out
        base = self.constant(self.params.q_power(x0))
        c1 = x0 + Fraction(2 * self.params.n, self.params.m) * x1
        out = base * self._exp_i_pi(c1, x1)
        self._rf_cache[key] = out
        return out

    def conj(self, a):
        return a.conj()

    def from_ratfunc(self, r):
        key = ("rf", r.num, r.den)
        out = self._rf_cache.get(key)
        if out is None:
            u_jet = self.q_power(Fraction(1, 2))
            num = _jet_peval(self, r.num, u_jet)
            den = _jet_peval(self, r.den, u_jet)
            out = num * den.inverse()
            self._rf_cache[key] = out
        return out

    def __repr__(self):
        return f"JetDomain({self.params}, order={self.order})"


def _jet_peval(dom, poly, x):
    acc = dom.zero
    for c in reversed(poly):
        acc = acc * x + dom.constant(c)
    return acc


def jet_det_ord(dom, mat):
    """Order of vanishing in h of det(mat) for a square jet matrix.

    Unit pivots are eliminated with exact division; when a whole column has
    positive order, h^k is factored out and accounted.  Returns None when
    the order exceeds the jet truncation."""
    n = len(mat)
    A = [list(row) for row in mat]
    total = 0
    budget = dom.order
    for c in range(n):
        col_ords = []
        for i in range(c, n):
            o = A[i][c].ord()
            col_ords.append((o if o is not None else dom.order + 1, i))
        min_ord, piv = min(col_ords)
        if min_ord > budget:
            return None
        if min_ord > 0:
            total += min_ord
            budget -= min_ord
            for i in range(c, n):
                if A[i][c].ord() is not None and not A[i][c].is_zero():
                    A[i][c] = A[i][c].shift_down(min_ord)
                # zero jets stay zero
            min_ord = 0
            piv = next(i for i in range(c, n) if A[i][c].ord() == 0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
        inv = A[c][c].inverse()
        for i in range(c + 1, n):
            if not A[i][c].is_zero():
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return total
