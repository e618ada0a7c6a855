"""Normal-ordered arithmetic for the rank-2 quantized enveloping algebra.

Generators X1^pm, X2^pm, H1, H2 with the B2 Cartan data; composite root
vectors for b3 = a1+a2 and b4 = a1+2a2 are taken in the X-normalization

    F3 = q X1^- X2^- . q^{-1}-twist:  F3 = q f1 f2 - f2 f1
    F4 = F3 f2 - f2 F3

(proportional to the braid-group root vectors; square roots of quantum
numbers never enter).  Elements are stored in the triangular normal form

    F1^k1 F3^k3 F4^k4 F2^k2  *  q^{(r1 H1 + r2 H2)/4}  *  E2^c2 E4^c4 E3^c3 E1^c1

and all pairwise commutation rules are derived once, at symbolic q, from
the two q-Serre relations by exact linear algebra; every other domain
specializes the cached rules.  A step budget guards the rewriting loops.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .. import linalg
from ..scalars import RatFunc, SymbolicDomain

#: convex order of the positive-root labels and their slot in exponent tuples
ORDER = (1, 3, 4, 2)
SLOT = {1: 0, 3: 1, 4: 2, 2: 3}
#: alpha-coordinates of each positive root
CONTENT = {1: (1, 0), 3: (1, 1), 4: (1, 2), 2: (0, 1)}
ZERO4 = (0, 0, 0, 0)

STEP_BUDGET = 2_000_000


class StraighteningError(RuntimeError):
    """Rewriting exceeded its step budget (wrong rule orientation)."""


def _content_of(k):
    a = k[0] + k[1] + k[2]
    b = k[1] + 2 * k[2] + k[3]
    return (a, b)


def _pair_alpha(c1, c2):
    a1, b1 = c1
    a2, b2 = c2
    return 2 * a1 * a2 - a1 * b2 - b1 * a2 + b1 * b2


def _phi(r, content):
    """Exponent x with K_r F = q^{-x} F K_r for F of weight -content."""
    g_a1 = 2 * content[0] - content[1]          # (gamma, a1)
    g_a2 = -content[0] + content[1]             # (gamma, a2)
    return Fraction(r[0] * g_a1 + 2 * r[1] * g_a2, 4)


def _word_of(k):
    return (1,) * k[0] + (3,) * k[1] + (4,) * k[2] + (2,) * k[3]


def _eword_of(k):
    return (2,) * k[3] + (4,) * k[2] + (3,) * k[1] + (1,) * k[0]


# ---------------------------------------------------------------------------
# symbolic derivation of the Levendorskii-Soibelman rules
#
# Everything below runs once per process over Q(u) and is cached.

_SYM = SymbolicDomain()


def _rf_u(k):
    return RatFunc.u_power(k)


def _qnum_sym(n, half=False):
    """[n] at base q (half=False) or q^(1/2) (half=True), symbolically."""
    step = 1 if half else 2
    num = _rf_u(step * n) - _rf_u(-step * n)
    den = _rf_u(step) - _rf_u(-step)
    return num / den


def _free_mul(A, B):
    out = {}
    for wa, ca in A.items():
        for wb, cb in B.items():
            w = wa + wb
            c = ca * cb
            if w in out:
                out[w] = out[w] + c
            else:
                out[w] = c
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def _f_expansions():
    """Free-algebra expansions of the negative root vectors."""
    q = _rf_u(2)
    one = RatFunc.const(1)
    F1 = {(1,): one}
    F2 = {(2,): one}
    F3 = {(1, 2): q, (2, 1): -one}
    F4 = _free_mul(F3, F2)
    for w, c in _free_mul(F2, F3).items():
        F4[w] = F4.get(w, RatFunc.const(0)) - c
    F4 = {w: c for w, c in F4.items() if c}
    return {1: F1, 2: F2, 3: F3, 4: F4}


@lru_cache(maxsize=None)
def _serre_elements():
    one = RatFunc.const(1)
    s1 = {(2, 1, 1): one, (1, 1, 2): one,
          (1, 2, 1): -_qnum_sym(2, half=False)}
    c3 = _qnum_sym(3, half=True)
    s2 = {(1, 2, 2, 2): one, (2, 2, 2, 1): -one}
    s2[(2, 1, 2, 2)] = -c3
    s2[(2, 2, 1, 2)] = c3
    return (s1, s2)


def _words_of_bidegree(a, b):
    base = (1,) * a + (2,) * b
    return sorted(set(itertools.permutations(base)))


def _pbw_expand(k):
    exp = _f_expansions()
    out = {(): RatFunc.const(1)}
    for label, count in ((1, k[0]), (3, k[1]), (4, k[2]), (2, k[3])):
        for _ in range(count):
            out = _free_mul(out, exp[label])
    return out


def _par_tuples_alpha(a, b):
    out = []
    for k4 in range(min(a, b // 2) + 1):
        for k3 in range(min(a - k4, b - 2 * k4) + 1):
            k1 = a - k4 - k3
            k2 = b - 2 * k4 - k3
            out.append((k1, k3, k4, k2))
    out.sort()
    return out


def _ideal_spanners(a, b):
    """Free elements w1 * S * w2 of bidegree (a, b) for both Serre elements."""
    out = []
    for s, (sa, sb) in zip(_serre_elements(), ((2, 1), (1, 3))):
        ra, rb = a - sa, b - sb
        if ra < 0 or rb < 0:
            continue
        for la in range(ra + 1):
            for lb in range(rb + 1):
                for w1 in _words_of_bidegree(la, lb):
                    for w2 in _words_of_bidegree(ra - la, rb - lb):
                        elt = {}
                        for ws, cs in s.items():
                            w = w1 + ws + w2
                            elt[w] = elt.get(w, RatFunc.const(0)) + cs
                        out.append({w: c for w, c in elt.items() if c})
    return out


def _express_in_pbw(x, a, b):
    """Coefficients of x in the PBW basis, modulo the Serre ideal."""
    words = _words_of_bidegree(a, b)
    widx = {w: i for i, w in enumerate(words)}
    cands = _par_tuples_alpha(a, b)
    cols = []
    for k in cands:
        col = [RatFunc.const(0)] * len(words)
        for w, c in _pbw_expand(k).items():
            col[widx[w]] = c
        cols.append(col)
    spanners = _ideal_spanners(a, b)
    for s in spanners:
        col = [RatFunc.const(0)] * len(words)
        for w, c in s.items():
            col[widx[w]] = c
        cols.append(col)
    # PBW monomials must be independent modulo the ideal
    ideal_rank = linalg.rank([list(r) for r in zip(*cols[len(cands):])]) \
        if spanners else 0
    full_rank = linalg.rank([list(r) for r in zip(*cols)])
    assert full_rank == len(cands) + ideal_rank, \
        f"PBW monomials dependent modulo ideal at bidegree {(a, b)}"
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(len(words))]
    rhs = [RatFunc.const(0)] * len(words)
    for w, c in x.items():
        rhs[widx[w]] = c
    sol = linalg.solve(mat, rhs, RatFunc.const(0))
    assert sol is not None, f"element not in PBW span at bidegree {(a, b)}"
    return [(k, sol[i]) for i, k in enumerate(cands) if sol[i]]


@lru_cache(maxsize=None)
def f_rules():
    """Normal-ordering rules F_b F_a -> sum of PBW monomials, b after a."""
    exp = _f_expansions()
    rules = {}
    for i, a in enumerate(ORDER):
        for b in ORDER[i + 1:]:
            x = _free_mul(exp[b], exp[a])
            ca, cb = CONTENT[a], CONTENT[b]
            rules[(b, a)] = _express_in_pbw(x, ca[0] + cb[0], ca[1] + cb[1])
    return rules


@lru_cache(maxsize=None)
def e_rules():
    """Mirror rules E_a E_b -> sum of reversed PBW monomials (a before b)."""
    out = {}
    for (b, a), terms in f_rules().items():
        out[(a, b)] = [(k, c.conj()) for k, c in terms]
    return out


# ---------------------------------------------------------------------------
# word-level machine (only used to derive the mixed E-F commutation table)

def _welt_add(A, B):
    out = dict(A)
    for t, c in B.items():
        if t in out:
            s = out[t] + c
            if s:
                out[t] = s
            else:
                del out[t]
        elif c:
            out[t] = c
    return out


def _welt_scale(A, c):
    if not c:
        return {}
    return {t: x * c for t, x in A.items()}


_Q_DEN1 = None
_Q_DEN2 = None


def _swap_ef(e, f):
    """Normal form of e_e * f_f at the generator level."""
    global _Q_DEN1, _Q_DEN2
    one = RatFunc.const(1)
    out = {((f,), (0, 0), (e,)): one}
    if e == f:
        if e == 1:
            if _Q_DEN1 is None:
                _Q_DEN1 = one / (_rf_u(2) - _rf_u(-2))
            out[((), (4, 0), ())] = _Q_DEN1
            out[((), (-4, 0), ())] = -_Q_DEN1
        else:
            if _Q_DEN2 is None:
                _Q_DEN2 = one / (_rf_u(1) - _rf_u(-1))
            out[((), (0, 2), ())] = _Q_DEN2
            out[((), (0, -2), ())] = -_Q_DEN2
    return out


@lru_cache(maxsize=None)
def _cross_words(eword, fword):
    """Normal ordering of the word product eword * fword."""
    one = RatFunc.const(1)
    if not eword or not fword:
        return {(fword, (0, 0), eword): one}
    e, f = eword[-1], fword[0]
    base = _swap_ef(e, f)
    total = {}
    for (fm, km, em), c in base.items():
        left = _cross_words(eword[:-1], fm)
        for (fl, kl, el), cl in left.items():
            # assemble fl kl el km em fword[1:]
            c1 = cl * c
            # kl moves right past nothing (el between), el past km:
            # el * km = q^{-phi(km, el)} km el
            shift = _phi(km, _word_content(el))
            if shift:
                c1 = c1 * _SYM.q_power(-shift)
            kv = (kl[0] + km[0], kl[1] + km[1])
            right = _cross_words(el + em, fword[1:])
            for (fr, kr, er), cr in right.items():
                c2 = c1 * cr
                # kv moves right past fr
                shift2 = _phi(kv, _word_content(fr))
                if shift2:
                    c2 = c2 * _SYM.q_power(-shift2)
                t = (fl + fr, (kv[0] + kr[0], kv[1] + kr[1]), er)
                if t in total:
                    s = total[t] + c2
                    if s:
                        total[t] = s
                    else:
                        del total[t]
                elif c2:
                    total[t] = c2
    return total


def _word_content(word):
    a = sum(1 for x in word if x == 1)
    b = sum(1 for x in word if x == 2)
    return (a, b)


def _straighten_word_sym(word, rules, memo, kind):
    """Straighten a word of root-vector labels into PBW exponent tuples."""
    if word in memo:
        return memo[word]
    inv = None
    for i in range(len(word) - 1):
        x, y = word[i], word[i + 1]
        bad = SLOT[x] > SLOT[y] if kind == "f" else SLOT[x] < SLOT[y]
        if bad:
            inv = i
            break
    if inv is None:
        k = [0, 0, 0, 0]
        for x in word:
            k[SLOT[x]] += 1
        out = {tuple(k): RatFunc.const(1)}
        memo[word] = out
        return out
    x, y = word[inv], word[inv + 1]
    rule = rules[(x, y)]
    out = {}
    pre, post = word[:inv], word[inv + 2:]
    for k, c in rule:
        mid = _word_of(k) if kind == "f" else _eword_of(k)
        sub = _straighten_word_sym(pre + mid + post, rules, memo, kind)
        for kk, cc in sub.items():
            t = cc * c
            if kk in out:
                s = out[kk] + t
                if s:
                    out[kk] = s
                else:
                    del out[kk]
            elif t:
                out[kk] = t
    memo[word] = out
    return out


@lru_cache(maxsize=None)
def cross_table():
    """E_b * F_g normal forms for all pairs of positive-root labels."""
    exp = _f_expansions()
    fmemo, ememo = {}, {}
    table = {}
    for b in ORDER:
        eb = {}
        for w, c in exp[b].items():
            eb[tuple(reversed(w))] = c.conj()
        for g in ORDER:
            acc = {}
            for ew, ce in eb.items():
                for fw, cf in exp[g].items():
                    prod = _cross_words(ew, fw)
                    for (fm, kv, em), c in prod.items():
                        c_all = c * ce * cf
                        fparts = _straighten_word_sym(fm, f_rules(), fmemo, "f")
                        eparts = _straighten_word_sym(em, e_rules(), ememo, "e")
                        for kf, c1 in fparts.items():
                            for ke, c2 in eparts.items():
                                t = (kf, kv, ke)
                                cc = c_all * c1 * c2
                                if t in acc:
                                    s = acc[t] + cc
                                    if s:
                                        acc[t] = s
                                    else:
                                        del acc[t]
                                elif cc:
                                    acc[t] = cc
            table[(b, g)] = [(kf, kv, ke, c) for (kf, kv, ke), c in acc.items()]
    return table


# ---------------------------------------------------------------------------
# per-domain engine

def _k_sub(k, slot):
    out = list(k)
    out[slot] -= 1
    return tuple(out)


def _k_add(k, slot):
    out = list(k)
    out[slot] += 1
    return tuple(out)


def _first_slot(k):
    for label in ORDER:
        if k[SLOT[label]]:
            return label
    return None


class Engine:
    """Straightening engine bound to one scalar domain."""

    def __init__(self, domain):
        self.dom = domain
        self.f_rules = {pair: [(k, domain.from_ratfunc(c)) for k, c in terms]
                        for pair, terms in f_rules().items()}
        self.e_rules = {pair: [(k, domain.from_ratfunc(c)) for k, c in terms]
                        for pair, terms in e_rules().items()}
        self.cross = {pair: [(kf, kv, ke, domain.from_ratfunc(c))
                             for kf, kv, ke, c in terms]
                      for pair, terms in cross_table().items()}
        self._fmul = {}
        self._emul = {}
        self._ef = {}
        self._steps = 0

    def _tick(self):
        self._steps += 1
        if self._steps > STEP_BUDGET:
            raise StraighteningError("step budget exceeded")

    def _append_gen(self, k, gamma, kind):
        """Normal form of (monomial k) * (single generator gamma).

        Intermediate states are canonical exponent tuples, so the memo is
        effective and the rewriting cost stays polynomial."""
        memo = self._fmul if kind == "f" else self._emul
        key = (k, gamma)
        out = memo.get(key)
        if out is not None:
            return out
        self._tick()
        last = None
        for label in ORDER:
            if k[SLOT[label]]:
                last = label
        if kind == "e":
            ordered = last is None or SLOT[last] >= SLOT[gamma]
        else:
            ordered = last is None or SLOT[last] <= SLOT[gamma]
        if ordered:
            out = {_k_add(k, SLOT[gamma]): self.dom.one}
            memo[key] = out
            return out
        k_rest = _k_sub(k, SLOT[last])
        rule = (self.e_rules if kind == "e" else self.f_rules)[(last, gamma)]
        out = {}
        for m, c in rule:
            letters = _eword_of(m) if kind == "e" else _word_of(m)
            cur = {k_rest: c}
            for letter in letters:
                nxt = {}
                for kk, cc in cur.items():
                    for k2, c2 in self._append_gen(kk, letter, kind).items():
                        t = cc * c2
                        if k2 in nxt:
                            s = nxt[k2] + t
                            if s:
                                nxt[k2] = s
                            else:
                                del nxt[k2]
                        elif t:
                            nxt[k2] = t
                cur = nxt
            for kk, cc in cur.items():
                if kk in out:
                    s = out[kk] + cc
                    if s:
                        out[kk] = s
                    else:
                        del out[kk]
                elif cc:
                    out[kk] = cc
        memo[key] = out
        return out

    def _mono_mul(self, ka, kb, kind):
        letters = _eword_of(kb) if kind == "e" else _word_of(kb)
        cur = {ka: self.dom.one}
        for letter in letters:
            nxt = {}
            for kk, cc in cur.items():
                for k2, c2 in self._append_gen(kk, letter, kind).items():
                    t = cc * c2
                    if k2 in nxt:
                        s = nxt[k2] + t
                        if s:
                            nxt[k2] = s
                        else:
                            del nxt[k2]
                    elif t:
                        nxt[k2] = t
            cur = nxt
        return cur

    def f_mono_mul(self, ka, kb):
        if kb == ZERO4:
            return {ka: self.dom.one}
        if ka == ZERO4:
            return {kb: self.dom.one}
        return self._mono_mul(ka, kb, "f")

    def e_mono_mul(self, ka, kb):
        if kb == ZERO4:
            return {ka: self.dom.one}
        if ka == ZERO4:
            return {kb: self.dom.one}
        return self._mono_mul(ka, kb, "e")

    def mul_EF(self, kE, kF):
        """Normal form of E-monomial times F-monomial.

        Returns dict (kF', kv, kE') -> coeff."""
        if kE == ZERO4 or kF == ZERO4:
            return {(kF, (0, 0), kE): self.dom.one}
        key = (kE, kF)
        cached = self._ef.get(key)
        if cached is not None:
            return cached
        self._tick()
        x = _first_slot(kE)      # rightmost symbol of the E-word
        y = _first_slot(kF)      # leftmost symbol of the F-word
        kE_rest = _k_sub(kE, SLOT[x])
        kF_rest = _k_sub(kF, SLOT[y])
        total = {}
        for kf, kv, ke, c in self.cross[(x, y)]:
            inner1 = self.mul_EF(kE_rest, kf)
            for (kfa, kva, kea), ca in inner1.items():
                c1 = c * ca
                # kv moves left past E_kea
                sh = _phi(kv, _content_of(kea))
                if sh:
                    c1 = c1 * self.dom.q_power(-sh)
                kv1 = (kva[0] + kv[0], kva[1] + kv[1])
                emerged = self.e_mono_mul(kea, ke) if kea != ZERO4 or ke != ZERO4 \
                    else {ZERO4: self.dom.one}
                for ke2, c2 in emerged.items():
                    c3 = c1 * c2
                    inner2 = self.mul_EF(ke2, kF_rest)
                    for (kfb, kvb, keb), cb in inner2.items():
                        c4 = c3 * cb
                        sh2 = _phi(kv1, _content_of(kfb))
                        if sh2:
                            c4 = c4 * self.dom.q_power(-sh2)
                        fmerged = self.f_mono_mul(kfa, kfb)
                        for kfc, cf in fmerged.items():
                            t = (kfc, (kv1[0] + kvb[0], kv1[1] + kvb[1]), keb)
                            c5 = c4 * cf
                            if t in total:
                                s = total[t] + c5
                                if s:
                                    total[t] = s
                                else:
                                    del total[t]
                            elif c5:
                                total[t] = c5
        self._ef[key] = total
        return total

    def term_mul(self, t1, c1, t2, c2):
        """Product of two normal terms; returns dict of normal terms."""
        (kf1, kv1, ke1), (kf2, kv2, ke2) = t1, t2
        out = {}
        c = c1 * c2
        for (kfm, kvm, kem), cm in self.mul_EF(ke1, kf2).items():
            cc = c * cm
            # kv1 right past kfm; kv2 stays right of kem (move left past it)
            sh = _phi(kv1, _content_of(kfm))
            if sh:
                cc = cc * self.dom.q_power(-sh)
            sh2 = _phi(kv2, _content_of(kem))
            if sh2:
                cc = cc * self.dom.q_power(-sh2)
            kv = (kv1[0] + kvm[0] + kv2[0], kv1[1] + kvm[1] + kv2[1])
            for kfc, cf in self.f_mono_mul(kf1, kfm).items():
                ca = cc * cf
                for kec, ce in self.e_mono_mul(kem, ke2).items():
                    t = (kfc, kv, kec)
                    cb = ca * ce
                    if t in out:
                        s = out[t] + cb
                        if s:
                            out[t] = s
                        else:
                            del out[t]
                    elif cb:
                        out[t] = cb
        return out


_ENGINES = {}


def engine_for(domain):
    key = id(domain)
    if key not in _ENGINES:
        _ENGINES[key] = Engine(domain)
    return _ENGINES[key]


# ---------------------------------------------------------------------------
# public algebra elements

SO5 = "SO5"
SO23 = "SO23"

#: sign of F_beta^* = sign * E_beta under each star structure
STAR_SIGNS = {
    SO5: {1: 1, 3: 1, 4: 1, 2: 1},
    SO23: {1: -1, 3: -1, 4: -1, 2: 1},
}

GENERATOR_TERMS = {
    "X1-": ((1, 0, 0, 0), (0, 0), ZERO4),
    "X3-": ((0, 1, 0, 0), (0, 0), ZERO4),
    "X4-": ((0, 0, 1, 0), (0, 0), ZERO4),
    "X2-": ((0, 0, 0, 1), (0, 0), ZERO4),
    "X1+": (ZERO4, (0, 0), (1, 0, 0, 0)),
    "X3+": (ZERO4, (0, 0), (0, 1, 0, 0)),
    "X4+": (ZERO4, (0, 0), (0, 0, 1, 0)),
    "X2+": (ZERO4, (0, 0), (0, 0, 0, 1)),
    "K1": (ZERO4, (2, 0), ZERO4),     # q^{H1/2}
    "K1inv": (ZERO4, (-2, 0), ZERO4),
    "K2": (ZERO4, (0, 2), ZERO4),     # q^{H2/2} = q_2^{H2}
    "K2inv": (ZERO4, (0, -2), ZERO4),
}


class AlgebraElement:
    """Linear combination of normal-ordered monomials, bound to an engine."""

    __slots__ = ("eng", "terms")

    def __init__(self, eng, terms=None):
        self.eng = eng
        self.terms = dict(terms or {})

    @staticmethod
    def generator(eng, name):
        return AlgebraElement(eng, {GENERATOR_TERMS[name]: eng.dom.one})

    @staticmethod
    def from_word(eng, names):
        out = AlgebraElement(eng, {(ZERO4, (0, 0), ZERO4): eng.dom.one})
        for nm in names:
            out = out * AlgebraElement.generator(eng, nm)
        return out

    def _clean(self):
        self.terms = {t: c for t, c in self.terms.items() if c}
        return self

    def __add__(self, other):
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, self.eng.dom.zero) + c
        return AlgebraElement(self.eng, out)._clean()

    def __sub__(self, other):
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, self.eng.dom.zero) - c
        return AlgebraElement(self.eng, out)._clean()

    def __neg__(self):
        return AlgebraElement(self.eng, {t: -c for t, c in self.terms.items()})

    def scale(self, c):
        return AlgebraElement(self.eng, {t: x * c for t, x in self.terms.items()})._clean()

    def __mul__(self, other):
        out = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                for t, c in self.eng.term_mul(t1, c1, t2, c2).items():
                    if t in out:
                        s = out[t] + c
                        if s:
                            out[t] = s
                        else:
                            del out[t]
                    elif c:
                        out[t] = c
        return AlgebraElement(self.eng, out)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def adjoint(self, form=SO5):
        """Antilinear antihomomorphism for the chosen star structure.

        Normal monomials map to normal monomials with a sign, so no
        re-straightening happens here."""
        sg = STAR_SIGNS[form]
        dom = self.eng.dom
        out = {}
        for (kf, kv, ke), c in self.terms.items():
            sign = 1
            for label in ORDER:
                s = kf[SLOT[label]] + ke[SLOT[label]]
                if sg[label] < 0 and s % 2:
                    sign = -sign
            t = (ke, (-kv[0], -kv[1]), kf)
            cc = dom.conj(c)
            if sign < 0:
                cc = -cc
            out[t] = out.get(t, dom.zero) + cc
        return AlgebraElement(self.eng, out)._clean()

    def __repr__(self):
        return f"AlgebraElement({len(self.terms)} terms)"


def normal_order(x):
    """Elements are kept normal-ordered by construction; idempotent."""
    return AlgebraElement(x.eng, dict(x.terms))._clean()


def root_vectors(eng):
    """Composite root vectors and Cartan data.

    h3 = h1 + h2 and h4 = h1 + 2 h2 are returned as exponent functionals
    (coefficients of (H1, H2)); the commutators [E_b, F_b] equal the
    corresponding [h_b]-bracket up to the recorded normalization constant.
    """
    return {
        "e3": AlgebraElement.generator(eng, "X3+"),
        "e4": AlgebraElement.generator(eng, "X4+"),
        "e-3": AlgebraElement.generator(eng, "X3-"),
        "e-4": AlgebraElement.generator(eng, "X4-"),
        "h3": (Fraction(1), Fraction(1, 2)),
        "h4": (Fraction(1), Fraction(1)),
    }
