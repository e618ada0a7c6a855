"""Verma weight spaces, invariant forms, determinant comparisons."""

from fractions import Fraction

from qads.b2 import RHO, Weight, par_count
from qads.cyclo import QParams
from qads.scalars import CycloDomain, SymbolicDomain
from qads.uqso5.algebra import SO5, SO23
from qads.uqso5.verma import (VermaModule, gram_det, gram_det_ord,
                              shapovalov_det_formula, verify_det,
                              _formula_ord_root_of_unity)

SYM = SymbolicDomain()


def test_weight_space_dimensions_match_par():
    p = QParams(8, 1)
    vm = VermaModule(CycloDomain(p), Weight.of(2, 1))
    for a in range(4):
        for b in range(5):
            eta = Weight.from_alpha(a, b)
            assert len(vm.basis(eta)) == par_count(eta)


def test_gram_top_and_alpha1():
    lam = Weight.of(3, 1)
    vm = VermaModule(SYM, lam)
    G0 = vm.gram(Weight.from_alpha(0, 0))
    assert G0 == [[SYM.one]]
    G1 = vm.gram(Weight.from_alpha(1, 0))
    # single factor [ (lam, a1) ]_q = [2]_q = q + 1/q
    expect = SYM.q_power(1) + SYM.q_power(-1)
    assert G1 == [[expect]]
    assert len(vm.gram(Weight.from_alpha(1, 1))) == 2


def test_gram_hermitian_at_root_of_unity():
    p = QParams(12, 1)
    dom = CycloDomain(p)
    for form in (SO5, SO23):
        vm = VermaModule(dom, Weight.of(2, 1), form)
        for eta_a in ((1, 1), (1, 2), (2, 2)):
            G = vm.gram(Weight.from_alpha(*eta_a))
            n = len(G)
            for i in range(n):
                for j in range(n):
                    assert G[i][j] == G[j][i].conjugate()


def test_invariance_identity_on_weight_spaces():
    """(u, f_i . v) = (theta(f_i) . u, v) checked directly: the matrix of
    f_i from eta to eta+alpha_i pairs with the raising matrix."""
    p = QParams(12, 1)
    dom = CycloDomain(p)
    vm = VermaModule(dom, Weight.of(2, 1), SO5)
    from qads.b2 import ALPHA1, ALPHA2, par_tuples
    for eta_a, i in (((1, 0), 1), ((1, 1), 2), ((1, 1), 1), ((2, 1), 2)):
        eta = Weight.from_alpha(*eta_a)
        root = ALPHA1 if i == 1 else ALPHA2
        eta2 = eta + root
        src = par_tuples(eta)
        dst = par_tuples(eta2)
        idx2 = {k: t for t, k in enumerate(dst)}
        G2 = vm.gram(eta2)
        G1 = vm.gram(eta)
        kg = (1, 0, 0, 0) if i == 1 else (0, 0, 0, 1)
        # F matrix: f_i . (basis of eta) expanded at eta2
        Fm = [[dom.zero] * len(src) for _ in range(len(dst))]
        for c, k in enumerate(src):
            for kf, cf in vm.eng.f_mono_mul(kg, k).items():
                Fm[idx2[kf]][c] = Fm[idx2[kf]][c] + cf
        # E matrix: e_i . (basis of eta2) expanded at eta
        Em, _, _ = vm.raise_matrix(eta2, i)
        # (F u, v) = (u, E v): F^H G2 = G1 E
        lhs = [[sum([Fm[t][a0].conjugate() * G2[t][b0] for t in range(len(dst))],
                    dom.zero) for b0 in range(len(dst))] for a0 in range(len(src))]
        rhs = [[sum([G1[a0][t] * Em[t][b0] for t in range(len(src))], dom.zero)
                for b0 in range(len(dst))] for a0 in range(len(src))]
        assert lhs == rhs


def test_det_formula_examples():
    lam = Weight.of(3, 1)
    # eta = 0: empty product
    assert shapovalov_det_formula(SYM, lam, Weight.from_alpha(0, 0)) == SYM.one
    # eta = a1: single factor proportional to [(lam, a1)]
    f = shapovalov_det_formula(SYM, lam, Weight.from_alpha(1, 0))
    assert f == SYM.q_power(1) + SYM.q_power(-1)


def test_verify_det_generic():
    lam = Weight.of(3, 1)
    for eta_a in ((1, 0), (0, 1), (1, 1), (1, 2), (2, 2)):
        rep = verify_det(lam, Weight.from_alpha(*eta_a), SYM)
        assert rep["match"], (eta_a, rep)


def test_verify_det_at_roots_of_unity():
    lam = Weight.of(3, 1)
    for m in (8, 12):
        p = QParams(m, 1)
        dom = CycloDomain(p)
        for eta_a in ((1, 0), (1, 1), (1, 2), (2, 2)):
            rep = verify_det(lam, Weight.from_alpha(*eta_a), dom, p)
            assert rep["match"], (m, eta_a, rep)


def test_massless_vanishing_and_order():
    # border family weight: the determinant at eta = b4 vanishes to first
    # order along the deformation, on both sides
    p = QParams(12, 1)
    dom = CycloDomain(p)
    lam = Weight.of(4, 1)
    eta = Weight.from_alpha(1, 2)
    det = gram_det(dom, lam, eta)
    assert det.is_zero()
    assert shapovalov_det_formula(dom, lam, eta).is_zero()
    assert _formula_ord_root_of_unity(lam, eta, p) == 1
    assert gram_det_ord(lam, eta, p) == 1
    rep = verify_det(lam, eta, dom, p)
    assert rep["match"] and rep["vanishing_order"] == (1, 1)


def test_calibration_unit_shape():
    from qads.uqso5.verma import calibration_unit
    ratio, shape = calibration_unit(Weight.from_alpha(1, 2))
    sign, t, b = shape
    assert sign == 1 and b == 2       # [2]^2 from the long-root normalization
    _, shape0 = calibration_unit(Weight.from_alpha(1, 1))
    assert shape0 == (1, 0, 0)        # no unit at all below b4
