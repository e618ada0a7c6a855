"""Irreducible quotients: characters, unitarity, physical representations."""

from fractions import Fraction

import pytest

from qads.b2 import Weight, strongly_linked
from qads.cyclo import QParams
from qads.uqso5.irreps import (irrep_character, physical_rep,
                               singular_vectors, sweep_module, unitarity_so5)

P12 = QParams(12, 1)
P8 = QParams(8, 1)


def test_trivial_character():
    rep = irrep_character(Weight.of(0, 0), P12)
    assert rep.dim == 1 and rep.complete
    assert rep.character == {(0, 0): 1}


def test_vector_and_spinor_dimensions():
    rep = irrep_character(Weight.of(1, 0), P12)
    assert rep.dim == 5 and rep.complete
    rep = irrep_character(Weight.of(Fraction(1, 2), Fraction(1, 2)), P12)
    assert rep.dim == 4 and rep.complete
    assert set(rep.character.values()) == {1}


def test_singular_vectors_examples():
    # lam = 0: classical reflections about -rho give -a1, -a2
    sv = singular_vectors(Weight.of(0, 0), P8, 2)
    etas = sorted(tuple(map(int, s["eta"].alpha)) for s in sv)
    assert etas == [(0, 1), (1, 0)]
    # compact generic: classical singular vector at depth (lam, a1)+1 steps of a1
    lam = Weight.of(3, 1)      # (lam, a1) = 2
    sv = singular_vectors(lam, P12, 3)
    etas = [tuple(map(int, s["eta"].alpha)) for s in sv]
    assert (3, 0) in etas


def test_rac_singular_vector():
    # non-integral border weight: singular vector at 2*b3 within depth 4
    m = 12
    lam = Weight.of(Fraction(m - 1, 2), 0)
    sv = singular_vectors(lam, P12, 4)
    etas = [tuple(map(int, s["eta"].alpha)) for s in sv]
    assert (2, 2) in etas          # 2*b3 = 2a1 + 2a2


def test_singular_weights_strongly_linked():
    for lam in (Weight.of(2, 1), Weight.of(3, 0), Weight.of(4, 1)):
        sv = singular_vectors(lam, P12, 5)
        linked = strongly_linked(lam, P12, 5)
        for s in sv:
            assert s["weight"] in linked


def test_unitarity_compact_examples():
    rep = unitarity_so5(Weight.of(0, 0), P12)
    assert rep.unitary
    rep = unitarity_so5(Weight.of(Fraction(1, 2), Fraction(1, 2)), P12)
    assert rep.unitary
    # basic non-compact at m=8: negative pivot
    rep = unitarity_so5(Weight.of(1, 2), P8)
    assert rep.unitary is False
    assert rep.first_negative is not None


def test_massless_family_case_a():
    rep = unitarity_so5(Weight.of(4, 1), P12)
    assert rep.unitary and rep.complete
    assert rep.classification["special_case"] == "a"
    assert rep.classification["extra_singular_at_b4"] is True
    assert rep.dim == 124


def test_physical_massless_gauge():
    rep = physical_rep((2, 1), P12)
    assert rep.unitary
    assert rep.classification["massless"]
    assert rep.gauge["lowest_weight"] == ("3", "0")
    assert rep.gauge["dimension"] == 30
    assert rep.dim == 124


def test_physical_rac_di():
    rac = physical_rep((Fraction(1, 2), 0), P12)
    assert rac.unitary and rac.classification["rac"]
    assert set(rac.character.values()) == {1}
    di = physical_rep((1, Fraction(1, 2)), P12)
    assert di.unitary and di.classification["di"]
    assert set(di.character.values()) == {1}


def test_physical_generic_submodule_structure():
    # (3,1): non-massless; factoring a submodule with lowest weight
    # (E0, -(s+1)) means a singular vector at (2s+1)*b2 in the flipped
    # picture, and no gauge vector at b4
    rep = physical_rep((3, 1), P12)
    assert rep.unitary and rep.gauge is None
    etas = [e for e, _ in rep.singular_weights]
    assert (0, 3) in etas
    assert (1, 2) not in etas


def test_physical_rejects_nonintegral_nonsingleton():
    rep = physical_rep((Fraction(3, 2), 0), P12)
    assert rep.classification["flag"] == "unsupported"
    assert rep.unitary is None


def test_shift_equivalence_spot_checks():
    # done internally by physical_rep (asserts agreement); exercise a few
    for mu in ((2, 1), (3, 0), (4, 2)):
        rep = physical_rep(mu, P12)
        assert rep.classification["shift_verdict"] == rep.unitary


def test_character_stability_across_m():
    """Low-energy character data stabilizes as m grows (classical limit)."""
    mus = (2, 1)
    counts = {}
    for m in (8, 12, 16):
        p = QParams(m, 1)
        rep = physical_rep(mus, p, check_shift=False)
        # multiplicities of the three lowest energy layers (eta height <= 2)
        low = {k: v for k, v in rep.character.items() if k[0] + k[1] <= 2}
        counts[m] = low
    assert counts[8] == counts[12] == counts[16]
