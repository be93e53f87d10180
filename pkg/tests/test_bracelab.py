import pytest
from hypothesis import given, settings, strategies as st

from conftest import Q, F5
from hopfbrace import bracelab as bl, crossprod as cp, envs, fixtures as fx, hopfcore as hc
from hopfbrace.lintensor import Matrix, mor_eq, tensor
from hopfbrace.morphlang.groups import builtin
from hopfbrace.report import (
    InvalidBrace, InvalidInput, NotCocommutative, NotInCocommutativityClass,
)

BRACES = dict(envs.brace_fixtures(Q))
TABLES4 = fx.relabelled_groups(4)


@pytest.mark.parametrize("label", sorted(BRACES))
def test_fixture_braces(label):
    b = BRACES[label]
    rep = bl.check_brace(b)
    assert rep.passed, rep.summary()
    assert bl.check_brace_alt(b).passed
    assert bl.check_mu2_reconstruction(b).passed


@pytest.mark.parametrize("name", ["F[S3]", "sweedler", "F[S3]*"])
def test_trivial_brace_gamma_is_counit_action(name):
    H = fx.hopf_fixtures(Q)[name]
    b = bl.trivial_brace(H)
    assert mor_eq(bl.gamma(b), tensor(H.eps, H.space))
    assert bl.check_brace(b).passed


@settings(max_examples=40)
@given(st.sampled_from(TABLES4), st.sampled_from(TABLES4))
def test_group_tables_form_a_brace_iff_skew_brace(add, circ):
    b = envs._wb(fx.group_brace(add, circ, Q))
    assert bl.check_brace(b).passed == fx.is_skew_brace(add, circ)
    assert bl.check_brace_alt(b).passed == fx.is_skew_brace(add, circ)


@pytest.mark.parametrize("k", range(3))
def test_gamma_on_skew_braces(k):
    add, circ = [p for p in fx.skew_brace_pairs(4) if p[0].table != p[1].table][k]
    b = envs._wb(fx.group_brace(add, circ, Q))
    G, Gp = bl.gamma(b), bl.gamma_prime(b)
    for a in range(4):
        for c in range(4):
            ab = circ.mul(a, c)
            # Γ(a⊗b) = a⁻¹·(a∘b), Γ′(a⊗b) = (a∘b)·a⁻¹ in the additive group
            assert G.col((a, c)) == {(add.mul(add.inv(a), ab),): 1}
            assert Gp.col((a, c)) == {(add.mul(ab, add.inv(a)),): 1}


def test_phi_right_on_a_trivial_brace_is_conjugation():
    G = builtin("S3")
    H = hc.group_algebra(G, Q)
    phi = bl.phi_right(bl.trivial_brace(H))
    for a in range(6):
        for c in range(6):
            assert phi.map.col((a, c)) == {(G.mul(G.mul(G.inv(c), a), c),): 1}
    assert hc.check_module(phi).passed
    with pytest.raises(NotCocommutative):
        bl.phi_right(bl.trivial_brace(hc.sweedler4(Q)))


def test_brace_needs_a_shared_coalgebra():
    A, B = hc.group_algebra(builtin("C2xC2"), Q), hc.dual_group_algebra(builtin("C2xC2"), Q)
    with pytest.raises(InvalidBrace):
        bl.HopfBraceData(A, hc.on_space(B, A.space))
    with pytest.raises(InvalidBrace):
        bl.HopfBraceData(A, hc.group_algebra(builtin("C4"), Q))
    with pytest.raises(InvalidBrace):
        bl.HopfBraceData(A, hc.group_algebra(builtin("C2xC2"), F5))


@settings(max_examples=40)
@given(st.sampled_from(sorted(k for k in BRACES if "skew" in k)), st.sampled_from(["first", "second"]),
       st.data())
def test_corrupted_brace_is_caught(label, side, data):
    b = BRACES[label]
    H = getattr(b, side)
    m = H.mu.materialize()
    key = data.draw(st.sampled_from(sorted(m.cols)))
    tgt = data.draw(st.sampled_from([(i,) for i in range(H.dim)]))
    bad_mu = m.with_entry(key, tgt, m.col(key).get(tgt, 0) + data.draw(st.integers(1, 3)))
    bad = hc.HopfAlgebraData(H.name, H.space, Q, H.eta, bad_mu, H.eps, H.delta, H.lam, H.lam_inv)
    nb = bl.HopfBraceData(bad, b.second) if side == "first" else bl.HopfBraceData(b.first, bad)
    rep = bl.check_brace(nb)
    assert not rep.passed
    for law in rep.laws:
        assert (law.witness is None) == law.passed
        if law.witness:
            assert law.witness["lhs"] != law.witness["rhs"]
    alt = bl.check_brace_alt(nb)
    for law in alt.laws:
        assert (law.witness is None) == law.passed


def test_checker_preconditions():
    Sw = hc.sweedler4(Q)
    C2 = hc.group_algebra(builtin("C2"), Q)
    with pytest.raises(NotCocommutative):
        bl.check_E1_E2(bl.trivial_brace(C2), bl.trivial_brace(Sw), cp.trivial_pair(C2, Sw))
    C3 = hc.group_algebra(builtin("C3"), Q)
    with pytest.raises(InvalidInput):
        bl.check_E1_E2(bl.trivial_brace(C2), bl.trivial_brace(C3), cp.trivial_pair(C3, C3))
    dt_sw = dict(envs.valid_pairs(Q))["DT sweedler"]
    with pytest.raises(NotInCocommutativityClass):
        bl.check_z1_z2(dt_sw)
    S3 = hc.group_algebra(builtin("S3"), Q)
    with pytest.raises(InvalidInput):
        bl.check_tensor_bicrossed_hypotheses(bl.trivial_brace(C2), S3, cp.trivial_pair(C2, S3))
    bad_phi2 = hc.adjoint_action(Sw)
    with pytest.raises(InvalidInput):
        bl.check_C1_smash(cp.trivial_pair(Sw, Sw), bad_phi2)


def test_smash_class_brace():
    mp = fx.conjugation_pair(builtin("S3"), Q)
    b = bl.build_brace_smash_class(mp.A, mp.H, mp.phi_A)
    assert bl.check_brace(b).passed
    assert bl.check_z1_z2(mp).passed
    cls_b = bl.build_brace_tensor_bicrossed_class(mp)
    assert mor_eq(cls_b.second.mu, b.second.mu)


def test_corollary_hypotheses_on_fixtures():
    n1 = sum(1 for _ in envs.fixture_envs("agore1"))
    n2 = sum(1 for _ in envs.fixture_envs("agore2"))
    assert n1 > 0 and n2 > 0
    for label, (brA, brH, mp1, phi2) in envs.mainth_fixtures(Q):
        if brA.first is brA.second:
            hyp = bl.check_bicrossed_smash_hypotheses(brA.first, brH, mp1, phi2)
            if hyp.passed:
                # sufficient conditions: the brace must then exist
                b = bl.HopfBraceData(cp.bicrossed(mp1, force=True),
                                     cp.smash(brA.first, brH.second, phi2, force=True))
                assert bl.check_brace(b).passed, label
    for label, (brA, brH, mp) in envs.mainth2_fixtures(Q):
        H = brH.first
        if brH.first is brH.second and hc.is_commutative(H):
            if bl.check_tensor_bicrossed_hypotheses(brA, H, mp).passed:
                b = bl.HopfBraceData(cp.tensor_hopf(brA.first, H), cp.bicrossed(mp, force=True))
                assert bl.check_brace(b).passed, label
