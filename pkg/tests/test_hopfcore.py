import pytest
from hypothesis import given, strategies as st

from conftest import F3, F5, ORACLES, Q
from hopfbrace import fixtures as fx, hopfcore as hc
from hopfbrace.lintensor import Matrix, compose, convolution, conv_unit, mor_eq, tensor
from hopfbrace.morphlang.groups import builtin
from hopfbrace.report import BadCharacteristic, NoAntipode

FIX = {F: fx.hopf_fixtures(F) for F in (Q, F3, F5)}
ALL = [(str(F), name) for F, d in FIX.items() for name in d]


def get(fname, name):
    return next(d for F, d in FIX.items() if str(F) == fname)[name]


@pytest.mark.parametrize("fname,name", ALL)
def test_builtins_are_hopf(fname, name):
    H = get(fname, name)
    rep = hc.check_hopf(H)
    assert rep.passed, rep.summary()
    assert hc.verify_antipode(H)


def test_sweedler_antipode_matches_hand_computation():
    want = ORACLES["sweedler_antipode"]
    for F in (Q, F3, F5):
        H = hc.sweedler4(F)
        labs = H.space.labels
        for src, img in want.items():
            col = H.lam.col((labs.index(src),))
            assert col == {(labs.index(k),): F.norm(v) for k, v in img.items()}


def test_sweedler_antipode_has_order_four():
    H = hc.sweedler4(Q)
    lam2 = compose(H.lam, H.lam)
    assert not mor_eq(lam2, H.id)
    assert mor_eq(compose(lam2, lam2), H.id)
    assert not hc.is_commutative(H) and not hc.is_cocommutative(H)


def test_sweedler_needs_odd_characteristic():
    with pytest.raises(BadCharacteristic):
        hc.sweedler4(hc.FieldSpec.prime(2))


@pytest.mark.parametrize("g", fx.SMALL_GROUPS)
def test_group_algebra_shape(g):
    G = builtin(g)
    H = hc.group_algebra(G, Q)
    assert hc.is_cocommutative(H)
    assert hc.is_commutative(H) == ORACLES["groups"][g]["abelian"]
    D = hc.dual_group_algebra(G, Q)
    assert hc.is_commutative(D)
    assert hc.is_cocommutative(D) == ORACLES["groups"][g]["abelian"]


@pytest.mark.parametrize("g", fx.SMALL_GROUPS)
def test_transposed_dual_is_function_algebra(g):
    G = builtin(g)
    H = hc.group_algebra(G, Q)
    D, Fun = hc.dual_hopf(H), hc.dual_group_algebra(G, Q)
    for a in ("eta", "mu", "eps", "delta", "lam"):
        assert mor_eq(getattr(D, a), getattr(Fun, a).retype(getattr(D, a).dom, getattr(D, a).cod)), a
    assert hc.check_hopf(hc.hat_dual(H)).passed
    assert hc.check_hopf(hc.cop_dual(H)).passed


def test_hat_dual_is_dual_with_opposite_coproduct():
    for g in ("S3", "C3"):
        H = hc.group_algebra(builtin(g), Q)
        hat, D = hc.hat_dual(H), hc.dual_hopf(H)
        for a in ("eta", "mu", "eps", "lam"):
            assert mor_eq(getattr(hat, a), getattr(D, a)), a
        assert mor_eq(hat.delta, compose(D.c, D.delta))
        assert bool(mor_eq(hat.delta, D.delta)) == (g == "C3")


@pytest.mark.parametrize("name", ["sweedler", "F[S3]", "F[S3]*"])
def test_op_cop_and_duals_are_hopf(name):
    H = FIX[F5][name]
    for X in (hc.op_hopf(H), hc.cop_hopf(H), hc.dual_hopf(H), hc.hat_dual(H), hc.dual_hopf(hc.dual_hopf(H))):
        rep = hc.check_hopf(X)
        assert rep.passed, rep.summary()


def test_double_transpose_returns_the_structure():
    H = hc.sweedler4(Q)
    DD = hc.dual_hopf(hc.dual_hopf(H))
    for a in ("mu", "delta", "lam"):
        assert getattr(DD, a).materialize().flat_columns() == getattr(H, a).materialize().flat_columns()


def test_monoid_without_antipode():
    # {1, 0} under multiplication: a bialgebra, not a Hopf algebra
    M = hc.monoid_bialgebra(["1", "0"], [[0, 1], [1, 1]], Q)
    assert hc.check_bialgebra(M).passed
    rep = hc.check_hopf(M)
    assert not rep.passed and rep.failed() == ["antipode exists"]
    with pytest.raises(NoAntipode):
        hc.compute_antipode(M)
    with pytest.raises(NoAntipode):
        M.require_antipode()


def test_with_antipode_fills_in():
    G = builtin("C4")
    H = hc.group_algebra(G, Q)
    bare = hc.HopfAlgebraData(H.name, H.space, Q, H.eta, H.mu, H.eps, H.delta)
    full = bare.with_antipode()
    assert mor_eq(full.lam, H.lam) and mor_eq(full.lam_inv, H.lam)


@given(st.sampled_from(["F[S3]", "F[C2xC2]", "sweedler", "F[S3]*"]), st.data())
def test_antipode_is_basis_independent(name, data):
    H = FIX[Q][name]
    perm = data.draw(st.permutations(range(H.dim)))
    R = fx.relabel(H, perm)
    assert hc.check_hopf(R).passed
    assert mor_eq(hc.compute_antipode(R), R.lam)


# mutations: every corrupted coefficient is caught, with a witness that really differs

MAPS = ("eta", "mu", "eps", "delta", "lam")


@given(st.sampled_from(["F[C2]", "F[C3]", "F[S3]", "F[S3]*", "sweedler"]), st.sampled_from(MAPS),
       st.data())
def test_mutation_is_detected(name, which, data):
    H = FIX[F5][name]
    m = getattr(H, which).materialize()
    dom = data.draw(st.sampled_from(list(m.basis_keys())))
    cod = data.draw(st.sampled_from(list(Matrix(m.cod, m.cod, m.field, {}).basis_keys())))
    delta = data.draw(st.integers(1, 4))
    bad = m.with_entry(dom, cod, m.col(dom).get(cod, 0) + delta)
    M = hc.HopfAlgebraData(H.name, H.space, H.field,
                           **{a: (bad if a == which else getattr(H, a)) for a in MAPS}, lam_inv=None)
    rep = hc.check_hopf(M)
    assert not rep.passed
    for law in rep.laws:
        assert (law.witness is None) == law.passed
    w = next(l.witness for l in rep.laws if not l.passed)
    assert w["lhs"] != w["rhs"]


# convolution


@given(st.sampled_from(["sweedler", "F[S3]"]), st.data())
def test_convolution_is_associative_with_unit(name, data):
    H = FIX[F5][name]
    n = H.dim

    def endo():
        cols = {j: {i: data.draw(st.integers(0, 4)) for i in range(n)} for j in range(n)}
        return Matrix.from_flat((H.space,), (H.space,), H.field, cols)

    f, g, h = endo(), endo(), endo()
    u = conv_unit(H, H)
    assert mor_eq(convolution(convolution(f, g, H, H), h, H, H), convolution(f, convolution(g, h, H, H), H, H))
    assert mor_eq(convolution(u, f, H, H), f)
    assert mor_eq(convolution(f, u, H, H), f)


# actions


@pytest.mark.parametrize("g", fx.SMALL_GROUPS)
def test_adjoint_action_is_conjugation(g):
    G = builtin(g)
    H = hc.group_algebra(G, Q)
    ad = hc.adjoint_action(H)
    table = ORACLES["groups"][g]["table"]
    inv = ORACLES["groups"][g]["inverse"]
    labs = H.space.labels
    for x in labs:
        for y in labs:
            want = table[f"{table[f'{x}|{y}']}|{inv[x]}"]
            assert ad.map.col((labs.index(x), labs.index(y))) == {(labs.index(want),): 1}
    assert hc.check_module_algebra(ad).passed
    assert hc.check_module_coalgebra(ad).passed
    assert hc.check_cocom_class(ad).passed


def test_adjoint_of_sweedler_is_module_algebra():
    H = hc.sweedler4(Q)
    assert hc.check_module_algebra(hc.adjoint_action(H)).passed


@pytest.mark.parametrize("name", ["F[S3]", "sweedler", "F[C3]*"])
def test_trivial_actions(name):
    H = FIX[Q][name]
    A = FIX[Q]["F[C2xC2]"]
    for act in (hc.trivial_left_action(H, A), hc.trivial_right_action(H, A)):
        assert hc.check_module(act).passed
        assert hc.check_module_algebra(act).passed
        assert hc.check_module_coalgebra(act).passed
    assert hc.check_cocom_class(hc.trivial_left_action(H, A)).passed


@pytest.mark.parametrize("h,a", [("C2", "C2xC2"), ("C2", "C3"), ("C3", "C2xC2"), ("C2", "S3")])
def test_automorphism_actions(h, a):
    GH, GA = builtin(h), builtin(a)
    H, A = hc.group_algebra(GH, Q), hc.group_algebra(GA, Q)
    auts = fx.group_automorphisms(GA)
    assert len(auts) == ORACLES["groups"][a]["automorphisms"]
    homs = fx.homomorphisms_to_aut(GH, auts)
    assert homs
    for images in homs:
        act = fx.automorphism_action(A, H, images)
        assert hc.check_module_algebra(act).passed
        assert hc.check_module_coalgebra(act).passed
        # automatic for a cocommutative acting algebra
        assert hc.check_cocom_class(act).passed


def test_not_an_action_is_caught():
    G = builtin("C3")
    H, A = hc.group_algebra(G, Q), hc.group_algebra(builtin("C2"), Q)
    # a1 and a2 both swap: a2 = a1·a1 should act as the identity
    act = fx.automorphism_action(A, H, {0: (0, 1), 1: (1, 0), 2: (1, 0)})
    rep = hc.check_module(act)
    assert rep.failed() == ["action associativity"]


def test_sweedler_adjoint_is_outside_the_class():
    # ad_x(g) = xg - gx = -2gx, so at x⊗g the two sides are
    # 1⊗(-2gx) + x⊗g and g⊗(-2gx) + x⊗g
    H = hc.sweedler4(Q)
    ad = hc.adjoint_action(H)
    rep = hc.check_cocom_class(ad)
    law = rep.law("class condition")
    assert not law.passed
    assert law.witness["labels"] == ["x", "g"]
    assert law.witness["lhs"] == [[["1", "gx"], "-2"], [["x", "g"], "1"]]
    assert law.witness["rhs"] == [[["g", "gx"], "-2"], [["x", "g"], "1"]]
    assert hc.check_module_coalgebra(ad).failed() == ["coproduct compatibility"]
