"""The Drinfeld double and the brace conditions attached to it.

The dual H* is a single atomic space with basis f_i dual to e_i.  The pairing
maps are concrete:

    coeval: K -> H*⊗H,  1 ↦ Σ f_i⊗e_i
    eval:   H⊗H* -> K,  e_i⊗f_j ↦ δ_ij
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .crossprod import MatchedPairData, bicrossed, check_matched_pair, psi, tensor_hopf
from .hopfcore import (
    HopfAlgebraData, adjoint_map, is_cocommutative, is_commutative, left_action,
    hat_dual, right_action,
)
from .lintensor import (
    K, Matrix, Morphism, Space, compose, conv_unit, convolution, dual_space,
    symmetry, tensor, unravel,
)
from .report import CheckReport, NotCocommutative, NotConvolutionInverse, InvalidInput, run_laws


def coeval(H: HopfAlgebraData) -> Matrix:
    X = H.space
    D = dual_space(X)
    dims = [a.dim for a in X.atoms]
    col = {(i,) + unravel(i, dims): 1 for i in range(X.dim)}
    return Matrix(K, (D, X), H.field, {(): col})


def eval_map(H: HopfAlgebraData) -> Matrix:
    X = H.space
    D = dual_space(X)
    dims = [a.dim for a in X.atoms]
    cols = {unravel(i, dims) + (i,): {(): 1} for i in range(X.dim)}
    return Matrix((X, D), K, H.field, cols)


def hat_dual_from_pairing(H: HopfAlgebraData) -> HopfAlgebraData:
    """Ĥ assembled from coeval/eval composites; equals hopfcore.hat_dual."""
    X = H.space
    D = dual_space(X)
    a, b = coeval(H), eval_map(H)
    cd = compose(H.c, H.delta)
    mu = compose(tensor(D, b), tensor(D, X, b, D), tensor(compose(tensor(D, cd), a), D, D))
    delta = compose(tensor(D, D, compose(b, tensor(H.mu, D))),
                    tensor(compose(tensor(D, a, X), a), D))
    eta = compose(tensor(D, H.eps), a)
    eps = compose(b, tensor(H.eta, D))
    lam = compose(tensor(D, b), tensor(D, H.require_lam_inv(), D), tensor(a, D))
    lam_inv = compose(tensor(D, b), tensor(D, H.require_antipode(), D), tensor(a, D))
    m = lambda f, d, c: f.materialize().retype(d, c)
    return HopfAlgebraData(f"{H.name}^", D, H.field, m(eta, K, (D,)), m(mu, (D, D), (D,)),
                           m(eps, (D,), K), m(delta, (D,), (D, D)), m(lam, (D,), (D,)),
                           m(lam_inv, (D,), (D,)))


def Rmap(H: HopfAlgebraData) -> Matrix:
    """R = μ∘c∘(μ⊗λ⁻¹)∘(H⊗δ) : H⊗H -> H."""
    X = H.space
    return compose(H.mu, H.c, tensor(H.mu, H.require_lam_inv()), tensor(X, H.delta)).materialize()


def Rbar(H: HopfAlgebraData) -> Matrix:
    """R̄ = (H⊗(μ∘(λ⁻¹⊗H)))∘(δ⊗H)∘c∘δ : H -> H⊗H."""
    X = H.space
    return compose(tensor(X, compose(H.mu, tensor(H.require_lam_inv(), X))),
                   tensor(H.delta, X), H.c, H.delta).materialize()


def Smap(H: HopfAlgebraData) -> Matrix:
    """S = (μ⊗H)∘(λ⊗R̄)∘δ : H -> H⊗H."""
    X = H.space
    return compose(tensor(H.mu, X), tensor(H.require_antipode(), Rbar(H)), H.delta).materialize()


def Jmap(H: HopfAlgebraData) -> Matrix:
    """J = (H⊗(μ∘(λ⁻¹⊗H)))∘(δ⊗H)∘c∘(μ⊗H)∘(H⊗δ) : H⊗H -> H⊗H."""
    X = H.space
    return compose(tensor(X, compose(H.mu, tensor(H.require_lam_inv(), X))), tensor(H.delta, X),
                   H.c, tensor(H.mu, X), tensor(X, H.delta)).materialize()


def dt_actions(H: HopfAlgebraData, hat: HopfAlgebraData | None = None) -> MatchedPairData:
    """(Ĥ, H, φ_Ĥ, φ_H) with (h·f)(x) = f(R(x⊗h)) and φ_H = (H⊗b)∘(R̄⊗H*)."""
    hat = hat_dual(H) if hat is None else hat
    X, D = H.space, hat.space
    a, b = coeval(H), eval_map(H)
    phi_hat = compose(tensor(D, b), tensor(D, Rmap(H), D), tensor(a, X, D))
    phi_h = compose(tensor(X, b), tensor(Rbar(H), D))
    return MatchedPairData(hat, H, left_action(H, hat, phi_hat, "phiHat"),
                           right_action(H, hat, phi_h, "phiH"), f"DT({H.name})")


def double_matched(H: HopfAlgebraData, jobs=None, force: bool = False) -> HopfAlgebraData:
    return bicrossed(dt_actions(H), force=force, name=f"D({H.name})", jobs=jobs)


def T_of(H: HopfAlgebraData, hat: HopfAlgebraData | None = None) -> HopfAlgebraData:
    hat = hat_dual(H) if hat is None else hat
    return tensor_hopf(hat, H, name=f"T({H.name})")


def omega(H: HopfAlgebraData, hat: HopfAlgebraData | None = None):
    """ω = ε_Ĥ⊗b⊗ε_H and ω⁻¹ = ε_Ĥ⊗(b∘(λ⁻¹⊗H*))⊗ε_H on T(H)⊗T(H)."""
    hat = hat_dual(H) if hat is None else hat
    D = hat.space
    b = eval_map(H)
    T = Space_T(H, hat)
    w = tensor(hat.eps, b, H.eps).materialize().retype((T, T), K)
    winv = tensor(hat.eps, compose(b, tensor(H.require_lam_inv(), D)), H.eps).materialize().retype((T, T), K)
    return w, winv


def Space_T(H, hat):
    return Space.product(hat.space, H.space)


class _Coalg:
    def __init__(self, eps, delta):
        self.eps, self.delta = eps, delta


class _Ground:
    def __init__(self, field):
        self.mu = Matrix((), (), field, {(): {(): 1}})
        self.eta = Matrix((), (), field, {(): {(): 1}})


def tensor_coalgebra(A: HopfAlgebraData):
    """δ_{A⊗A} = (A⊗c⊗A)∘(δ⊗δ) and ε⊗ε on A⊗A."""
    X = A.space
    delta = compose(tensor(X, A.c, X), tensor(A.delta, A.delta)).materialize()
    return _Coalg(tensor(A.eps, A.eps).materialize(), delta)


def deform(A: HopfAlgebraData, sigma: Morphism, sigma_inv: Morphism, check: bool = True,
           name: str | None = None) -> HopfAlgebraData:
    """A^σ: μ^σ = (σ⊗μ⊗σ⁻¹)∘(A⊗A⊗δ_{A⊗A})∘δ_{A⊗A}, λ^σ = (f⊗((λ⊗f⁻¹)∘δ))∘δ."""
    X = A.space
    F = A.field
    cc = tensor_coalgebra(A)
    if check:
        ground = _Ground(F)
        unit = conv_unit(cc, ground)
        rep = run_laws("cocycle inverse", [
            ("σ∗σ⁻¹ = ε⊗ε", convolution(sigma, sigma_inv, cc, ground), unit),
            ("σ⁻¹∗σ = ε⊗ε", convolution(sigma_inv, sigma, cc, ground), unit),
            ("σ normal on the left", compose(sigma, tensor(A.eta, X)), A.eps),
            ("σ normal on the right", compose(sigma, tensor(X, A.eta)), A.eps),
        ])
        if not rep.passed:
            raise NotConvolutionInverse(f"bad cocycle: {', '.join(rep.failed())}", rep)
    mu = compose(tensor(sigma, A.mu, sigma_inv), tensor(X, X, cc.delta), cc.delta).materialize()
    lam = A.require_antipode()
    f = compose(sigma, tensor(X, lam), A.delta)
    finv = compose(sigma_inv, tensor(lam, X), A.delta)
    lam_s = compose(tensor(f, compose(tensor(lam, finv), A.delta)), A.delta).materialize()
    out = replace(A, name=name or f"{A.name}^σ", mu=mu.retype((X, X), (X,)),
                  lam=lam_s.retype((X,), (X,)), lam_inv=None)
    try:
        return out.with_antipode()
    except Exception:
        return out


def double_deformed(H: HopfAlgebraData) -> HopfAlgebraData:
    hat = hat_dual(H)
    w, winv = omega(H, hat)
    return deform(T_of(H, hat), w, winv, name=f"D({H.name})")


def prod_formula(H: HopfAlgebraData, hat: HopfAlgebraData) -> Morphism:
    """μ_D = μ_T∘(H*⊗((b⊗H⊗H*)∘(δ_{H⊗Ĥ}⊗(b∘(λ⁻¹⊗H*)))∘δ_{H⊗Ĥ})⊗H)."""
    X, D = H.space, hat.space
    F = H.field
    b = eval_map(H)
    T = T_of(H, hat)
    dHD = compose(tensor(X, symmetry(X, D, F), D), tensor(H.delta, hat.delta))
    mid = compose(tensor(b, X, D), tensor(dHD, compose(b, tensor(H.require_lam_inv(), D))), dHD)
    return compose(T.mu, tensor(D, mid, X))


def antipode_formula(H: HopfAlgebraData, hat: HopfAlgebraData) -> Morphism:
    """λ_D = ((b∘(H⊗λ_Ĥ)∘c_{H*,H})⊗((λ_Ĥ⊗λ_H⊗(b∘c_{H*,H}))∘δ_{Ĥ⊗H}))∘δ_{Ĥ⊗H}."""
    X, D = H.space, hat.space
    F = H.field
    b = eval_map(H)
    cDX = symmetry(D, X, F)
    dDX = compose(tensor(D, symmetry(D, X, F), X), tensor(hat.delta, H.delta))
    left = compose(b, tensor(X, hat.require_antipode()), cDX)
    right = compose(tensor(hat.require_antipode(), H.require_antipode(), compose(b, cDX)), dDX)
    return compose(tensor(left, right), dDX)


def psi_formula(H: HopfAlgebraData, hat: HopfAlgebraData) -> Morphism:
    """Ψ = (H*⊗H⊗b)∘(H*⊗J⊗H*)∘(a⊗H⊗H*)."""
    X, D = H.space, hat.space
    return compose(tensor(D, X, eval_map(H)), tensor(D, Jmap(H), D), tensor(coeval(H), X, D))


@dataclass(frozen=True, eq=False)
class DoubleBundle:
    H: HopfAlgebraData
    hat: HopfAlgebraData
    T: HopfAlgebraData
    D_mp: HopfAlgebraData
    D_def: HopfAlgebraData
    mp: MatchedPairData
    report: CheckReport


def double_bundle(H: HopfAlgebraData, jobs=None) -> DoubleBundle:
    hat = hat_dual(H)
    mp = dt_actions(H, hat)
    mprep = check_matched_pair(mp, jobs)
    T = T_of(H, hat)
    D_mp = bicrossed(mp, force=True, name=f"D({H.name})")
    w, winv = omega(H, hat)
    D_def = deform(T, w, winv, name=f"D({H.name})")
    TD = D_mp.space
    rep = CheckReport(f"double bundle {H.name}")
    rep.extend(mprep, "DT pair ")
    rep.extend(run_laws("", [
        ("twisted product = bicrossed product", D_def.mu, D_mp.mu),
        ("twisted antipode = bicrossed antipode", D_def.lam, D_mp.lam),
        ("product by the closed formula", prod_formula(H, hat), D_mp.mu),
        ("antipode by the closed formula", antipode_formula(H, hat).retype((TD,), (TD,)), D_mp.lam),
        ("Ψ through J", psi_formula(H, hat), psi(mp)),
    ], jobs))
    return DoubleBundle(H, hat, T, D_mp, D_def, mp, rep)


# brace conditions tied to the double


def check_fin_identities(H: HopfAlgebraData, jobs=None) -> CheckReport:
    X = H.space
    D = dual_space(X)
    F = H.field
    a, b = coeval(H), eval_map(H)
    return run_laws(f"pairing identities {H.name}", [
        ("snake on H", compose(tensor(b, X), tensor(X, a)), H.id),
        ("snake on H*", compose(tensor(D, b), tensor(a, D)), tensor(D, field=F)),
        ("unit crossing", compose(tensor(symmetry(X, D, F), X), tensor(X, a)),
         compose(tensor(D, H.c), tensor(a, X))),
        ("counit crossing", compose(tensor(b, X), tensor(X, symmetry(X, D, F))),
         compose(tensor(X, b), tensor(H.c, D))),
    ], jobs)


def check_d_cocom_class(H: HopfAlgebraData, jobs=None) -> CheckReport:
    X = H.space
    R, Rb, S = Rmap(H), Rbar(H), Smap(H)
    cd = compose(H.c, H.delta)
    Y = compose(tensor(H.mu, X), tensor(X, S), H.c)
    return run_laws(f"double class conditions {H.name}", [
        ("class condition", compose(tensor(R, X), tensor(X, cd)), compose(tensor(R, X), tensor(X, H.delta))),
        ("R preserves the coproduct", compose(H.delta, R),
         compose(tensor(R, R), tensor(X, H.c, X), tensor(H.delta, H.delta))),
        ("R preserves the counit", compose(H.eps, R), tensor(H.eps, H.eps)),
        ("exchange law for R̄ and S",
         compose(tensor(H.mu, X, X), tensor(X, H.c, X), tensor(Rb, Y), tensor(H.delta, X)),
         compose(tensor(H.mu, H.delta), tensor(X, H.c), tensor(Rb, X))),
    ], jobs)


def check_d_noncomm(H: HopfAlgebraData, jobs=None) -> CheckReport:
    X = H.space
    J = Jmap(H)
    ad = adjoint_map(H).materialize()
    inner = compose(tensor(ad, X), tensor(X, H.c), tensor(H.delta, X))
    return run_laws(f"double brace condition {H.name}", [
        ("J exchange law",
         compose(tensor(H.mu, X), tensor(X, H.c), tensor(J, X), tensor(X, inner)),
         compose(tensor(H.mu, X), tensor(X, J), tensor(H.c, X))),
    ], jobs)


def brace_T_D(H: HopfAlgebraData, bundle: DoubleBundle | None = None):
    from .bracelab import HopfBraceData
    bundle = double_bundle(H) if bundle is None else bundle
    return HopfBraceData(bundle.T, bundle.D_mp)


def brace_D_T(H: HopfAlgebraData, bundle: DoubleBundle | None = None):
    from .bracelab import HopfBraceData
    bundle = double_bundle(H) if bundle is None else bundle
    return HopfBraceData(bundle.D_mp, bundle.T)


def check_d_cocom(H: HopfAlgebraData, jobs=None) -> CheckReport:
    """(T(H), D(H)) for cocommutative H, checked directly."""
    from .bracelab import check_brace
    if not is_cocommutative(H):
        raise NotCocommutative(f"{H.name} is not cocommutative")
    return check_brace(brace_T_D(H), jobs)


def check_d_comm(H: HopfAlgebraData, jobs=None) -> CheckReport:
    """(D(H), T(H)) for commutative H, checked directly."""
    from .bracelab import check_brace
    if not is_commutative(H):
        raise InvalidInput(f"{H.name} is not commutative")
    return check_brace(brace_D_T(H), jobs)


# closed forms for group algebras


def group_double_closed_form(G, field, space, printed: bool = False):
    """(μ, λ) of D(F[G]) on basis f_r⊗g, as flat matrices on ``space``.

    μ(f_r⊗g, f_s⊗h) = δ_{r, g s g⁻¹} f_r⊗gh and λ(f_r⊗g) = f_{g⁻¹ r⁻¹ g}⊗g⁻¹.
    ``printed`` conjugates the other way: δ_{r, g⁻¹ s g} and f_{g r⁻¹ g⁻¹}⊗g⁻¹.
    """
    n = G.order
    m, inv = G.mul, G.inv
    N = n * n
    mu, lam = {}, {}
    for r in range(n):
        for g in range(n):
            a = r * n + g
            gi = inv(g)
            t = m(m(g, inv(r)), gi) if printed else m(m(gi, inv(r)), g)
            lam[a] = {t * n + gi: 1}
            for s in range(n):
                want = m(m(gi, s), g) if printed else m(m(g, s), gi)
                for h in range(n):
                    if r == want:
                        mu[a * N + s * n + h] = {r * n + m(g, h): 1}
    return (Matrix.from_flat((space, space), (space,), field, mu),
            Matrix.from_flat((space,), (space,), field, lam))
