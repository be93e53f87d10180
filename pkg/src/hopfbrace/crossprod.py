"""Matched pairs, the braiding Ψ, and bicrossed / smash / tensor products."""
from __future__ import annotations

from dataclasses import dataclass

from .hopfcore import (
    ActionData, HopfAlgebraData, check_cocom_class, check_module_algebra,
    check_module_coalgebra, is_cocommutative, left_action, right_action,
    trivial_left_action, trivial_right_action,
)
from .lintensor import Space, compose, symmetry, tensor, mor_eq
from .report import (
    CheckReport, ConditionFailed, InvalidAction, InvalidMatchedPair, InvalidInput,
    NotCocommutative, NotInCocommutativityClass, run_laws,
)


@dataclass(frozen=True, eq=False)
class MatchedPairData:
    A: HopfAlgebraData
    H: HopfAlgebraData
    phi_A: ActionData  # H⊗A -> A
    phi_H: ActionData  # H⊗A -> H
    name: str = "mp"


def matched_pair(A, H, phi_A, phi_H, name="mp") -> MatchedPairData:
    """Accepts raw morphisms or ActionData for the two actions."""
    if not isinstance(phi_A, ActionData):
        phi_A = left_action(H, A, phi_A)
    if not isinstance(phi_H, ActionData):
        phi_H = right_action(H, A, phi_H)
    if phi_A.side != "left" or phi_H.side != "right":
        raise InvalidInput("φ_A must be a left action and φ_H a right action")
    return MatchedPairData(A, H, phi_A, phi_H, name)


def trivial_pair(A, H) -> MatchedPairData:
    return MatchedPairData(A, H, trivial_left_action(H, A), trivial_right_action(H, A), "trivial")


def smash_pair(A, H, phi_A) -> MatchedPairData:
    if not isinstance(phi_A, ActionData):
        phi_A = left_action(H, A, phi_A)
    return MatchedPairData(A, H, phi_A, trivial_right_action(H, A), "smash")


def psi(mp: MatchedPairData):
    """Ψ = (φ_A⊗φ_H)∘(H⊗c_{H,A}⊗A)∘(δ_H⊗δ_A) : H⊗A -> A⊗H."""
    A, H = mp.A, mp.H
    F = A.field
    return compose(
        tensor(mp.phi_A.map, mp.phi_H.map),
        tensor(H.space, symmetry(H.space, A.space, F), A.space),
        tensor(H.delta, A.delta),
    )


def check_matched_pair(mp: MatchedPairData, jobs=None) -> CheckReport:
    A, H = mp.A, mp.H
    F = A.field
    pa, ph = mp.phi_A.map, mp.phi_H.map
    Ps = psi(mp).materialize()
    rep = CheckReport(f"matched pair ({A.name}, {H.name})")
    rep.extend(check_module_coalgebra(mp.phi_A, jobs), "(i) φ_A ")
    rep.extend(check_module_coalgebra(mp.phi_H, jobs), "(i) φ_H ")
    cHA = symmetry(H.space, A.space, F)
    rep.extend(run_laws("", [
        ("(ii) φ_A fixes the unit", compose(pa, tensor(H.space, A.eta)), tensor(H.eps, A.eta)),
        ("(iii) φ_H fixes the unit", compose(ph, tensor(H.eta, A.space)), tensor(H.eta, A.eps)),
        ("(iv) φ_A on products", compose(pa, tensor(H.space, A.mu)),
         compose(A.mu, tensor(A.space, pa), tensor(Ps, A.space))),
        ("(v) φ_H on products", compose(ph, tensor(H.mu, A.space)),
         compose(H.mu, tensor(ph, H.space), tensor(H.space, Ps))),
        ("(vi) twisted symmetry", compose(symmetry(A.space, H.space, F), Ps),
         compose(tensor(ph, pa), tensor(H.space, cHA, A.space), tensor(H.delta, A.delta))),
    ], jobs))
    return rep


def _product_space(A, H) -> Space:
    return Space.product(A.space, H.space)


def _assemble(name, A, H, mu, lam) -> HopfAlgebraData:
    F = A.field
    X = _product_space(A, H)
    s1, s2 = (X,), (X, X)
    eta = tensor(A.eta, H.eta).materialize().retype((), s1)
    eps = tensor(A.eps, H.eps).materialize().retype(s1, ())
    delta = compose(tensor(A.space, symmetry(A.space, H.space, F), H.space),
                    tensor(A.delta, H.delta)).materialize().retype(s1, s2)
    mu = mu.materialize().retype(s2, s1)
    lam = None if lam is None else lam.materialize().retype(s1, s1)
    return HopfAlgebraData(name, X, F, eta, mu, eps, delta, lam, None)


def bicrossed(mp: MatchedPairData, force: bool = False, name: str | None = None,
              jobs=None) -> HopfAlgebraData:
    """A⋈H: μ = (μ_A⊗μ_H)∘(A⊗Ψ⊗H), λ = Ψ∘(λ_H⊗λ_A)∘c_{A,H}."""
    if not force:
        rep = check_matched_pair(mp, jobs)
        if not rep.passed:
            raise InvalidMatchedPair(f"not a matched pair: {', '.join(rep.failed())}", rep)
    A, H = mp.A, mp.H
    F = A.field
    Ps = psi(mp).materialize()
    mu = compose(tensor(A.mu, H.mu), tensor(A.space, Ps, H.space))
    lam = None
    if A.lam is not None and H.lam is not None:
        lam = compose(Ps, tensor(H.lam, A.lam), symmetry(A.space, H.space, F))
    out = _assemble(name or f"{A.name}⋈{H.name}", A, H, mu, lam)
    return _attach_inverse(out)


def _attach_inverse(X: HopfAlgebraData) -> HopfAlgebraData:
    if X.lam is None:
        return X
    try:
        return X.with_antipode()
    except Exception:
        return X


def smash(A, H, phi_A, force: bool = False, name: str | None = None, jobs=None) -> HopfAlgebraData:
    """A♯H: the bicrossed product of the induced pair with trivial φ_H."""
    mp = smash_pair(A, H, phi_A)
    if not force:
        alg = check_module_algebra(mp.phi_A, jobs)
        coalg = check_module_coalgebra(mp.phi_A, jobs)
        if not (alg.passed and coalg.passed):
            rep = CheckReport("module algebra-coalgebra").extend(alg).extend(coalg)
            raise InvalidAction("φ_A is not a module algebra-coalgebra", rep)
        cls = check_cocom_class(mp.phi_A, jobs)
        if not cls.passed:
            raise NotInCocommutativityClass("φ_A is not in the cocommutativity class", cls)
    return bicrossed(mp, force=True, name=name or f"{A.name}♯{H.name}")


def tensor_hopf(A: HopfAlgebraData, H: HopfAlgebraData, name: str | None = None) -> HopfAlgebraData:
    F = A.field
    mid = tensor(A.space, symmetry(H.space, A.space, F), H.space)
    mu = compose(tensor(A.mu, H.mu), mid)
    lam = None if A.lam is None or H.lam is None else tensor(A.lam, H.lam)
    out = _assemble(name or f"{A.name}⊗{H.name}", A, H, mu, lam)
    if A.lam_inv is not None and H.lam_inv is not None:
        X = out.space
        from dataclasses import replace
        return replace(out, lam_inv=tensor(A.lam_inv, H.lam_inv).materialize().retype((X,), (X,)))
    return _attach_inverse(out)


def check_mp_brace_condition(mp: MatchedPairData, jobs=None) -> CheckReport:
    """μ_A = μ_A∘Ψ for a pair on one Hopf algebra A = H."""
    A, H = mp.A, mp.H
    if A.space != H.space or not mor_eq(A.mu, H.mu) or not mor_eq(A.delta, H.delta):
        raise InvalidInput("the pair must act on one Hopf algebra (A = H)")
    return run_laws("brace condition", [
        ("μ = μ∘Ψ", A.mu, compose(A.mu, psi(mp))),
    ], jobs)


def brace_from_matched_pair(mp: MatchedPairData, jobs=None):
    from .bracelab import HopfBraceData

    A = mp.A
    if not is_cocommutative(A):
        raise NotCocommutative(f"{A.name} is not cocommutative")
    rep = check_matched_pair(mp, jobs)
    if not rep.passed:
        raise InvalidMatchedPair("not a matched pair", rep)
    cond = check_mp_brace_condition(mp, jobs)
    if not cond.passed:
        raise ConditionFailed("μ = μ∘Ψ fails", cond)
    X = A.space
    pa = mp.phi_A.map
    lam = A.require_antipode()
    mu_bar = compose(A.mu, tensor(X, compose(pa, tensor(lam, X))), tensor(A.delta, X)).materialize()
    lam_bar = compose(pa, tensor(X, lam), A.delta).materialize()
    from dataclasses import replace
    Abar = _attach_inverse(replace(A, name=f"{A.name}‾", mu=mu_bar, lam=lam_bar, lam_inv=None))
    return HopfBraceData(Abar, A)


def matched_pair_from_brace(brace, jobs=None) -> MatchedPairData:
    from .bracelab import check_brace, gamma, phi_right

    A2 = brace.second
    if not is_cocommutative(A2):
        raise NotCocommutative("brace is not cocommutative")
    rep = check_brace(brace, jobs)
    if not rep.passed:
        from .report import InvalidBrace
        raise InvalidBrace("input is not a Hopf brace", rep)
    g = left_action(A2, A2, gamma(brace), "Gamma")
    phi = phi_right(brace)
    return MatchedPairData(A2, A2, g, phi, "from brace")
