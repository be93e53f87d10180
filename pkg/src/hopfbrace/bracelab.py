"""Hopf braces: Γ maps, brace checks, and the crossed-product theorem checkers.

A brace is a coalgebra carrying two Hopf structures.  ``first`` plays the
role of H₁ (the structure Γ is built from) and ``second`` is H₂.
"""
from __future__ import annotations

from dataclasses import dataclass

from .crossprod import (
    MatchedPairData, bicrossed, check_matched_pair, psi, smash, tensor_hopf,
)
from .hopfcore import (
    ActionData, HopfAlgebraData, adjoint_map, check_cocom_class, check_hopf,
    check_module_algebra, check_module_coalgebra, is_cocommutative, right_action,
)
from .lintensor import compose, mor_eq, symmetry, tensor
from .report import (
    CheckReport, ConditionFailed, InvalidBrace, InvalidInput, InvalidMatchedPair, NotCocommutative,
    NotInCocommutativityClass, run_laws,
)


@dataclass(frozen=True, eq=False)
class HopfBraceData:
    first: HopfAlgebraData
    second: HopfAlgebraData

    def __post_init__(self):
        a, b = self.first, self.second
        if a.space.atoms != b.space.atoms or a.field != b.field:
            raise InvalidBrace("brace structures live on different spaces")
        if not (mor_eq(a.eps, b.eps) and mor_eq(a.delta, b.delta)):
            raise InvalidBrace("brace structures must share the coalgebra")

    @property
    def space(self):
        return self.first.space

    @property
    def field(self):
        return self.first.field

    @property
    def eps(self):
        return self.first.eps

    @property
    def delta(self):
        return self.first.delta

    @property
    def name(self) -> str:
        return f"({self.first.name}, {self.second.name})"


def trivial_brace(H: HopfAlgebraData) -> HopfBraceData:
    return HopfBraceData(H, H)


def gamma(b: HopfBraceData):
    """Γ = μ¹∘(λ¹⊗μ²)∘(δ⊗H)."""
    H1, H2 = b.first, b.second
    X = b.space
    return compose(H1.mu, tensor(H1.require_antipode(), H2.mu), tensor(b.delta, X)).materialize()


def gamma_prime(b: HopfBraceData):
    """Γ′ = μ¹∘(μ²⊗λ¹)∘(H⊗c)∘(δ⊗H)."""
    H1, H2 = b.first, b.second
    X = b.space
    return compose(H1.mu, tensor(H2.mu, H1.require_antipode()), tensor(X, H1.c),
                   tensor(b.delta, X)).materialize()


def _compat_laws(b: HopfBraceData, G=None, Gp=None):
    H1, H2 = b.first, b.second
    X = b.space
    G = gamma(b) if G is None else G
    Gp = gamma_prime(b) if Gp is None else Gp
    spread = compose(tensor(X, H1.c, X), tensor(b.delta, X, X))
    lhs = compose(H2.mu, tensor(X, H1.mu))
    return [
        ("compatibility", lhs, compose(H1.mu, tensor(H2.mu, G), spread)),
        ("compatibility, Γ′ form", lhs, compose(H1.mu, tensor(Gp, H2.mu), spread), "corroborating"),
    ]


def check_brace(b: HopfBraceData, jobs=None) -> CheckReport:
    rep = CheckReport(f"brace {b.name}")
    rep.extend(check_hopf(b.first, jobs), "H1 ")
    rep.extend(check_hopf(b.second, jobs), "H2 ")
    rep.extend(run_laws("", [("equal units", b.first.eta, b.second.eta)], jobs))
    rep.extend(run_laws("", _compat_laws(b), jobs))
    return rep


def check_compatibility(b: HopfBraceData, jobs=None) -> CheckReport:
    """Only the compatibility law (no Hopf axioms)."""
    return run_laws(f"compatibility {b.name}", _compat_laws(b)[:1], jobs)


def check_brace_alt(b: HopfBraceData, jobs=None) -> CheckReport:
    """Γ∘(H⊗μ¹) = μ¹∘(Γ⊗Γ)∘(H⊗c⊗H)∘(δ⊗H⊗H)."""
    H1 = b.first
    X = b.space
    G = gamma(b)
    return run_laws(f"brace via Γ {b.name}", [
        ("Γ acts on products", compose(G, tensor(X, H1.mu)),
         compose(H1.mu, tensor(G, G), tensor(X, H1.c, X), tensor(b.delta, X, X))),
    ], jobs)


def check_mu2_reconstruction(b: HopfBraceData, jobs=None) -> CheckReport:
    H1, H2 = b.first, b.second
    X = b.space
    return run_laws(f"μ² reconstruction {b.name}", [
        ("μ² = μ¹∘(H⊗Γ)∘(δ⊗H)", H2.mu, compose(H1.mu, tensor(X, gamma(b)), tensor(b.delta, X))),
    ], jobs)


def phi_right_map(b: HopfBraceData):
    """Φ = μ²∘((λ²∘Γ)⊗μ²)∘(H⊗c⊗H)∘(δ⊗δ)."""
    H2 = b.second
    X = b.space
    return compose(H2.mu, tensor(compose(H2.require_antipode(), gamma(b)), H2.mu),
                   tensor(X, H2.c, X), tensor(b.delta, b.delta)).materialize()


def phi_right(b: HopfBraceData) -> ActionData:
    if not is_cocommutative(b.second):
        raise NotCocommutative("Φ needs a cocommutative brace")
    return right_action(b.second, b.second, phi_right_map(b), "Phi")


# theorem checkers


def omega_map(brH: HopfBraceData, mp2: MatchedPairData):
    """Ω = μ¹_H∘(λ¹_H⊗(μ²_H∘(φ_H⊗H)))∘(δ_H⊗A⊗H) : H⊗A⊗H -> H."""
    H1, H2 = brH.first, brH.second
    A = mp2.A
    return compose(H1.mu, tensor(H1.require_antipode(), compose(H2.mu, tensor(mp2.phi_H.map, H2.space))),
                   tensor(brH.delta, A.space, H2.space)).materialize()


def _same(X: HopfAlgebraData, Y: HopfAlgebraData) -> bool:
    return (X.space.atoms == Y.space.atoms and bool(mor_eq(X.mu, Y.mu))
            and bool(mor_eq(X.delta, Y.delta)) and bool(mor_eq(X.eta, Y.eta)))


def check_E1_E2(brA: HopfBraceData, brH: HopfBraceData, mp2: MatchedPairData, jobs=None) -> CheckReport:
    if not is_cocommutative(brH.second):
        raise NotCocommutative("the H brace must be cocommutative")
    if not (_same(mp2.A, brA.second) and _same(mp2.H, brH.second)):
        raise InvalidInput("matched pair must live on (A₂, H₂)")
    mprep = check_matched_pair(mp2, jobs)
    if not mprep.passed:
        raise InvalidMatchedPair("(A₂, H₂, φ_A, φ_H) is not a matched pair", mprep)
    A1, H1, H2 = brA.first, brH.first, brH.second
    F = A1.field
    A, H = A1.space, H1.space
    pa, ph = mp2.phi_A.map, mp2.phi_H.map
    cHA = symmetry(H, A, F)
    Om = omega_map(brH, mp2)
    e2_lhs = compose(
        H1.mu, tensor(H2.mu, Om), tensor(H, symmetry(H, H, F), A, H),
        tensor(compose(tensor(ph, H), tensor(H, cHA), tensor(brH.delta, A)), H, A, H))
    e2_rhs = compose(H2.mu, tensor(compose(ph, tensor(H, A1.mu)), H1.mu), tensor(H, A, cHA, H))
    return run_laws("conditions E1, E2", [
        ("E1", compose(A1.mu, tensor(pa, pa), tensor(H, cHA, A), tensor(brH.delta, A, A)),
         compose(pa, tensor(H, A1.mu))),
        ("E2", e2_lhs, e2_rhs),
    ], jobs)


def build_brace_tensor_bicrossed(brA, brH, mp2, jobs=None, check: bool = True) -> HopfBraceData:
    if check:
        rep = check_E1_E2(brA, brH, mp2, jobs)
        if not rep.passed:
            raise ConditionFailed(f"failing: {', '.join(rep.failed())}", rep)
    return HopfBraceData(tensor_hopf(brA.first, brH.first), bicrossed(mp2, force=True))


def omegabar_map(mp: MatchedPairData):
    """Ω̄ = μ_H∘(λ_H⊗φ_H)∘(δ_H⊗A) : H⊗A -> H."""
    H, A = mp.H, mp.A
    return compose(H.mu, tensor(H.require_antipode(), mp.phi_H.map), tensor(H.delta, A.space)).materialize()


def check_z1_z2(mp: MatchedPairData, jobs=None) -> CheckReport:
    cls = check_cocom_class(mp.phi_A, jobs)
    if not cls.passed:
        raise NotInCocommutativityClass("φ_A is not in the cocommutativity class", cls)
    mprep = check_matched_pair(mp, jobs)
    if not mprep.passed:
        raise InvalidMatchedPair("not a matched pair", mprep)
    A, Hh = mp.A, mp.H
    F = A.field
    X, Y = Hh.space, A.space
    pa, ph = mp.phi_A.map, mp.phi_H.map
    cHA = symmetry(X, Y, F)
    Ob = omegabar_map(mp)
    z2_lhs = compose(Hh.mu, tensor(Hh.mu, Ob), tensor(X, Hh.c, Y),
                     tensor(compose(tensor(ph, X), tensor(X, cHA), tensor(Hh.delta, Y)), X, Y))
    z2_rhs = compose(Hh.mu, tensor(compose(ph, tensor(X, A.mu)), X), tensor(X, Y, cHA))
    return run_laws("conditions z1, z2", [
        ("z1", compose(A.mu, tensor(pa, pa), tensor(X, cHA, Y), tensor(Hh.delta, Y, Y)),
         compose(pa, tensor(X, A.mu))),
        ("z2", z2_lhs, z2_rhs),
    ], jobs)


def build_brace_tensor_bicrossed_class(mp: MatchedPairData, jobs=None) -> HopfBraceData:
    """(A⊗H, A⋈H) after the z1/z2 check."""
    rep = check_z1_z2(mp, jobs)
    if not rep.passed:
        raise ConditionFailed(f"failing: {', '.join(rep.failed())}", rep)
    return HopfBraceData(tensor_hopf(mp.A, mp.H), bicrossed(mp, force=True))


def build_brace_smash_class(A, H, phi_A, jobs=None) -> HopfBraceData:
    """(A⊗H, A♯H) for a module algebra-coalgebra in the cocommutativity class."""
    return HopfBraceData(tensor_hopf(A, H), smash(A, H, phi_A, jobs=jobs))


def psi2_map(H2: HopfAlgebraData, A2: HopfAlgebraData, phi2):
    """Ψ² = (φ²⊗H)∘(H⊗c_{H,A})∘(δ_H⊗A)."""
    m = phi2.map if isinstance(phi2, ActionData) else phi2
    F = A2.field
    return compose(tensor(m, H2.space), tensor(H2.space, symmetry(H2.space, A2.space, F)),
                   tensor(H2.delta, A2.space)).materialize()


def _check_phi2(phi2: ActionData, jobs):
    alg = check_module_algebra(phi2, jobs)
    coalg = check_module_coalgebra(phi2, jobs)
    cls = check_cocom_class(phi2, jobs)
    rep = CheckReport("φ² preconditions").extend(alg).extend(coalg).extend(cls)
    if not rep.passed:
        raise InvalidInput("φ² must be a module algebra-coalgebra in the cocommutativity class", rep)


def check_C1_C2_C3(brA, brH, mp1: MatchedPairData, phi2: ActionData, jobs=None) -> CheckReport:
    if not (_same(mp1.A, brA.first) and _same(mp1.H, brH.first)):
        raise InvalidInput("matched pair must live on (A₁, H₁)")
    mprep = check_matched_pair(mp1, jobs)
    if not mprep.passed:
        raise InvalidMatchedPair("(A₁, H₁, φ¹, φ_H) is not a matched pair", mprep)
    _check_phi2(phi2, jobs)
    A1, A2 = brA.first, brA.second
    H1, H2 = brH.first, brH.second
    F = A1.field
    A, H = A1.space, H1.space
    P1 = psi(mp1).materialize()
    P2 = psi2_map(H2, A2, phi2)
    GpH = gamma_prime(brH)
    GA = gamma(brA)
    c1_lhs = compose(tensor(A, H1.mu), tensor(P1, H2.mu), tensor(H, P2, H),
                     tensor(compose(tensor(GpH, H), tensor(H, H1.c), tensor(brH.delta, H)), A, H))
    c1_rhs = compose(tensor(A, H2.mu), tensor(P2, H1.mu), tensor(H, P1, H))
    return run_laws("conditions C1, C2, C3", [
        ("C1", c1_lhs, c1_rhs),
        ("C2", compose(tensor(GA, H), tensor(A, P1)),
         compose(P1, tensor(H, GA), tensor(symmetry(A, H, F), A))),
        ("C3", compose(P2, tensor(H, A1.mu)), compose(tensor(A1.mu, H), tensor(A, P2), tensor(P2, A))),
    ], jobs)


def build_brace_bicrossed_smash(brA, brH, mp1, phi2, jobs=None, check: bool = True) -> HopfBraceData:
    if check:
        rep = check_C1_C2_C3(brA, brH, mp1, phi2, jobs)
        if not rep.passed:
            raise ConditionFailed(f"failing: {', '.join(rep.failed())}", rep)
    return HopfBraceData(bicrossed(mp1, force=True),
                         smash(brA.second, brH.second, phi2, force=True))


def check_C1_smash(mp: MatchedPairData, phi2: ActionData, jobs=None) -> CheckReport:
    mprep = check_matched_pair(mp, jobs)
    if not mprep.passed:
        raise InvalidMatchedPair("not a matched pair", mprep)
    _check_phi2(phi2, jobs)
    A, Hh = mp.A, mp.H
    X, Y = Hh.space, A.space
    P1 = psi(mp).materialize()
    P2 = psi2_map(Hh, A, phi2)
    ad = adjoint_map(Hh).materialize()
    return run_laws("condition C1 (smash)", [
        ("C1 smash",
         compose(tensor(Y, Hh.mu), tensor(P1, X), tensor(ad, P2), tensor(X, Hh.c, Y), tensor(Hh.delta, X, Y)),
         compose(tensor(Y, Hh.mu), tensor(P2, X), tensor(X, P1))),
    ], jobs)


def check_C1_tensor(mp: MatchedPairData, jobs=None) -> CheckReport:
    mprep = check_matched_pair(mp, jobs)
    if not mprep.passed:
        raise InvalidMatchedPair("not a matched pair", mprep)
    A, Hh = mp.A, mp.H
    F = A.field
    X, Y = Hh.space, A.space
    P = psi(mp).materialize()
    cHA = symmetry(X, Y, F)
    ad = adjoint_map(Hh).materialize()
    return run_laws("condition C1 (tensor)", [
        ("C1 tensor",
         compose(tensor(Y, Hh.mu), tensor(P, X), tensor(ad, cHA), tensor(X, Hh.c, Y), tensor(Hh.delta, X, Y)),
         compose(tensor(Y, Hh.mu), tensor(cHA, X), tensor(X, P))),
    ], jobs)


def check_tensor_bicrossed_hypotheses(brA: HopfBraceData, H: HopfAlgebraData, mp: MatchedPairData, jobs=None) -> CheckReport:
    """Sufficient conditions for (A₁⊗H, A₂⋈H) with H commutative and cocommutative."""
    from .hopfcore import is_commutative, left_action

    if not (is_commutative(H) and is_cocommutative(H)):
        raise InvalidInput("H must be commutative and cocommutative")
    A1 = brA.first
    F = A1.field
    X, Y = H.space, A1.space
    ph = mp.phi_H.map
    rep = CheckReport("tensor⋈ hypotheses (i)-(iii)")
    rep.extend(check_module_algebra(left_action(H, A1, mp.phi_A.map), jobs), "(i) ")
    rep.extend(check_matched_pair(mp, jobs), "(ii) ")
    inner = compose(H.mu, tensor(H.require_antipode(), ph), tensor(H.delta, Y))
    rep.extend(run_laws("", [
        ("(iii)", compose(ph, tensor(X, A1.mu)),
         compose(H.mu, tensor(ph, inner), tensor(X, symmetry(X, Y, F), Y), tensor(H.delta, Y, Y))),
    ], jobs))
    return rep


def check_bicrossed_smash_hypotheses(A: HopfAlgebraData, brH: HopfBraceData, mp1: MatchedPairData, phi2: ActionData,
                 jobs=None) -> CheckReport:
    """Sufficient conditions for (A⋈H₁, A♯H₂) with a trivial A brace."""
    if not is_cocommutative(brH.second):
        raise NotCocommutative("the H brace must be cocommutative")
    H1, H2 = brH.first, brH.second
    X, Y = H1.space, A.space
    Gp = gamma_prime(brH)
    P2 = psi2_map(H2, A, phi2)
    spread = compose(tensor(X, H1.c, Y), tensor(brH.delta, X, Y))
    rep = CheckReport("⋈♯ hypotheses (i)-(iv)")
    rep.extend(check_matched_pair(mp1, jobs), "(i) ")
    rep.extend(check_module_algebra(phi2, jobs), "(ii) ")
    rep.extend(check_module_coalgebra(phi2, jobs), "(ii) ")
    rep.extend(run_laws("", [
        ("(iii)", compose(phi2.map, tensor(X, mp1.phi_A.map)),
         compose(mp1.phi_A.map, tensor(Gp, phi2.map), spread)),
        ("(iv)", compose(H2.mu, tensor(X, mp1.phi_H.map)),
         compose(H1.mu, tensor(mp1.phi_H.map, X), tensor(Gp, P2), spread)),
    ], jobs))
    return rep
