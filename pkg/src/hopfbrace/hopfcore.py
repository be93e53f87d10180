"""Hopf algebra data, axiom checks, antipodes, duals, group algebras, actions."""
from __future__ import annotations

from dataclasses import dataclass, replace

from .exactfield import FieldSpec
from .lintensor import (
    K, Identity, Matrix, Morphism, NotConvolutionInvertible, SingularSystem, Space,
    compose, conv_inverse, conv_unit, convolution, dual_space, identity, matrix_inverse,
    mor_eq, rebase, symmetry, tensor, transpose,
)
from .morphlang.groups import GroupTable
from .report import (
    AntipodeNotInvertible, BadCharacteristic, CheckReport, NoAntipode, run_laws,
)


@dataclass(frozen=True, eq=False)
class HopfAlgebraData:
    name: str
    space: Space
    field: FieldSpec
    eta: Morphism
    mu: Morphism
    eps: Morphism
    delta: Morphism
    lam: Morphism | None = None
    lam_inv: Morphism | None = None

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def id(self) -> Identity:
        return identity(self.space, self.field)

    @property
    def c(self):
        return symmetry(self.space, self.space, self.field)

    def renamed(self, name: str) -> "HopfAlgebraData":
        return replace(self, name=name)

    def with_antipode(self) -> "HopfAlgebraData":
        """Attach λ and λ⁻¹, computing whichever is missing."""
        lam = self.lam if self.lam is not None else compute_antipode(self)
        lam_inv = self.lam_inv
        if lam_inv is None:
            try:
                lam_inv = matrix_inverse(lam)
            except SingularSystem:
                raise AntipodeNotInvertible(f"antipode of {self.name} is singular") from None
        return replace(self, lam=lam, lam_inv=lam_inv)

    def require_antipode(self) -> Morphism:
        if self.lam is None:
            raise NoAntipode(f"{self.name} carries no antipode")
        return self.lam

    def require_lam_inv(self) -> Morphism:
        if self.lam_inv is None:
            if self.lam is None:
                raise NoAntipode(f"{self.name} carries no antipode")
            raise AntipodeNotInvertible(f"{self.name} has no inverse antipode")
        return self.lam_inv


def make_hopf(name: str, space: Space, field: FieldSpec, *, unit: dict, mult, counit, comult,
              antipode=None, antipode_inv=None) -> HopfAlgebraData:
    """Build from flat-index tables.

    unit: {i: c}; mult: callable (i, j) -> {k: c} or dict; counit: callable/dict i -> c;
    comult: callable i -> {(j, k): c}; antipode: callable i -> {k: c}.
    """
    n = space.dim

    def call(t, *a):
        if callable(t):
            return t(*a)
        return t.get(a if len(a) > 1 else a[0], {})

    sh1, sh2 = (space,), (space, space)
    eta = Matrix.from_flat(K, sh1, field, {0: dict(unit)})
    mu = Matrix.from_flat(sh2, sh1, field, {i * n + j: call(mult, i, j) for i in range(n) for j in range(n)})
    eps_cols = {}
    for i in range(n):
        v = counit[i] if isinstance(counit, (list, tuple)) else call(counit, i)
        if v:
            eps_cols[i] = {0: v}
    eps = Matrix.from_flat(sh1, K, field, eps_cols)
    delta = Matrix.from_flat(
        sh1, sh2, field,
        {i: {j * n + k: v for (j, k), v in call(comult, i).items()} for i in range(n)},
    )
    lam = None if antipode is None else Matrix.from_flat(sh1, sh1, field, {i: call(antipode, i) for i in range(n)})
    lam_inv = None if antipode_inv is None else Matrix.from_flat(
        sh1, sh1, field, {i: call(antipode_inv, i) for i in range(n)})
    return HopfAlgebraData(name, space, field, eta, mu, eps, delta, lam, lam_inv)


def on_space(H: HopfAlgebraData, space: Space, name: str | None = None) -> HopfAlgebraData:
    """Redeclare every structure map on ``space`` (same dimension)."""
    s1, s2 = (space,), (space, space)
    rt = lambda f, d, c: None if f is None else rebase(f, d, c)
    return HopfAlgebraData(
        name or H.name, space, H.field,
        rt(H.eta, K, s1), rt(H.mu, s2, s1), rt(H.eps, s1, K), rt(H.delta, s1, s2),
        rt(H.lam, s1, s1), rt(H.lam_inv, s1, s1),
    )


def materialized(H: HopfAlgebraData) -> HopfAlgebraData:
    m = lambda f: None if f is None else f.materialize()
    return replace(H, eta=m(H.eta), mu=m(H.mu), eps=m(H.eps), delta=m(H.delta),
                   lam=m(H.lam), lam_inv=m(H.lam_inv))


# checks


def _laws_algebra(H):
    X = H.space
    return [
        ("left unit", compose(H.mu, tensor(H.eta, X)), H.id),
        ("right unit", compose(H.mu, tensor(X, H.eta)), H.id),
        ("associativity", compose(H.mu, tensor(H.mu, X)), compose(H.mu, tensor(X, H.mu))),
    ]


def _laws_coalgebra(H):
    X = H.space
    return [
        ("left counit", compose(tensor(H.eps, X), H.delta), H.id),
        ("right counit", compose(tensor(X, H.eps), H.delta), H.id),
        ("coassociativity", compose(tensor(H.delta, X), H.delta), compose(tensor(X, H.delta), H.delta)),
    ]


def _laws_bialgebra(H):
    X, F = H.space, H.field
    mid = tensor(X, H.c, X)
    return [
        ("comultiplicative product", compose(H.delta, H.mu),
         compose(tensor(H.mu, H.mu), mid, tensor(H.delta, H.delta))),
        ("counital product", compose(H.eps, H.mu), tensor(H.eps, H.eps)),
        ("comultiplicative unit", compose(H.delta, H.eta), tensor(H.eta, H.eta)),
        ("counital unit", compose(H.eps, H.eta), identity(K, F)),
    ]


def check_algebra(H: HopfAlgebraData, jobs=None) -> CheckReport:
    return run_laws(f"algebra {H.name}", _laws_algebra(H), jobs)


def check_coalgebra(H: HopfAlgebraData, jobs=None) -> CheckReport:
    return run_laws(f"coalgebra {H.name}", _laws_coalgebra(H), jobs)


def check_bialgebra(H: HopfAlgebraData, jobs=None) -> CheckReport:
    return run_laws(f"bialgebra {H.name}", _laws_bialgebra(H), jobs)


def _antipode_laws(H, lam):
    unit = conv_unit(H, H)
    return [
        ("left antipode", convolution(lam, H.id, H, H), unit),
        ("right antipode", convolution(H.id, lam, H, H), unit),
        ("antimultiplicative", compose(lam, H.mu), compose(H.mu, tensor(lam, lam), H.c), "corroborating"),
        ("anticomultiplicative", compose(H.delta, lam), compose(H.c, tensor(lam, lam), H.delta), "corroborating"),
        ("antipode fixes unit", compose(lam, H.eta), H.eta, "corroborating"),
        ("counit fixes antipode", compose(H.eps, lam), H.eps, "corroborating"),
    ]


def check_hopf(H: HopfAlgebraData, jobs=None) -> CheckReport:
    rep = run_laws(f"hopf {H.name}",
                   _laws_algebra(H) + _laws_coalgebra(H) + _laws_bialgebra(H), jobs)
    lam = H.lam
    if lam is None:
        try:
            lam = compute_antipode(H)
            rep.add("antipode exists", True)
        except NoAntipode:
            rep.add("antipode exists", False)
            return rep
    rep.extend(run_laws("", _antipode_laws(H, lam), jobs))
    if H.lam_inv is not None:
        rep.extend(run_laws("", [
            ("inverse antipode left", compose(lam, H.lam_inv), H.id, "corroborating"),
            ("inverse antipode right", compose(H.lam_inv, lam), H.id, "corroborating"),
        ], jobs))
    return rep


def compute_antipode(H: HopfAlgebraData) -> Matrix:
    """The convolution inverse of the identity."""
    try:
        lam = conv_inverse(H.id, H, H)
    except NotConvolutionInvertible as exc:
        raise NoAntipode(f"{H.name}: {exc}") from None
    return Matrix((H.space,), (H.space,), H.field, lam.cols)


def verify_antipode(H: HopfAlgebraData) -> bool:
    """Stored λ agrees with the solved one."""
    return H.lam is not None and bool(mor_eq(H.lam, compute_antipode(H), jobs=1))


def is_commutative(H: HopfAlgebraData, jobs=None) -> bool:
    return mor_eq(compose(H.mu, H.c), H.mu, jobs).equal


def is_cocommutative(H: HopfAlgebraData, jobs=None) -> bool:
    return mor_eq(compose(H.c, H.delta), H.delta, jobs).equal


def op_hopf(H: HopfAlgebraData) -> HopfAlgebraData:
    return replace(H, name=f"{H.name}^op", mu=compose(H.mu, H.c).materialize(),
                   lam=H.require_lam_inv(), lam_inv=H.lam)


def cop_hopf(H: HopfAlgebraData) -> HopfAlgebraData:
    return replace(H, name=f"{H.name}^cop", delta=compose(H.c, H.delta).materialize(),
                   lam=H.require_lam_inv(), lam_inv=H.lam)


def dual_hopf(H: HopfAlgebraData) -> HopfAlgebraData:
    """Transposed structure under the factorwise pairing."""
    D = dual_space(H.space)
    t = lambda f: None if f is None else transpose(f)
    return HopfAlgebraData(f"{H.name}*", D, H.field, transpose(H.eps), transpose(H.delta),
                           transpose(H.eta), transpose(H.mu), t(H.lam), t(H.lam_inv))


def hat_dual(H: HopfAlgebraData) -> HopfAlgebraData:
    """Ĥ on H* as the pairing e_i⊗f_j ↦ δ_ij dictates: product δ^T,
    coproduct (μ∘c)^T, antipode (λ⁻¹)^T."""
    lam_inv = H.require_lam_inv()
    D = dual_space(H.space)
    return HopfAlgebraData(
        f"{H.name}^", D, H.field, transpose(H.eps), transpose(H.delta),
        transpose(H.eta), transpose(compose(H.mu, H.c)), transpose(lam_inv),
        transpose(H.require_antipode()))


def cop_dual(H: HopfAlgebraData) -> HopfAlgebraData:
    """(H^cop)* under the factorwise pairing: product (c∘δ)^T, coproduct μ^T."""
    lam_inv = H.require_lam_inv()
    D = dual_space(H.space)
    return HopfAlgebraData(
        f"{H.name}^cop*", D, H.field, transpose(H.eps), transpose(compose(H.c, H.delta)),
        transpose(H.eta), transpose(H.mu), transpose(lam_inv), transpose(H.require_antipode()))


# constructors


def group_algebra(G: GroupTable, field: FieldSpec) -> HopfAlgebraData:
    space = Space(f"F[{G.name}]", G.labels)
    return make_hopf(
        f"F[{G.name}]", space, field,
        unit={G.identity: 1},
        mult=lambda i, j: {G.mul(i, j): 1},
        counit=[1] * G.order,
        comult=lambda i: {(i, i): 1},
        antipode=lambda i: {G.inv(i): 1},
        antipode_inv=lambda i: {G.inv(i): 1},
    )


def dual_group_algebra(G: GroupTable, field: FieldSpec) -> HopfAlgebraData:
    space = dual_space(Space(f"F[{G.name}]", G.labels))
    n = G.order
    return make_hopf(
        f"F[{G.name}]*", space, field,
        unit={r: 1 for r in range(n)},
        mult=lambda r, s: {r: 1} if r == s else {},
        counit=[1 if r == G.identity else 0 for r in range(n)],
        comult=lambda r: {(l, m): 1 for l in range(n) for m in range(n) if G.mul(l, m) == r},
        antipode=lambda r: {G.inv(r): 1},
        antipode_inv=lambda r: {G.inv(r): 1},
    )


def sweedler4(field: FieldSpec) -> HopfAlgebraData:
    """Basis 1, g, x, gx (index a + 2b for g^a x^b)."""
    if field.characteristic == 2:
        raise BadCharacteristic("Sweedler's algebra needs characteristic ≠ 2")
    space = Space("Sw", ("1", "g", "x", "gx"))

    def mult(i, j):
        a, b = i % 2, i // 2
        c, d = j % 2, j // 2
        if b + d >= 2:
            return {}
        sign = -1 if (b and c) else 1
        return {(a + c) % 2 + 2 * (b + d): sign}

    # Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, extended multiplicatively
    def tmul(u, v):
        out = {}
        for (i1, i2), c1 in u.items():
            for (j1, j2), c2 in v.items():
                for k1, s1 in mult(i1, j1).items():
                    for k2, s2 in mult(i2, j2).items():
                        out[(k1, k2)] = out.get((k1, k2), 0) + c1 * c2 * s1 * s2
        return {k: v for k, v in out.items() if v}

    dg = {(1, 1): 1}
    dx = {(2, 0): 1, (1, 2): 1}
    comult = {0: {(0, 0): 1}, 1: dg, 2: dx, 3: tmul(dg, dx)}
    H = make_hopf("Sw", space, field, unit={0: 1}, mult=mult, counit=[1, 1, 0, 0],
                  comult=lambda i: comult[i])
    return H.with_antipode()


def trivial_hopf(field: FieldSpec) -> HopfAlgebraData:
    space = Space("K", ("1",))
    return make_hopf("K", space, field, unit={0: 1}, mult=lambda i, j: {0: 1},
                     counit=[1], comult=lambda i: {(0, 0): 1},
                     antipode=lambda i: {0: 1}, antipode_inv=lambda i: {0: 1})


def monoid_bialgebra(labels, table, field: FieldSpec, name: str = "M") -> HopfAlgebraData:
    """Bialgebra of a finite monoid (not necessarily a group); no antipode attached."""
    space = Space(f"F[{name}]", tuple(labels))
    n = len(labels)
    unit = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))][0]
    return make_hopf(f"F[{name}]", space, field, unit={unit: 1},
                     mult=lambda i, j: {table[i][j]: 1}, counit=[1] * n,
                     comult=lambda i: {(i, i): 1})


# actions


@dataclass(frozen=True, eq=False)
class ActionData:
    """``side='left'``: acting ⊗ acted -> acted.  ``side='right'``: acted ⊗ acting -> acted."""

    acting: HopfAlgebraData
    acted: HopfAlgebraData
    map: Morphism
    side: str = "left"
    name: str = "phi"

    @property
    def domain(self):
        if self.side == "left":
            return (self.acting.space, self.acted.space)
        return (self.acted.space, self.acting.space)


def left_action(H, A, m, name="phiA") -> ActionData:
    return ActionData(H, A, m.materialize().retype((H.space, A.space), (A.space,)), "left", name)


def right_action(H, A, m, name="phiH") -> ActionData:
    """Right action of A on H, as a map H⊗A -> H."""
    return ActionData(A, H, m.materialize().retype((H.space, A.space), (H.space,)), "right", name)


def trivial_left_action(H, A) -> ActionData:
    return left_action(H, A, tensor(H.eps, A.space))


def trivial_right_action(H, A) -> ActionData:
    return right_action(H, A, tensor(H.space, A.eps))


def adjoint_map(H: HopfAlgebraData) -> Morphism:
    """φ^ad = μ∘(μ⊗λ)∘(H⊗c)∘(δ⊗H)."""
    X = H.space
    return compose(H.mu, tensor(H.mu, H.require_antipode()), tensor(X, H.c), tensor(H.delta, X))


def adjoint_action(H: HopfAlgebraData) -> ActionData:
    return left_action(H, H, adjoint_map(H), "ad")


def _left_module_laws(act):
    H, A, phi = act.acting, act.acted, act.map
    return [
        ("unit acts trivially", compose(phi, tensor(H.eta, A.space)), A.id),
        ("action associativity", compose(phi, tensor(H.space, phi)), compose(phi, tensor(H.mu, A.space))),
    ]


def _right_module_laws(act):
    A, H, phi = act.acting, act.acted, act.map
    return [
        ("unit acts trivially", compose(phi, tensor(H.space, A.eta)), H.id),
        ("action associativity", compose(phi, tensor(phi, A.space)), compose(phi, tensor(H.space, A.mu))),
    ]


def check_module(act: ActionData, jobs=None) -> CheckReport:
    laws = _left_module_laws(act) if act.side == "left" else _right_module_laws(act)
    return run_laws(f"{act.side} module {act.name}", laws, jobs)


def check_module_algebra(act: ActionData, jobs=None) -> CheckReport:
    F = act.acted.field
    if act.side == "left":
        H, A, phi = act.acting, act.acted, act.map
        laws = _left_module_laws(act) + [
            ("acts on unit by counit", compose(phi, tensor(H.space, A.eta)), tensor(H.eps, A.eta)),
            ("acts on products", compose(phi, tensor(H.space, A.mu)),
             compose(A.mu, tensor(phi, phi), tensor(H.space, symmetry(H.space, A.space, F), A.space),
                     tensor(H.delta, A.space, A.space))),
        ]
    else:
        A, H, phi = act.acting, act.acted, act.map
        laws = _right_module_laws(act) + [
            ("acts on unit by counit", compose(phi, tensor(H.eta, A.space)), tensor(A.eps, H.eta)),
            ("acts on products", compose(phi, tensor(H.mu, A.space)),
             compose(H.mu, tensor(phi, phi), tensor(H.space, symmetry(H.space, A.space, F), A.space),
                     tensor(H.space, H.space, A.delta))),
        ]
    return run_laws(f"{act.side} module algebra {act.name}", laws, jobs)


def check_module_coalgebra(act: ActionData, jobs=None) -> CheckReport:
    F = act.acted.field
    if act.side == "left":
        H, A, phi = act.acting, act.acted, act.map
        laws = _left_module_laws(act) + [
            ("counit compatibility", compose(A.eps, phi), tensor(H.eps, A.eps)),
            ("coproduct compatibility", compose(A.delta, phi),
             compose(tensor(phi, phi), tensor(H.space, symmetry(H.space, A.space, F), A.space),
                     tensor(H.delta, A.delta))),
        ]
    else:
        A, H, phi = act.acting, act.acted, act.map
        laws = _right_module_laws(act) + [
            ("counit compatibility", compose(H.eps, phi), tensor(H.eps, A.eps)),
            ("coproduct compatibility", compose(H.delta, phi),
             compose(tensor(phi, phi), tensor(H.space, symmetry(H.space, A.space, F), A.space),
                     tensor(H.delta, A.delta))),
        ]
    return run_laws(f"{act.side} module coalgebra {act.name}", laws, jobs)


def check_cocom_class(act: ActionData, jobs=None) -> CheckReport:
    """Left action φ: H⊗A -> A in the cocommutativity class of H."""
    H, A, phi = act.acting, act.acted, act.map
    F = H.field
    cdelta = compose(H.c, H.delta)
    cHA = symmetry(H.space, A.space, F)
    return run_laws(f"cocommutativity class {act.name}", [
        ("class condition", compose(tensor(H.space, phi), tensor(cdelta, A.space)),
         compose(tensor(H.space, phi), tensor(H.delta, A.space))),
        ("class condition, swapped form",
         compose(tensor(phi, H.space), tensor(H.space, cHA), tensor(cdelta, A.space)),
         compose(tensor(phi, H.space), tensor(H.space, cHA), tensor(H.delta, A.space))),
    ], jobs)
