"""Script environments: named structures plus the derived morphisms scripts may
refer to, and the fixture environments selected by a script's ``# fixtures:`` line.

Qualified names resolve against the entry they qualify:

    Hopf algebra X:  eta mu eps delta lambda lambdainv, ad, R, Rbar, S, J, a (coev), b (ev)
    pair P:          phiA, phiH, Psi, Omegabar; P is also the Hopf algebra A⋈H
    brace B:         Gamma, GammaP, Phi
    left action f:   Psi2; the bare name f is the action map
    Omega@P          needs a setting that names the H brace for pair P
"""
from __future__ import annotations

from functools import lru_cache

from . import bracelab as bl
from . import drinfeld as dr
from .crossprod import MatchedPairData, bicrossed, psi, smash, smash_pair, tensor_hopf, trivial_pair
from .exactfield import FieldSpec
from .fixtures import (
    Q, automorphism_action, conjugation_pair, factorization_fixtures, group_automorphisms,
    group_brace, homomorphisms_to_aut, skew_brace_pairs,
)
from .hopfcore import (
    ActionData, HopfAlgebraData, adjoint_map, group_algebra, is_cocommutative, is_commutative, sweedler4,
    trivial_left_action,
)
from .morphlang.groups import builtin
from .morphlang.files import document_json
from .morphlang.syntax import Env


def _hopf_resolver(fn):
    def r(env: Env, qual):
        H = env.hopf.get(qual)
        return None if H is None else fn(H)
    return r


def _pair_resolver(fn):
    def r(env: Env, qual):
        mp = env.pairs.get(qual)
        return None if mp is None else fn(mp)
    return r


def _brace_resolver(fn):
    def r(env: Env, qual):
        b = env.braces.get(qual)
        return None if b is None else fn(b)
    return r


def _omega(env: Env, qual):
    mp = env.pairs.get(qual)
    bname = env.settings.get("omega", {}).get(qual)
    if mp is None or bname is None:
        return None
    return bl.omega_map(env.braces[bname], mp)


def _psi2(env: Env, qual):
    act = env.actions.get(qual)
    if act is None or act.side != "left":
        return None
    return bl.psi2_map(act.acting, act.acted, act)


RESOLVERS = {
    "ad": _hopf_resolver(lambda H: adjoint_map(H).materialize()),
    "R": _hopf_resolver(dr.Rmap),
    "Rbar": _hopf_resolver(dr.Rbar),
    "S": _hopf_resolver(dr.Smap),
    "J": _hopf_resolver(dr.Jmap),
    "a": _hopf_resolver(dr.coeval),
    "coev": _hopf_resolver(dr.coeval),
    "b": _hopf_resolver(dr.eval_map),
    "ev": _hopf_resolver(dr.eval_map),
    "phiA": _pair_resolver(lambda mp: mp.phi_A.map),
    "phiH": _pair_resolver(lambda mp: mp.phi_H.map),
    "Psi": _pair_resolver(lambda mp: psi(mp).materialize()),
    "Omegabar": _pair_resolver(bl.omegabar_map),
    "Gamma": _brace_resolver(lambda b: bl.gamma(b).materialize()),
    "GammaP": _brace_resolver(lambda b: bl.gamma_prime(b).materialize()),
    "Phi": _brace_resolver(lambda b: bl.phi_right_map(b).materialize()),
    "Omega": _omega,
    "Psi2": _psi2,
}


def new_env(field: FieldSpec) -> Env:
    env = Env(field)
    env.resolvers.update(RESOLVERS)
    return env


def add_pair(env: Env, name: str, mp: MatchedPairData, product: bool = True) -> None:
    """Register the pair; with ``product`` its bicrossed product is the Hopf entry ``name``."""
    env.pairs[name] = mp
    if product:
        env.add_hopf(name, bicrossed(mp, force=True, name=name))


def add_brace(env: Env, name: str, b: bl.HopfBraceData) -> None:
    env.braces[name] = b


def add_action(env: Env, name: str, act: ActionData) -> None:
    env.actions[name] = act
    env.add_derived(name, None, act.map)


def add_product(env: Env, name: str, spec: dict) -> None:
    """A tensor product of two Hopf entries, or the smash product along a left action."""
    kind, args = next(iter(spec.items()))
    if kind == "tensor":
        H = tensor_hopf(env.hopf[args[0]], env.hopf[args[1]], name=name)
    else:
        H = smash(env.hopf[args[0]], env.hopf[args[1]], env.actions[args[2]], force=True, name=name)
    env.add_hopf(name, H)
    env.products[name] = {kind: list(args)}


def env_document(env: Env) -> dict:
    """Inverse of env_from_document (up to derived entries, which are rebuilt on load)."""
    derived = set(env.pairs) | set(env.products)
    base = {n: H for n, H in env.hopf.items() if n not in derived}
    by_id: dict = {}
    for n, H in env.hopf.items():
        by_id.setdefault(id(H), n)  # an object under several names keeps its first

    def name_of(H):
        if id(H) in by_id:
            return by_id[id(H)]
        for n, X in base.items():
            if X.space == H.space and X.name == H.name:
                return n
        raise KeyError(f"{H.name} is not a named entry")

    def home(act):
        return ActionData(base[name_of(act.acting)], base[name_of(act.acted)], act.map, act.side, act.name)

    actions = {n: home(a) for n, a in env.actions.items()}
    pairs = {}
    for n, mp in env.pairs.items():
        actions[f"{n}_phiA"] = home(mp.phi_A)
        actions[f"{n}_phiH"] = home(mp.phi_H)
        pairs[n] = {"A": name_of(mp.A), "H": name_of(mp.H), "phiA": f"{n}_phiA", "phiH": f"{n}_phiH"}
    braces = {n: {"first": name_of(b.first), "second": name_of(b.second)} for n, b in env.braces.items()}
    return document_json(env.field, base, actions, pairs, braces, dict(env.settings), dict(env.products))


def env_from_document(doc) -> Env:
    """Env for a StructureDocument: hopf entries, actions, pairs, braces, settings."""
    env = new_env(doc.field)
    for n, H in doc.hopf.items():
        env.add_hopf(n, _try_antipode(H))
    for n, a in doc.actions.items():
        acting = _rehome(env, a.acting)
        acted = _rehome(env, a.acted)
        add_action(env, n, ActionData(acting, acted, a.map, a.side, n))
    for n, p in doc.pairs.items():
        A, H = env.hopf[p["A"]], env.hopf[p["H"]]
        pa = env.actions[p["phiA"]] if p.get("phiA") else trivial_left_action(H, A)
        if p.get("phiH"):
            ph = env.actions[p["phiH"]]
        else:
            from .hopfcore import trivial_right_action
            ph = trivial_right_action(H, A)
        add_pair(env, n, MatchedPairData(A, H, pa, ph, n))
    for n, spec in doc.products.items():
        add_product(env, n, spec)
    for n, b in doc.braces.items():
        add_brace(env, n, bl.HopfBraceData(env.hopf[b["first"]], env.hopf[b["second"]]))
    for key, val in doc.settings.items():
        env.settings[key] = val
    return env


def _try_antipode(H):
    try:
        return H.with_antipode()
    except Exception:
        return H


def _rehome(env, H):
    for X in env.hopf.values():
        if X.space == H.space and X.name == H.name:
            return X
    return H


# fixture environments


def pair_env(mp: MatchedPairData) -> Env:
    env = new_env(mp.A.field)
    env.add_hopf("A", mp.A)
    env.add_hopf("H", mp.H)
    add_pair(env, "P", mp)
    return env


def brace_env(b: bl.HopfBraceData) -> Env:
    env = new_env(b.field)
    env.add_hopf("H1", b.first)
    env.add_hopf("H2", b.second)
    add_brace(env, "B", b)
    return env


def mainth2_env(brA, brH, mp2) -> Env:
    """A1 A2 H1 H2, braces BA BH, pair P on (A2, H2), T1 = A1⊗H1, brace BT = (T1, P)."""
    env = new_env(brA.field)
    for n, X in (("A1", brA.first), ("A2", brA.second), ("H1", brH.first), ("H2", brH.second)):
        env.add_hopf(n, X)
    add_brace(env, "BA", brA)
    add_brace(env, "BH", brH)
    add_pair(env, "P", mp2)
    add_product(env, "T1", {"tensor": ["A1", "H1"]})
    add_brace(env, "BT", bl.HopfBraceData(env.hopf["T1"], env.hopf["P"]))
    env.settings["omega"] = {"P": "BH"}
    return env


def mainth_env(brA, brH, mp1, phi2: ActionData) -> Env:
    """A1 A2 H1 H2, braces BA BH, pair P1 on (A1, H1), action phi2, SM = A2♯H2,
    brace BT = (P1, SM)."""
    env = new_env(brA.field)
    for n, X in (("A1", brA.first), ("A2", brA.second), ("H1", brH.first), ("H2", brH.second)):
        env.add_hopf(n, X)
    add_brace(env, "BA", brA)
    add_brace(env, "BH", brH)
    add_pair(env, "P1", mp1)
    add_action(env, "phi2", phi2)
    add_product(env, "SM", {"smash": ["A2", "H2", "phi2"]})
    add_brace(env, "BT", bl.HopfBraceData(env.hopf["P1"], env.hopf["SM"]))
    return env


def smash_hypotheses_env(A, brH, mp1, phi2: ActionData) -> Env:
    """A, H1 H2, brace BH, pair P1 on (A, H1), action phi2 of H2 on A."""
    env = new_env(A.field)
    env.add_hopf("A", A)
    env.add_hopf("H1", brH.first)
    env.add_hopf("H2", brH.second)
    add_brace(env, "BH", brH)
    add_pair(env, "P1", mp1)
    add_action(env, "phi2", phi2)
    return env


def double_env(H: HopfAlgebraData, bundle=None) -> Env:
    """H, Hhat, the Doi–Takeuchi pair DT (Hopf entry DT = D(H)), T = T(H), braces TD and DTb."""
    bundle = dr.double_bundle(H) if bundle is None else bundle
    env = new_env(H.field)
    env.add_hopf("H", bundle.H)
    env.add_hopf("Hhat", bundle.hat)
    env.pairs["DT"] = bundle.mp
    env.add_hopf("DT", bundle.D_mp)
    env.add_hopf("T", bundle.T)
    env.products["T"] = {"tensor": ["Hhat", "H"]}
    add_brace(env, "TD", bl.HopfBraceData(bundle.T, bundle.D_mp))
    add_brace(env, "DTb", bl.HopfBraceData(bundle.D_mp, bundle.T))
    return env


# fixture catalogue


def _group_pairs(field: FieldSpec) -> dict:
    out = {}
    for k, mp in factorization_fixtures(field).items():
        if mp.A.dim * mp.H.dim <= 12:
            out[k] = mp
    for g in ("C2", "C3", "S3"):
        out[f"conj {g}"] = conjugation_pair(builtin(g), field)
    return out


@lru_cache(maxsize=None)
def valid_pairs(field: FieldSpec = Q) -> tuple:
    """(label, matched pair) for fixtures that pass check_matched_pair."""
    out = dict(_group_pairs(field))
    for g in ("C2", "C3", "S3"):
        out[f"DT F[{g}]"] = dr.dt_actions(group_algebra(builtin(g), field).with_antipode())
    if field.characteristic != 2:
        out["DT sweedler"] = dr.dt_actions(sweedler4(field).with_antipode())
    return tuple(out.items())


@lru_cache(maxsize=None)
def brace_fixtures(field: FieldSpec = Q) -> tuple:
    """(label, brace) fixtures: trivial braces plus skew braces on group algebras."""
    out = {}
    for g in ("C2", "C3", "S3"):
        out[f"trivial F[{g}]"] = bl.trivial_brace(group_algebra(builtin(g), field).with_antipode())
    if field.characteristic != 2:
        out["trivial sweedler"] = bl.trivial_brace(sweedler4(field).with_antipode())
    pairs = [p for p in skew_brace_pairs(4) if p[0].table != p[1].table]
    for k, (add, circ) in enumerate(pairs[:3]):
        out[f"skew brace 4.{k}"] = _wb(group_brace(add, circ, field, f"X4_{k}"))
    pairs6 = [p for p in skew_brace_pairs(6) if p[0].table != p[1].table]
    for k, (add, circ) in enumerate(pairs6[:2]):
        out[f"skew brace 6.{k}"] = _wb(group_brace(add, circ, field, f"X6_{k}"))
    return tuple(out.items())


def _wb(b):
    return bl.HopfBraceData(b.first.with_antipode(), b.second.with_antipode())


def _aut_actions(H: HopfAlgebraData, GH, A: HopfAlgebraData, GA, name: str) -> list:
    """Every action of F[GH] on F[GA] through a homomorphism GH -> Aut(GA)."""
    homs = homomorphisms_to_aut(GH, group_automorphisms(GA))
    return [automorphism_action(A, H, {h: hom[h] for h in range(GH.order)}, name) for hom in homs]


@lru_cache(maxsize=None)
def _skew4(field: FieldSpec) -> tuple:
    """Two skew braces on 4 points, with their additive and circle group tables."""
    pairs = [p for p in skew_brace_pairs(4) if p[0].table != p[1].table]
    return tuple((add, circ, _wb(group_brace(add, circ, field, f"X4_{k}")))
                 for k, (add, circ) in enumerate(pairs[:2]))


@lru_cache(maxsize=None)
def mainth2_fixtures(field: FieldSpec = Q) -> tuple:
    """(label, (brA, brH, mp2)) with every precondition of the tensor⋈ theorem."""
    out = {}
    for label, mp in valid_pairs(field):
        if is_cocommutative(mp.H) and mp.A.dim * mp.H.dim <= 12:
            out[f"trivial braces, {label}"] = (bl.trivial_brace(mp.A), bl.trivial_brace(mp.H), mp)
    C2g = builtin("C2")
    C2 = group_algebra(C2g, field).with_antipode()
    for k, (add, circ, brA) in enumerate(_skew4(field)):
        for j, act in enumerate(_aut_actions(C2, C2g, brA.second, circ, "phiA")):
            out[f"skew brace 4.{k}, C2 action {j}"] = (brA, bl.trivial_brace(C2), smash_pair(brA.second, C2, act))
    add, circ, brH = _skew4(field)[0]
    C3 = group_algebra(builtin("C3"), field).with_antipode()
    out["trivial F[C3], skew brace 4.0"] = (bl.trivial_brace(C3), brH, trivial_pair(C3, brH.second))
    return tuple(out.items())


@lru_cache(maxsize=None)
def mainth_fixtures(field: FieldSpec = Q) -> tuple:
    """(label, (brA, brH, mp1, phi2)) with every precondition of the ⋈/♯ theorem."""
    out = {}
    for label, mp in valid_pairs(field):
        if not is_cocommutative(mp.H) or mp.A.dim * mp.H.dim > 12:
            continue
        brA, brH = bl.trivial_brace(mp.A), bl.trivial_brace(mp.H)
        out[f"trivial φ², {label}"] = (brA, brH, mp, trivial_left_action(mp.H, mp.A))
    for ag, hg in (("C3", "C2"), ("C2xC2", "C2"), ("C2xC2", "C3")):
        GA, GH = builtin(ag), builtin(hg)
        A, H = group_algebra(GA, field).with_antipode(), group_algebra(GH, field).with_antipode()
        acts = _aut_actions(H, GH, A, GA, "phi2")[1:]
        for j, phi2 in enumerate(acts[:2]):
            mp = trivial_pair(A, H)
            out[f"F[{hg}] on F[{ag}] by automorphisms {j}"] = (bl.trivial_brace(A), bl.trivial_brace(H), mp, phi2)
            out[f"F[{hg}] on F[{ag}], φ¹ = φ² {j}"] = (
                bl.trivial_brace(A), bl.trivial_brace(H), MatchedPairData(A, H, phi2, mp.phi_H, "P1"), phi2)
        for i, phi1 in enumerate(acts[:3]):
            for j, phi2 in enumerate(acts[:3]):
                if i != j:
                    out[f"F[{hg}] on F[{ag}], φ¹ {i} / φ² {j}"] = (
                        bl.trivial_brace(A), bl.trivial_brace(H), smash_pair(A, H, phi1), phi2)
    C2g = builtin("C2")
    C2 = group_algebra(C2g, field).with_antipode()
    for k, (add, circ, brA) in enumerate(_skew4(field)):
        for i, act1 in enumerate(_aut_actions(C2, C2g, brA.first, add, "phiA")):
            for j, phi2 in enumerate(_aut_actions(C2, C2g, brA.second, circ, "phi2")):
                out[f"skew brace 4.{k}, actions {i}/{j}"] = (
                    brA, bl.trivial_brace(C2), smash_pair(brA.first, C2, act1), phi2)
    return tuple(out.items())


@lru_cache(maxsize=None)
def double_fixtures(field: FieldSpec = Q) -> tuple:
    out = {}
    for g in ("C2", "C3", "S3"):
        H = group_algebra(builtin(g), field).with_antipode()
        out[f"F[{g}]"] = H
    if field.characteristic != 2:
        out["sweedler"] = sweedler4(field).with_antipode()
    return tuple(out.items())


def _trivial(b) -> bool:
    return b.first is b.second


def fixture_envs(kind: str, field: FieldSpec = Q):
    """Yield (label, Env) for the fixture family named in a script header."""
    if kind == "matched-pair":
        for label, mp in valid_pairs(field):
            yield label, pair_env(mp)
    elif kind == "brace":
        for label, b in brace_fixtures(field):
            yield label, brace_env(b)
    elif kind == "mainth2":
        for label, args in mainth2_fixtures(field):
            yield label, mainth2_env(*args)
    elif kind == "mainth":
        for label, args in mainth_fixtures(field):
            yield label, mainth_env(*args)
    elif kind == "agore1":
        for label, (brA, brH, mp) in mainth2_fixtures(field):
            H = brH.first
            if _trivial(brH) and is_commutative(H) and bl.check_tensor_bicrossed_hypotheses(brA, H, mp).passed:
                yield label, mainth2_env(brA, brH, mp)
    elif kind == "agore2":
        for label, (brA, brH, mp1, phi2) in mainth_fixtures(field):
            if _trivial(brA) and bl.check_bicrossed_smash_hypotheses(brA.first, brH, mp1, phi2).passed:
                yield label, smash_hypotheses_env(brA.first, brH, mp1, phi2)
    elif kind == "smash-c1":
        for label, (brA, brH, mp1, phi2) in mainth_fixtures(field):
            if _trivial(brA) and _trivial(brH) and bl.check_C1_smash(mp1, phi2).passed:
                yield label, mainth_env(brA, brH, mp1, phi2)
    elif kind in ("double", "double-cocom", "double-comm", "double-class"):
        for label, H in double_fixtures(field):
            if kind == "double-cocom" and not is_cocommutative(H):
                continue
            if kind == "double-comm" and not is_commutative(H):
                continue
            if kind == "double-class" and not dr.check_d_cocom_class(H).verdict("class condition"):
                continue
            yield label, double_env(H)
    else:
        raise KeyError(f"unknown fixture family {kind!r}")


FIXTURE_KINDS = ("matched-pair", "brace", "mainth2", "mainth", "agore1", "agore2", "smash-c1",
                 "double", "double-cocom", "double-comm", "double-class")
