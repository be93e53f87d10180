"""Small concrete inputs: group matched pairs, skew braces on group algebras,
relabelled structures.  Used by the tests, the CLI builtins and scripts."""
from __future__ import annotations

import itertools
from dataclasses import replace

from .bracelab import HopfBraceData
from .crossprod import MatchedPairData, smash_pair
from .exactfield import FieldSpec
from .hopfcore import (
    ActionData, HopfAlgebraData, dual_group_algebra, group_algebra, left_action, on_space,
    right_action, sweedler4,
)
from .lintensor import Matrix, Space, compose, tensor
from .morphlang.groups import GroupTable, builtin

Q = FieldSpec.rational()

SMALL_GROUPS = ("C2", "C3", "C4", "C2xC2", "S3")


def subgroup(X: GroupTable, labels, name: str) -> tuple[GroupTable, list]:
    """The subgroup on the given labels, plus the embedding into X's indices."""
    idx = [X.index(l) for l in labels]
    if X.identity in idx:
        idx.remove(X.identity)
    idx = [X.identity] + idx
    pos = {x: i for i, x in enumerate(idx)}
    table = [[pos[X.mul(a, b)] for b in idx] for a in idx]
    return GroupTable.from_table(name, [X.labels[i] for i in idx], table), idx


def generated(X: GroupTable, gens) -> list:
    """Labels of the subgroup generated by ``gens``."""
    els = {X.identity}
    frontier = [X.identity]
    gi = [X.index(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gi:
                y = X.mul(x, g)
                if y not in els:
                    els.add(y)
                    nxt.append(y)
        frontier = nxt
    return [X.labels[i] for i in sorted(els)]


def _acting_map(H, A, fn) -> Matrix:
    """Linear map H⊗A -> A from a basis function (h, a) -> index."""
    return Matrix.from_flat((H.space, A.space), (A.space,), H.field,
                            {h * A.dim + a: {fn(h, a): 1} for h in range(H.dim) for a in range(A.dim)})


def _acted_map(H, A, fn) -> Matrix:
    return Matrix.from_flat((H.space, A.space), (H.space,), H.field,
                            {h * A.dim + a: {fn(h, a): 1} for h in range(H.dim) for a in range(A.dim)})


def factorization_pair(X: GroupTable, A_labels, H_labels, field: FieldSpec = Q,
                       names=("A", "H")) -> MatchedPairData:
    """Exact factorization X = A·H: h·a = (h▷a)(h◁a) gives the group matched pair."""
    GA, ia = subgroup(X, A_labels, names[0])
    GH, ih = subgroup(X, H_labels, names[1])
    if GA.order * GH.order != X.order:
        raise ValueError("orders do not multiply to |X|")
    split = {}
    for a, h in itertools.product(range(GA.order), range(GH.order)):
        split[X.mul(ia[a], ih[h])] = (a, h)
    if len(split) != X.order:
        raise ValueError("not an exact factorization")
    A, H = group_algebra(GA, field), group_algebra(GH, field)
    tri = lambda h, a: split[X.mul(ih[h], ia[a])][0]
    tle = lambda h, a: split[X.mul(ih[h], ia[a])][1]
    return MatchedPairData(A, H, left_action(H, A, _acting_map(H, A, tri), "tri"),
                           right_action(H, A, _acted_map(H, A, tle), "tle"),
                           f"{X.name}={GA.name}·{GH.name}")


def automorphism_action(A: HopfAlgebraData, H: HopfAlgebraData, auts: dict, name="aut") -> ActionData:
    """``auts[h]`` is a permutation (tuple) of A's group basis."""
    return left_action(H, A, _acting_map(H, A, lambda h, a: auts[h][a]), name)


def group_automorphisms(G: GroupTable) -> list:
    """All automorphisms as index tuples (brute force; fine for order ≤ 8)."""
    n = G.order
    others = [i for i in range(n) if i != G.identity]
    out = []
    for perm in itertools.permutations(others):
        m = {G.identity: G.identity}
        m.update(zip(others, perm))
        if all(m[G.mul(a, b)] == G.mul(m[a], m[b]) for a in range(n) for b in range(n)):
            out.append(tuple(m[i] for i in range(n)))
    return out


def homomorphisms_to_aut(H: GroupTable, auts: list) -> list:
    """Homomorphisms H -> Aut given as lists of permutations, by brute force."""
    n = len(auts[0])

    def comp(p, q):
        return tuple(p[q[i]] for i in range(n))

    out = []
    ident = tuple(range(n))
    for images in itertools.product(auts, repeat=H.order):
        if images[H.identity] != ident:
            continue
        if all(images[H.mul(x, y)] == comp(images[x], images[y])
               for x in range(H.order) for y in range(H.order)):
            out.append(list(images))
    return out


# group structures and skew braces on a fixed set


def relabelled_groups(n: int) -> list:
    """Distinct group tables on {0..n-1} with identity 0, labels e, x1, x2, ..."""
    bases = {4: ("C4", "C2xC2"), 2: ("C2",), 3: ("C3",), 6: ("C6", "S3"), 8: ("C8", "C2xC4", "D4", "Q8")}
    seen = []
    for name in bases.get(n, ()):
        try:
            G = builtin(name)
        except Exception:
            continue
        others = [i for i in range(n) if i != G.identity]
        for perm in itertools.permutations(range(1, n)):
            pi = {G.identity: 0}
            pi.update(zip(others, perm))
            tab = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(n):
                    tab[pi[i]][pi[j]] = pi[G.mul(i, j)]
            t = tuple(tuple(r) for r in tab)
            if t not in seen:
                seen.append(t)
    labels = ["e"] + [f"x{i}" for i in range(1, n)]
    return [GroupTable.from_table(f"G{n}_{k}", labels, t) for k, t in enumerate(seen)]


def is_skew_brace(add: GroupTable, circ: GroupTable) -> bool:
    """a∘(b·c) = (a∘b)·a⁻¹·(a∘c) with · = add."""
    n = add.order
    m, o, inv = add.mul, circ.mul, add.inv
    return all(o(a, m(b, c)) == m(m(o(a, b), inv(a)), o(a, c))
               for a in range(n) for b in range(n) for c in range(n))


def group_brace(add: GroupTable, circ: GroupTable, field: FieldSpec = Q, name="X") -> HopfBraceData:
    space = Space(f"F[{name}]", add.labels)
    return HopfBraceData(on_space(group_algebra(add, field), space, f"F[{add.name}]"),
                         on_space(group_algebra(circ, field), space, f"F[{circ.name}]"))


def skew_brace_pairs(n: int, want: bool | None = True) -> list:
    """(add, circ) table pairs on n points; ``want`` filters on the brace property."""
    gs = relabelled_groups(n)
    out = []
    for a, b in itertools.product(gs, repeat=2):
        ok = is_skew_brace(a, b)
        if want is None or ok == want:
            out.append((a, b))
    return out


def relabel(H: HopfAlgebraData, perm, name: str | None = None) -> HopfAlgebraData:
    """Transport every structure map along the basis permutation e_i ↦ e_perm[i]."""
    n = H.dim
    P = Matrix.from_flat((H.space,), (H.space,), H.field, {i: {perm[i]: 1} for i in range(n)})
    Pinv = Matrix.from_flat((H.space,), (H.space,), H.field, {perm[i]: {i: 1} for i in range(n)})
    t = lambda f, pre, post: None if f is None else compose(*post, f, *pre).materialize().retype(f.dom, f.cod)
    return replace(
        H, name=name or f"{H.name}'",
        eta=t(H.eta, [], [P]), mu=t(H.mu, [tensor(Pinv, Pinv)], [P]), eps=t(H.eps, [Pinv], []),
        delta=t(H.delta, [Pinv], [tensor(P, P)]), lam=t(H.lam, [Pinv], [P]),
        lam_inv=t(H.lam_inv, [Pinv], [P]),
    )


# standard fixture lists


def hopf_fixtures(field: FieldSpec = Q) -> dict:
    out = {}
    for g in SMALL_GROUPS:
        G = builtin(g)
        out[f"F[{g}]"] = group_algebra(G, field)
        out[f"F[{g}]*"] = dual_group_algebra(G, field)
    if field.characteristic != 2:
        out["sweedler"] = sweedler4(field)
    return out


def conjugation_pair(G: GroupTable, field: FieldSpec = Q) -> MatchedPairData:
    """(F[G]*, F[G]) with g·f_r = f_{grg⁻¹} and trivial φ_H."""
    A, H = dual_group_algebra(G, field), group_algebra(G, field)
    act = _acting_map(H, A, lambda g, r: G.conj(g, r))
    return smash_pair(A, H, left_action(H, A, act, "conj"))


def factorization_fixtures(field: FieldSpec = Q) -> dict:
    S3, S4, A4, D4 = builtin("S3"), builtin("S4"), builtin("A4"), builtin("D4")
    c3 = generated(S3, ["(123)"])
    c2 = generated(S3, ["(12)"])
    s4_c4 = generated(S4, ["(1234)"])
    s4_s3 = generated(S4, ["(12)", "(123)"])
    s4_v4 = generated(S4, ["(12)(34)", "(13)(24)"])
    a4_v4 = generated(A4, ["(12)(34)", "(13)(24)"])
    a4_c3 = generated(A4, ["(123)"])
    d4_c4 = generated(D4, ["(1234)"])
    d4_c2 = generated(D4, ["(13)"])
    spec = {
        "S3=C3·C2": (S3, c3, c2), "S3=C2·C3": (S3, c2, c3),
        "S4=C4·S3": (S4, s4_c4, s4_s3), "S4=S3·C4": (S4, s4_s3, s4_c4),
        "S4=V4·S3": (S4, s4_v4, s4_s3), "S4=S3·V4": (S4, s4_s3, s4_v4),
        "A4=V4·C3": (A4, a4_v4, a4_c3), "A4=C3·V4": (A4, a4_c3, a4_v4),
        "D4=C4·C2": (D4, d4_c4, d4_c2), "D4=C2·C4": (D4, d4_c2, d4_c4),
    }
    return {k: factorization_pair(X, a, h, field, names=(k.split("=")[1].split("·")))
            for k, (X, a, h) in spec.items()}
