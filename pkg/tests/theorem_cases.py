"""Inputs for every theorem checker, each paired with the brace it characterizes.

A case is (label, checker, construct): ``checker()`` returns the checker's
report and ``construct()`` the brace whose direct check it must agree with.
"""
from functools import lru_cache

from conftest import F3, F5, Q
from hopfbrace import bracelab as bl, crossprod as cp, drinfeld as dr, envs, fixtures as fx
from hopfbrace import hopfcore as hc
from hopfbrace.morphlang.groups import builtin

CHECKERS = ("alt", "mainth2", "class-cocom", "mainth", "smash-c1", "tensor-c1",
            "d-cocom-class", "d-noncomm")


def _bicrossed(mp):
    return cp.bicrossed(mp, force=True)


def alt_cases():
    out = []
    for label, b in envs.brace_fixtures(Q):
        out.append((label, b))
    for n, k in ((4, 6), (6, 2)):
        for i, (add, circ) in enumerate(fx.skew_brace_pairs(n, want=False)[:k]):
            out.append((f"non-brace tables {n}.{i}", envs._wb(fx.group_brace(add, circ, Q, f"N{n}_{i}"))))
    return [(label, (lambda b=b: bl.check_brace_alt(b)), (lambda b=b: b)) for label, b in out]


def mainth2_cases():
    return [(label, (lambda a=a: bl.check_E1_E2(*a)),
             (lambda a=a: bl.HopfBraceData(cp.tensor_hopf(a[0].first, a[1].first), _bicrossed(a[2]))))
            for label, a in envs.mainth2_fixtures(Q)]


def _class_pairs():
    pairs = {label: mp for label, mp in envs.valid_pairs(Q)
             if hc.check_cocom_class(mp.phi_A).passed}
    for label, mp in fx.factorization_fixtures(Q).items():
        if "D4" not in label and cp.check_matched_pair(mp).passed:
            pairs.setdefault(label, mp)
    return pairs


def class_cocom_cases():
    return [(label, (lambda mp=mp: bl.check_z1_z2(mp)),
             (lambda mp=mp: bl.HopfBraceData(cp.tensor_hopf(mp.A, mp.H), _bicrossed(mp))))
            for label, mp in _class_pairs().items()]


def tensor_c1_cases():
    pairs = dict(_class_pairs())
    for label, mp in envs.valid_pairs(Q):
        pairs.setdefault(label, mp)
    pairs["DT F[S3]*"] = dr.dt_actions(hc.dual_group_algebra(builtin("S3"), Q))
    return [(label, (lambda mp=mp: bl.check_C1_tensor(mp)),
             (lambda mp=mp: bl.HopfBraceData(_bicrossed(mp), cp.tensor_hopf(mp.A, mp.H))))
            for label, mp in pairs.items()]


def mainth_cases():
    return [(label, (lambda a=a: bl.check_C1_C2_C3(*a)),
             (lambda a=a: bl.HopfBraceData(_bicrossed(a[2]), cp.smash(a[0].second, a[1].second, a[3], force=True))))
            for label, a in envs.mainth_fixtures(Q)]


def smash_c1_cases():
    out = []
    for label, (brA, brH, mp1, phi2) in envs.mainth_fixtures(Q):
        if brA.first is brA.second and brH.first is brH.second:
            out.append((label, (lambda m=mp1, p=phi2: bl.check_C1_smash(m, p)),
                        (lambda m=mp1, p=phi2: bl.HopfBraceData(_bicrossed(m), cp.smash(m.A, m.H, p, force=True)))))
    return out


def _double_inputs():
    out = []
    for F in (Q, F5):
        for g in ("C2", "C3", "C4", "C2xC2", "S3"):
            out.append((f"F[{g}] over {F}", ("group", g, F)))
        out.append((f"F[S3]* over {F}", ("dual", "S3", F)))
    for F in (Q, F3, F5):
        out.append((f"sweedler over {F}", ("sweedler", None, F)))
    return out


@lru_cache(maxsize=None)
def double_input(kind, g, F):
    if kind == "group":
        H = hc.group_algebra(builtin(g), F)
    elif kind == "dual":
        H = hc.dual_group_algebra(builtin(g), F)
    else:
        H = hc.sweedler4(F)
    H = H.with_antipode()
    return H, dr.double_bundle(H)


def d_cocom_class_cases():
    return [(label, (lambda k=k: dr.check_d_cocom_class(double_input(*k)[0])),
             (lambda k=k: dr.brace_T_D(*double_input(*k))))
            for label, k in _double_inputs()]


def d_noncomm_cases():
    return [(label, (lambda k=k: dr.check_d_noncomm(double_input(*k)[0])),
             (lambda k=k: dr.brace_D_T(*double_input(*k))))
            for label, k in _double_inputs()]


BUILDERS = {
    "alt": alt_cases, "mainth2": mainth2_cases, "class-cocom": class_cocom_cases,
    "mainth": mainth_cases, "smash-c1": smash_c1_cases, "tensor-c1": tensor_c1_cases,
    "d-cocom-class": d_cocom_class_cases, "d-noncomm": d_noncomm_cases,
}


@lru_cache(maxsize=None)
def cases(name):
    return tuple(BUILDERS[name]())


_RESULTS: dict = {}


def outcome(name, label):
    """(checker passed, direct check passed), computed once per case."""
    key = (name, label)
    if key not in _RESULTS:
        _, checker, construct = next(c for c in cases(name) if c[0] == label)
        _RESULTS[key] = (checker().passed, bl.check_brace(construct()).passed)
    return _RESULTS[key]


def all_case_ids():
    return [(name, label) for name in CHECKERS for label, _, _ in cases(name)]
