"""Command line entry point.

    hopfbrace [--field F] [--jobs N] [--timing] build  KIND ...
    hopfbrace [--field F] [--jobs N] [--timing] check  KIND ...
    hopfbrace [--field F] [--jobs N] [--timing] verify SCRIPT [--env FILE]

Reports go to stdout as JSON and a readable summary goes to stderr.  Exit
codes: 0 pass, 1 checked and failed, 2 usage or parse error, 3 precondition
failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bracelab as bl
from . import crossprod as cp
from . import drinfeld as dr
from . import hopfcore as hc
from .envs import (
    FIXTURE_KINDS, env_document, env_from_document, fixture_envs, valid_pairs,
)
from .exactfield import BadFieldSpec, FieldSpec
from .fixtures import conjugation_pair
from .lintensor import Matrix, ShapeMismatch, rebase
from .morphlang.files import (
    ParseError, StructureDocument, ValidationError, document_json, dumps, load_document,
)
from .morphlang.groups import NotAGroup, UnknownElement, builtin, parse_group
from .morphlang.script import parse_script, run_script
from .morphlang.syntax import MorphSyntaxError, MorphTypeError, UnknownName
from .report import CheckReport, PreconditionFailed

SCHEMA = "hopfbrace-report/1"

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

THEOREMS = ("alt", "mainth2", "class-cocom", "smash-cocom", "mainth", "agore1", "agore2",
            "smash-c1", "tensor-c1", "d-cocom", "d-cocom-class", "d-comm", "d-noncomm")


class UsageError(Exception):
    """Bad flags or unreadable input: exit 2."""


@dataclass
class Options:
    field: FieldSpec | None  # None: not given on the command line
    jobs: int | None
    timing: bool

    @property
    def base_field(self) -> FieldSpec:
        return self.field or FieldSpec.rational()


# inputs


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def load_doc(path: str, opts: Options) -> StructureDocument:
    doc = load_document(_read(path))
    if opts.field is not None and doc.field != opts.field:
        raise UsageError(f"{path} is over {doc.field} but --field says {opts.field}")
    return doc


def builtin_hopf(name: str, F: FieldSpec) -> hc.HopfAlgebraData:
    """``sweedler``, ``F[G]``, ``F[G]*`` or a bare group name (its group algebra)."""
    key = name.strip()
    if key.lower() == "sweedler":
        return hc.sweedler4(F)
    if key.endswith("*"):
        inner = key[:-1]
        g = inner[2:-1] if inner.startswith("F[") and inner.endswith("]") else inner
        return hc.dual_group_algebra(builtin(g), F)
    g = key[2:-1] if key.startswith("F[") and key.endswith("]") else key
    return hc.group_algebra(builtin(g), F)


def _pick(table: dict, name: str | None, default: str | None, what: str):
    if name is not None:
        if name not in table:
            raise UsageError(f"no {what} named {name!r} (have: {', '.join(table) or 'none'})")
        return name, table[name]
    if default is not None and default in table:
        return default, table[default]
    if len(table) == 1:
        return next(iter(table.items()))
    raise UsageError(f"choose a {what} with its flag (have: {', '.join(table) or 'none'})")


def hopf_from_args(args, opts: Options, raw: bool = False) -> hc.HopfAlgebraData:
    """One Hopf algebra from --input / --group / --builtin."""
    given = [x for x in (args.input, args.group, args.builtin) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --input, --group, --builtin")
    if args.group:
        H = hc.group_algebra(parse_group(args.group), opts.base_field)
    elif args.builtin:
        H = builtin_hopf(args.builtin, opts.base_field)
    else:
        doc = load_doc(args.input, opts)
        _, H = _pick(doc.hopf, getattr(args, "entry", None), "H", "Hopf entry")
    if raw:
        return H
    try:
        return H.with_antipode()
    except PreconditionFailed:
        return H


def hopf_from_source(src: str, opts: Options, name: str | None = None) -> hc.HopfAlgebraData:
    """``group:SPEC``, ``builtin:NAME`` or a structure file path."""
    kind, sep, rest = src.partition(":")
    if sep and kind in ("group", "builtin"):
        F = opts.base_field
        H = hc.group_algebra(parse_group(rest), F) if kind == "group" else builtin_hopf(rest, F)
    else:
        doc = load_doc(src, opts)
        _, H = _pick(doc.hopf, name, "H", "Hopf entry")
    try:
        return H.with_antipode()
    except PreconditionFailed:
        return H


def env_from_args(args, opts: Options):
    if not args.input:
        raise UsageError("--input is required")
    return env_from_document(load_doc(args.input, opts))


def _brace(env, name, default, what="brace"):
    """A named brace, or the trivial brace on a named Hopf entry."""
    if name is not None and name not in env.braces and name in env.hopf:
        return bl.trivial_brace(env.hopf[name])
    return _pick(env.braces, name, default, what)[1]


def _action(env, name, default, side="left"):
    acts = {n: a for n, a in env.actions.items() if a.side == side}
    return _pick(acts, name, default, f"{side} action")[1]


def pair_from_args(args, opts: Options) -> cp.MatchedPairData:
    if getattr(args, "fixture", None):
        table = dict(valid_pairs(opts.base_field))
        return _pick(table, args.fixture, None, "fixture pair")[1]
    env = env_from_args(args, opts)
    return _pick(env.pairs, args.pair, "P", "pair")[1]


# output


def _emit(payload: dict, summary: str, code: int) -> int:
    sys.stdout.write(json.dumps(payload, ensure_ascii=False, indent=1) + "\n")
    if summary:
        sys.stderr.write(summary.rstrip("\n") + "\n")
    return code


def _report_payload(command: str, reports: list, opts: Options, **extra) -> dict:
    out = {"schema": SCHEMA, "command": command,
           "overall": "pass" if all(r.passed for r in reports) else "fail"}
    out.update(extra)
    out["reports"] = [r.to_json(opts.timing) for r in reports]
    return out


def _emit_reports(command: str, reports: list, opts: Options, **extra) -> int:
    payload = _report_payload(command, reports, opts, **extra)
    summary = "\n".join(r.summary() for r in reports)
    return _emit(payload, summary, EXIT_PASS if payload["overall"] == "pass" else EXIT_FAIL)


def _describe(H: hc.HopfAlgebraData) -> dict:
    return {"name": H.name, "dim": H.dim, "field": H.field.to_json()}


def _write_structures(command: str, outputs: list, args, opts: Options, checks=()) -> int:
    """``outputs``: (path or None, HopfAlgebraData).  A missing path writes to stdout
    (then the build record goes to stderr only)."""
    records = []
    lines = []
    to_stdout = None
    for path, H in outputs:
        text = dumps(document_json(H.field, {"H": H}))
        if path:
            Path(path).write_text(text, encoding="utf-8")
        else:
            to_stdout = text
        records.append({**_describe(H), "path": path})
        lines.append(f"{H.name}: dim {H.dim} over {H.field}" + (f" -> {path}" if path else ""))
    for r in checks:
        lines.append(r.summary())
    ok = all(r.passed for r in checks)
    record = {"schema": SCHEMA, "command": command, "overall": "pass" if ok else "fail",
              "outputs": records, "reports": [r.to_json(opts.timing) for r in checks]}
    if to_stdout is not None:
        sys.stdout.write(to_stdout)
        sys.stderr.write("\n".join(lines) + "\n")
        return EXIT_PASS if ok else EXIT_FAIL
    return _emit(record, "\n".join(lines), EXIT_PASS if ok else EXIT_FAIL)


# build


def cmd_build(args, opts: Options) -> int:
    kind = args.kind
    if kind == "group-algebra":
        if not args.group:
            raise UsageError("--group is required")
        G = parse_group(args.group)
        F = opts.base_field
        H = hc.dual_group_algebra(G, F) if args.dual else hc.group_algebra(G, F)
        return _write_structures("build group-algebra", [(args.output, H.with_antipode())], args, opts)
    if kind in ("dual", "hat-dual"):
        H = hopf_from_args(args, opts)
        out = hc.dual_hopf(H) if kind == "dual" else hc.hat_dual(H)
        return _write_structures(f"build {kind}", [(args.output, out)], args, opts)
    if kind == "tensor":
        if not (args.first and args.second):
            raise UsageError("--first and --second are required")
        A, H = hopf_from_source(args.first, opts), hopf_from_source(args.second, opts)
        if A.field != H.field:
            raise UsageError("the two factors are over different fields")
        T = cp.tensor_hopf(A, H)
        return _write_structures("build tensor", [(args.output, T)], args, opts)
    if kind == "smash":
        if args.conjugation:
            mp = conjugation_pair(parse_group(args.conjugation), opts.base_field)
            A, H, act = mp.A.with_antipode(), mp.H.with_antipode(), mp.phi_A
            act = hc.ActionData(H, A, act.map, "left", act.name)
        else:
            env = env_from_args(args, opts)
            act = _action(env, args.action, None)
            A, H = act.acted, act.acting
        S = cp.smash(A, H, act, jobs=opts.jobs)
        return _write_structures("build smash", [(args.output, S)], args, opts)
    if kind == "bicrossed":
        mp = pair_from_args(args, opts)
        P = cp.bicrossed(mp, jobs=opts.jobs)
        return _write_structures("build bicrossed", [(args.output, P)], args, opts)
    if kind == "double":
        H = hopf_from_args(args, opts)
        bundle = dr.double_bundle(H, opts.jobs)
        outs = [(args.output, bundle.D_mp)]
        if args.t_output:
            outs.append((args.t_output, bundle.T))
        if args.hat_output:
            outs.append((args.hat_output, bundle.hat))
        return _write_structures("build double", outs, args, opts, [bundle.report])
    if kind == "deform":
        H = hopf_from_args(args, opts)
        if args.sigma:
            sig, sig_inv = _read_cocycle(args.sigma, H)
            D = dr.deform(H, sig, sig_inv, name=f"{H.name}^σ")
        else:
            D = dr.double_deformed(H)
        return _write_structures("build deform", [(args.output, D)], args, opts)
    if kind == "fixture":
        return _build_fixture(args, opts)
    raise UsageError(f"unknown build kind {kind!r}")


def _read_cocycle(path: str, H: hc.HopfAlgebraData):
    """``{"sigma": [[i, "c"], ...], "sigma_inv": [...]}`` with i a flat index of H⊗H."""
    try:
        obj = json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: not valid JSON: {e}") from None
    F, n = H.field, H.dim
    out = []
    for key in ("sigma", "sigma_inv"):
        cols = {}
        for e in obj.get(key, []):
            if not (isinstance(e, list) and len(e) == 2 and isinstance(e[0], int) and 0 <= e[0] < n * n):
                raise ParseError(f"{path}: {key} entries are [index, coefficient] with index < {n * n}")
            v = F.parse_scalar(e[1])
            if v:
                cols[e[0]] = {0: v}
        out.append(Matrix.from_flat((H.space, H.space), (), F, cols))
    return out


def _build_fixture(args, opts: Options) -> int:
    F = opts.base_field
    if args.family is None:
        listing = {k: [label for label, _ in fixture_envs(k, F)] for k in FIXTURE_KINDS}
        return _emit({"schema": SCHEMA, "command": "build fixture", "families": listing},
                     "\n".join(f"{k}: {len(v)} fixtures" for k, v in listing.items()), EXIT_PASS)
    if args.family not in FIXTURE_KINDS:
        raise UsageError(f"unknown family {args.family!r}; one of {', '.join(FIXTURE_KINDS)}")
    envs = dict(fixture_envs(args.family, F))
    label, env = _pick(envs, args.label, None, f"{args.family} fixture")
    text = dumps(env_document(env))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        return _emit({"schema": SCHEMA, "command": "build fixture", "family": args.family,
                      "label": label, "path": args.output}, f"{args.family} / {label} -> {args.output}",
                     EXIT_PASS)
    sys.stdout.write(text)
    return EXIT_PASS


# check


def cmd_check(args, opts: Options) -> int:
    kind = args.kind
    jobs = opts.jobs
    if kind == "hopf":
        H = hopf_from_args(args, opts, raw=True)
        return _emit_reports("check hopf", [hc.check_hopf(H, jobs)], opts, structure=_describe(H))
    if kind == "module":
        env = env_from_args(args, opts)
        _, act = _pick(env.actions, args.action, None, "action")
        reps = [hc.check_module(act, jobs)]
        if args.laws in ("algebra", "all"):
            reps.append(hc.check_module_algebra(act, jobs))
        if args.laws in ("coalgebra", "all"):
            reps.append(hc.check_module_coalgebra(act, jobs))
        if args.laws in ("class", "all") and act.side == "left":
            reps.append(hc.check_cocom_class(act, jobs))
        return _emit_reports("check module", reps, opts)
    if kind == "matched-pair":
        mp = pair_from_args(args, opts)
        return _emit_reports("check matched-pair", [cp.check_matched_pair(mp, jobs)], opts)
    if kind == "brace":
        b = brace_from_args(args, opts)
        return _emit_reports("check brace", [bl.check_brace(b, jobs)], opts)
    if kind == "theorem":
        return _check_theorem(args, opts)
    raise UsageError(f"unknown check kind {kind!r}")


def brace_from_args(args, opts: Options) -> bl.HopfBraceData:
    if args.first or args.second:
        if not (args.first and args.second):
            raise UsageError("--first and --second go together")
        H1, H2 = hopf_from_source(args.first, opts), hopf_from_source(args.second, opts)
        if H1.space.atoms != H2.space.atoms:
            if H1.dim != H2.dim:
                raise UsageError(f"dimensions differ: {H1.dim} vs {H2.dim}")
            H2 = _rebase_hopf(H2, H1.space)
        return bl.HopfBraceData(H1, H2)
    env = env_from_args(args, opts)
    return _brace(env, args.brace, "B")


def _rebase_hopf(H: hc.HopfAlgebraData, space) -> hc.HopfAlgebraData:
    """Declare H's structure maps on another space of the same dimension."""
    r = lambda f: None if f is None else rebase(f, tuple(space for _ in f.dom), tuple(space for _ in f.cod))
    return hc.HopfAlgebraData(H.name, space, H.field, r(H.eta), r(H.mu), r(H.eps), r(H.delta),
                              r(H.lam), r(H.lam_inv))


def theorem_case(name: str, args, opts: Options):
    """(checker report thunk, constructed brace thunk) for a theorem name."""
    jobs = opts.jobs
    if name.startswith("d-"):
        H = hopf_from_args(args, opts)
        if name == "d-cocom":
            return (lambda: dr.check_d_cocom(H, jobs)), (lambda: dr.brace_T_D(H))
        if name == "d-comm":
            return (lambda: dr.check_d_comm(H, jobs)), (lambda: dr.brace_D_T(H))
        if name == "d-cocom-class":
            return (lambda: dr.check_d_cocom_class(H, jobs)), (lambda: dr.brace_T_D(H))
        return (lambda: dr.check_d_noncomm(H, jobs)), (lambda: dr.brace_D_T(H))
    if name == "alt":
        b = brace_from_args(args, opts)
        return (lambda: bl.check_brace_alt(b, jobs)), (lambda: b)
    if name == "class-cocom":
        mp = pair_from_args(args, opts)
        return (lambda: bl.check_z1_z2(mp, jobs)), (lambda: _pair_brace(cp.tensor_hopf(mp.A, mp.H), mp))
    if name == "tensor-c1":
        mp = pair_from_args(args, opts)
        return (lambda: bl.check_C1_tensor(mp, jobs)), \
            (lambda: bl.HopfBraceData(_bicrossed(mp), cp.tensor_hopf(mp.A, mp.H)))
    env = env_from_args(args, opts)
    if name == "mainth2":
        brA, brH = _brace(env, args.brA, "BA"), _brace(env, args.brH, "BH")
        mp = _pick(env.pairs, args.pair, "P", "pair")[1]
        return (lambda: bl.check_E1_E2(brA, brH, mp, jobs)), \
            (lambda: _pair_brace(cp.tensor_hopf(brA.first, brH.first), mp))
    if name == "smash-cocom":
        act = _action(env, args.action, None)
        A, H = act.acted, act.acting

        def smash_cocom():
            cls = hc.check_cocom_class(act, jobs)
            if not cls.passed:
                raise bl.NotInCocommutativityClass("the action is not in the cocommutativity class", cls)
            rep = CheckReport(f"smash brace ({A.name}⊗{H.name}, {A.name}♯{H.name})")
            rep.extend(cls, "hypothesis: ")
            rep.extend(hc.check_module_algebra(act, jobs), "hypothesis: module algebra ")
            rep.extend(hc.check_module_coalgebra(act, jobs), "hypothesis: module coalgebra ")
            return rep
        return smash_cocom, (lambda: bl.HopfBraceData(cp.tensor_hopf(A, H), cp.smash(A, H, act, force=True)))
    if name == "mainth":
        brA, brH = _brace(env, args.brA, "BA"), _brace(env, args.brH, "BH")
        mp = _pick(env.pairs, args.pair, "P1", "pair")[1]
        phi2 = _action(env, args.action, "phi2")
        return (lambda: bl.check_C1_C2_C3(brA, brH, mp, phi2, jobs)), \
            (lambda: bl.HopfBraceData(_bicrossed(mp), cp.smash(brA.second, brH.second, phi2, force=True)))
    if name == "agore1":
        brA = _brace(env, args.brA, "BA")
        H = _pick(env.hopf, args.hopf, "H1", "Hopf entry")[1]
        mp = _pick(env.pairs, args.pair, "P", "pair")[1]
        return (lambda: bl.check_tensor_bicrossed_hypotheses(brA, H, mp, jobs)), \
            (lambda: _pair_brace(cp.tensor_hopf(brA.first, H), mp))
    if name == "agore2":
        A = _pick(env.hopf, args.hopf, "A", "Hopf entry")[1]
        brH = _brace(env, args.brH, "BH")
        mp = _pick(env.pairs, args.pair, "P1", "pair")[1]
        phi2 = _action(env, args.action, "phi2")
        return (lambda: bl.check_bicrossed_smash_hypotheses(A, brH, mp, phi2, jobs)), \
            (lambda: bl.HopfBraceData(_bicrossed(mp), cp.smash(A, brH.second, phi2, force=True)))
    if name == "smash-c1":
        mp = _pick(env.pairs, args.pair, "P1", "pair")[1]
        phi2 = _action(env, args.action, "phi2")
        return (lambda: bl.check_C1_smash(mp, phi2, jobs)), \
            (lambda: bl.HopfBraceData(_bicrossed(mp), cp.smash(mp.A, mp.H, phi2, force=True)))
    raise UsageError(f"unknown theorem {name!r}")


def _bicrossed(mp):
    return cp.bicrossed(mp, force=True)


def _pair_brace(first, mp):
    return bl.HopfBraceData(first, _bicrossed(mp))


def _check_theorem(args, opts: Options) -> int:
    if not args.theorem:
        raise UsageError("check theorem needs --name")
    checker, construct = theorem_case(args.theorem, args, opts)
    rep = checker()
    extra = {"theorem": args.theorem}
    reports = [rep]
    if args.direct:
        direct = bl.check_brace(construct(), opts.jobs)
        extra["direct"] = direct.to_json(opts.timing)
        extra["agree"] = direct.passed == rep.passed
    payload = _report_payload(f"check theorem {args.theorem}", reports, opts, **extra)
    summary = rep.summary()
    if args.direct:
        verdict = "PASS" if extra["direct"]["overall"] == "pass" else "FAIL"
        summary += f"\ndirect brace check: {verdict} ({'agrees' if extra['agree'] else 'DISAGREES'})"
    return _emit(payload, summary, EXIT_PASS if rep.passed else EXIT_FAIL)


# verify


def cmd_verify(args, opts: Options) -> int:
    src = _read(args.script).decode("utf-8")
    script = parse_script(src)
    F = opts.base_field
    if args.env:
        doc = load_doc(args.env, opts)
        envs = [(Path(args.env).name, env_from_document(doc))]
        family = None
    else:
        family = args.family or script.family
        if family is None:
            raise UsageError("the script names no '# fixtures:' family; pass --env or --family")
        if family not in FIXTURE_KINDS:
            raise UsageError(f"unknown family {family!r}")
        envs = list(fixture_envs(family, F))
        if args.fixture:
            envs = [(l, e) for l, e in envs if l == args.fixture]
            if not envs:
                raise UsageError(f"no fixture {args.fixture!r} in family {family}")
    runs, lines, ok = [], [], True
    for label, env in envs:
        rep = run_script(script, env, opts.jobs, subject=f"{Path(args.script).name} on {label}")
        ok &= rep.passed
        runs.append({"fixture": label, **rep.to_json(opts.timing)})
        lines.append(rep.summary())
    payload = {"schema": SCHEMA, "command": "verify", "script": Path(args.script).name,
               "family": family, "overall": "pass" if ok else "fail", "reports": runs}
    return _emit(payload, "\n".join(lines), EXIT_PASS if ok else EXIT_FAIL)


# argument parsing


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except BadFieldSpec as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _jobs(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("--jobs must be at least 1")
    return n


def _add_hopf_input(p, entry_flag: str):
    p.add_argument("--input", "-i", help="structure file")
    p.add_argument("--group", "-g", help="group spec: builtin name, 'perm: (12),(123)' or 'table: ...'")
    p.add_argument("--builtin", "-b", help="sweedler, F[G], F[G]* or a group name")
    p.add_argument(entry_flag, dest="entry", help="Hopf entry to use when the file has several")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfbrace", description=__doc__.split("\n\n")[0])
    ap.add_argument("--field", type=_field, default=None, help="rational (default) or prime:p")
    ap.add_argument("--jobs", "-j", type=_jobs, default=1, help="parallel basis evaluation")
    ap.add_argument("--timing", action="store_true", help="add elapsed_ms to every law")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a structure file")
    b.add_argument("kind", choices=("group-algebra", "dual", "hat-dual", "tensor", "smash", "bicrossed",
                                    "double", "deform", "fixture"))
    _add_hopf_input(b, "--name")
    b.add_argument("--output", "-o")
    b.add_argument("--dual", action="store_true", help="group-algebra: build F[G]* instead")
    b.add_argument("--first")
    b.add_argument("--second")
    b.add_argument("--action")
    b.add_argument("--pair")
    b.add_argument("--conjugation", metavar="GROUP", help="smash: F[G]*♯F[G] by conjugation")
    b.add_argument("--fixture", help="bicrossed: a built-in matched pair by label")
    b.add_argument("--t-output", help="double: also write T(H)")
    b.add_argument("--hat-output", help="double: also write the dual Ĥ")
    b.add_argument("--sigma", help="deform: cocycle file; default is the double's cocycle on T(H)")
    b.add_argument("--family", help="fixture: family name (omit to list)")
    b.add_argument("--label", help="fixture: label within the family")

    c = sub.add_parser("check", help="run a checker and print a report")
    c.add_argument("kind", choices=("hopf", "module", "matched-pair", "brace", "theorem"))
    _add_hopf_input(c, "--entry")
    c.add_argument("--first")
    c.add_argument("--second")
    c.add_argument("--brace")
    c.add_argument("--action")
    c.add_argument("--pair")
    c.add_argument("--fixture", help="a built-in matched pair by label")
    c.add_argument("--laws", choices=("module", "algebra", "coalgebra", "class", "all"), default="all")
    c.add_argument("--name", dest="theorem", choices=THEOREMS, help="theorem: which checker")
    c.add_argument("--brA")
    c.add_argument("--brH")
    c.add_argument("--hopf")
    c.add_argument("--direct", action="store_true", help="theorem: also check the constructed brace")

    v = sub.add_parser("verify", help="run a verification script")
    v.add_argument("script")
    v.add_argument("--env", help="structure file to run against (default: the script's fixture family)")
    v.add_argument("--family")
    v.add_argument("--fixture")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    opts = Options(args.field, args.jobs, args.timing)
    try:
        if args.command == "build":
            return cmd_build(args, opts)
        if args.command == "check":
            return cmd_check(args, opts)
        return cmd_verify(args, opts)
    except (MorphSyntaxError, MorphTypeError, UnknownName) as e:
        where = getattr(args, "script", "") or ""
        return _error(EXIT_USAGE, type(e).__name__, f"{where}:{e}" if where else str(e),
                      line=e.line, col=e.col)
    except (UsageError, ParseError, ValidationError, NotAGroup, UnknownElement, BadFieldSpec,
            ShapeMismatch) as e:
        return _error(EXIT_USAGE, type(e).__name__, str(e))
    except PreconditionFailed as e:
        return _error(EXIT_PRECONDITION, type(e).__name__, str(e), report=e.report, opts=opts)


def _error(code: int, kind: str, message: str, report=None, opts=None, **where) -> int:
    err = {"type": kind, "message": message, **where}
    payload = {"schema": SCHEMA, "overall": "error", "error": err}
    summary = f"error: {message}"
    if report is not None:
        payload["report"] = report.to_json(bool(opts and opts.timing))
        summary += "\n" + report.summary()
    return _emit(payload, summary, code)


if __name__ == "__main__":
    sys.exit(main())
