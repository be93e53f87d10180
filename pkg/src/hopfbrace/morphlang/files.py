"""JSON structure-constant files: Hopf algebras, actions, pairs and braces.

Document layout::

    {"field": {"type": "rational"} | {"type": "prime", "p": 5},
     "spaces": {"F[S3]": {"dim": 6, "labels": [...]}},
     "hopf": {"H": {"space": "F[S3]", "unit": [[k, "c"], ...], "counit": ["c", ...],
                    "mult": [[i, j, [[k, "c"], ...]], ...],
                    "comult": [[i, [[j, k, "c"], ...]], ...],
                    "antipode": [[[k, "c"], ...], ...]}},
     "actions": {"phi": {"domain": ["H", "A"], "codomain": "A",
                         "columns": [[i, [[k, "c"], ...]], ...]}},
     "pairs": {"P": {"A": "A", "H": "H", "phiA": "phi", "phiH": "psi"}},
     "products": {"T": {"tensor": ["A", "H"]}, "S": {"smash": ["A", "H", "phi"]}},
     "braces": {"B": {"first": "H1", "second": "H2"}},
     "settings": {...}}

Action ``domain``/``codomain`` name Hopf entries.  A left action has codomain
equal to the second domain factor, a right action (of A on H) has codomain
equal to the first.  A pair also names its bicrossed product, and a brace may
use any Hopf, pair or product name.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from ..exactfield import BadFieldSpec, DivisionByZero, FieldSpec
from ..hopfcore import ActionData, HopfAlgebraData, make_hopf
from ..lintensor import Matrix, Space, unravel


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    pass


@dataclass
class StructureDocument:
    field: FieldSpec
    spaces: dict = dc_field(default_factory=dict)
    hopf: dict = dc_field(default_factory=dict)
    actions: dict = dc_field(default_factory=dict)
    pairs: dict = dc_field(default_factory=dict)  # name -> dict of entry names
    braces: dict = dc_field(default_factory=dict)
    products: dict = dc_field(default_factory=dict)  # name -> {"tensor": [X, Y]} | {"smash": [A, H, act]}
    settings: dict = dc_field(default_factory=dict)


# reading


def _scalar(F: FieldSpec, x, where: str):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"{where}: coefficient must be a string, got {x!r}")
    try:
        return F.parse_scalar(x)
    except DivisionByZero as e:
        raise ParseError(f"{where}: {e}") from None
    except ValueError:
        raise ParseError(f"{where}: bad coefficient {x!r}") from None


def parse_field(obj) -> FieldSpec:
    if not isinstance(obj, dict):
        raise ParseError("field must be an object with a 'type'")
    if obj.get("type") == "prime" and (not isinstance(obj.get("p"), int) or isinstance(obj.get("p"), bool)):
        raise ParseError(f"field: p = {obj.get('p')!r} is not an integer")
    try:
        return FieldSpec.from_json(obj)
    except (BadFieldSpec, KeyError) as e:
        raise ParseError(f"field: {e}") from None


def _index(x, n: int, where: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
        raise ParseError(f"{where}: index {x!r} out of range 0..{n - 1}")
    return x


def _sparse(F, entries, n: int, where: str) -> dict:
    out: dict = {}
    if not isinstance(entries, list):
        raise ParseError(f"{where}: expected a list of [index, coeff]")
    for e in entries:
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"{where}: expected [index, coeff], got {e!r}")
        k = _index(e[0], n, where)
        out[k] = F.add(out.get(k, 0), _scalar(F, e[1], where))
    return {k: v for k, v in out.items() if v}


def _parse_space(name, obj) -> Space:
    if not isinstance(obj, dict) or "dim" not in obj:
        raise ParseError(f"space {name!r}: needs 'dim'")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(f"space {name!r}: bad dim {dim!r}")
    labels = obj.get("labels") or [f"{name}{i}" for i in range(dim)]
    if len(labels) != dim or len(set(labels)) != dim:
        raise ValidationError(f"space {name!r}: need {dim} distinct labels")
    return Space(name, tuple(str(l) for l in labels))


def _parse_hopf(F, name, obj, spaces) -> HopfAlgebraData:
    where = f"hopf {name!r}"
    if obj.get("space") not in spaces:
        raise ValidationError(f"{where}: unknown space {obj.get('space')!r}")
    S = spaces[obj["space"]]
    n = S.dim
    for key in ("unit", "counit", "mult", "comult"):
        if key not in obj:
            raise ParseError(f"{where}: missing {key!r}")
    unit = _sparse(F, obj["unit"], n, where + " unit")
    counit = obj["counit"]
    if not isinstance(counit, list) or len(counit) != n:
        raise ValidationError(f"{where}: counit must list {n} values")
    counit = [_scalar(F, x, where + " counit") for x in counit]
    mult: dict = {}
    for e in obj["mult"]:
        if not isinstance(e, list) or len(e) != 3:
            raise ParseError(f"{where} mult: expected [i, j, terms], got {e!r}")
        i, j = _index(e[0], n, where + " mult"), _index(e[1], n, where + " mult")
        if (i, j) in mult:
            raise ValidationError(f"{where} mult: pair ({i}, {j}) given twice")
        mult[(i, j)] = _sparse(F, e[2], n, where + " mult")
    comult: dict = {}
    for e in obj["comult"]:
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"{where} comult: expected [i, terms], got {e!r}")
        i = _index(e[0], n, where + " comult")
        if i in comult:
            raise ValidationError(f"{where} comult: row {i} given twice")
        row: dict = {}
        for t in e[1]:
            if not isinstance(t, list) or len(t) != 3:
                raise ParseError(f"{where} comult: expected [j, k, coeff], got {t!r}")
            jk = (_index(t[0], n, where + " comult"), _index(t[1], n, where + " comult"))
            row[jk] = F.add(row.get(jk, 0), _scalar(F, t[2], where + " comult"))
        comult[i] = {k: v for k, v in row.items() if v}
    antipode = None
    if obj.get("antipode") is not None:
        cols = obj["antipode"]
        if not isinstance(cols, list) or len(cols) != n:
            raise ValidationError(f"{where}: antipode must list {n} columns")
        antipode = {i: _sparse(F, c, n, where + " antipode") for i, c in enumerate(cols)}
    return make_hopf(obj.get("name", name), S, F, unit=unit, mult=mult, counit=counit,
                     comult=comult, antipode=antipode)


def _parse_action(F, name, obj, hopf) -> ActionData:
    where = f"action {name!r}"
    dom, cod = obj.get("domain"), obj.get("codomain")
    if not isinstance(dom, list) or len(dom) != 2:
        raise ValidationError(f"{where}: domain must name two Hopf entries")
    for n in list(dom) + [cod]:
        if n not in hopf:
            raise ValidationError(f"{where}: unknown Hopf entry {n!r}")
    if cod == dom[1]:
        side = "left"
        acting, acted = hopf[dom[0]], hopf[dom[1]]
    elif cod == dom[0]:
        side = "right"
        acted, acting = hopf[dom[0]], hopf[dom[1]]
    else:
        raise ValidationError(f"{where}: codomain {cod!r} must be one of the domain factors")
    dom_sp = (hopf[dom[0]].space, hopf[dom[1]].space)
    cod_sp = (hopf[cod].space,)
    nd, nc = dom_sp[0].dim * dom_sp[1].dim, cod_sp[0].dim
    cols = {}
    for e in obj.get("columns", []):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"{where} columns: expected [i, terms], got {e!r}")
        i = _index(e[0], nd, where + " columns")
        cols[i] = _sparse(F, e[1], nc, where + " columns")
    m = Matrix.from_flat(dom_sp, cod_sp, F, cols)
    return ActionData(acting, acted, m, side, name)


def load_document(data: bytes | str) -> StructureDocument:
    try:
        obj = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ParseError(f"not valid JSON: {e}") from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    if "field" not in obj:
        raise ParseError("missing 'field'")
    F = parse_field(obj["field"])
    doc = StructureDocument(F)
    for name, s in (obj.get("spaces") or {}).items():
        doc.spaces[name] = _parse_space(name, s)
    for name, h in (obj.get("hopf") or {}).items():
        if not isinstance(h, dict):
            raise ParseError(f"hopf {name!r}: expected an object")
        doc.hopf[name] = _parse_hopf(F, name, h, doc.spaces)
    for name, a in (obj.get("actions") or {}).items():
        if not isinstance(a, dict):
            raise ParseError(f"action {name!r}: expected an object")
        doc.actions[name] = _parse_action(F, name, a, doc.hopf)
    for name, p in (obj.get("pairs") or {}).items():
        for key in ("A", "H"):
            if p.get(key) not in doc.hopf:
                raise ValidationError(f"pair {name!r}: unknown Hopf entry {p.get(key)!r}")
        for key in ("phiA", "phiH"):
            if p.get(key) is not None and p[key] not in doc.actions:
                raise ValidationError(f"pair {name!r}: unknown action {p[key]!r}")
        doc.pairs[name] = dict(p)
    for name, spec in (obj.get("products") or {}).items():
        if not isinstance(spec, dict) or len(spec) != 1 or not ({"tensor", "smash"} & set(spec)):
            raise ParseError(f"product {name!r}: expected {{'tensor': [X, Y]}} or {{'smash': [A, H, action]}}")
        kind, args = next(iter(spec.items()))
        want = 2 if kind == "tensor" else 3
        if not isinstance(args, list) or len(args) != want:
            raise ValidationError(f"product {name!r}: {kind} takes {want} names")
        if any(a not in doc.hopf for a in args[:2]) or (kind == "smash" and args[2] not in doc.actions):
            raise ValidationError(f"product {name!r}: unknown entry in {args!r}")
        if name in doc.hopf or name in doc.pairs:
            raise ValidationError(f"product {name!r}: name already used")
        doc.products[name] = {kind: list(args)}
    known = set(doc.hopf) | set(doc.pairs) | set(doc.products)
    for name, b in (obj.get("braces") or {}).items():
        for key in ("first", "second"):
            if b.get(key) not in known:
                raise ValidationError(f"brace {name!r}: unknown Hopf entry {b.get(key)!r}")
        doc.braces[name] = dict(b)
    doc.settings = dict(obj.get("settings") or {})
    return doc


def parse_structure_file(data: bytes | str):
    """The single Hopf algebra (or single action) in a document; otherwise the document."""
    doc = load_document(data)
    if len(doc.hopf) == 1 and not doc.actions:
        return next(iter(doc.hopf.values()))
    if len(doc.actions) == 1 and not doc.pairs and not doc.braces:
        return next(iter(doc.actions.values()))
    return doc


# writing


def field_json(F: FieldSpec) -> dict:
    return F.to_json()


def _s(x) -> str:
    return str(x)


def _flat_cols(m) -> dict:
    return m.materialize().flat_columns()


def _space_entry(S: Space) -> dict:
    return {"dim": S.dim, "labels": list(S.labels)}


def hopf_json(H: HopfAlgebraData, space_name: str | None = None) -> dict:
    n = H.dim
    unit = _flat_cols(H.eta).get(0, {})
    counit_cols = _flat_cols(H.eps)
    mult = _flat_cols(H.mu)
    comult = _flat_cols(H.delta)
    out = {
        "name": H.name,
        "space": space_name or H.space.name,
        "unit": [[k, _s(v)] for k, v in sorted(unit.items())],
        "counit": [_s(counit_cols.get(i, {}).get(0, 0)) for i in range(n)],
        "mult": [[i // n, i % n, [[k, _s(v)] for k, v in sorted(c.items())]]
                 for i, c in sorted(mult.items()) if c],
        "comult": [[i, [[*unravel(k, (n, n)), _s(v)] for k, v in sorted(c.items())]]
                   for i, c in sorted(comult.items()) if c],
    }
    if H.lam is not None:
        lam = _flat_cols(H.lam)
        out["antipode"] = [[[k, _s(v)] for k, v in sorted(lam.get(i, {}).items())] for i in range(n)]
    return out


def action_json(act: ActionData, names: dict) -> dict:
    """``names`` maps id(HopfAlgebraData) to its entry name."""
    hname = names[id(act.acting)]
    aname = names[id(act.acted)]
    if act.side == "left":
        dom, cod = [hname, aname], aname
    else:
        dom, cod = [aname, hname], aname
    cols = _flat_cols(act.map)
    return {"domain": dom, "codomain": cod,
            "columns": [[i, [[k, _s(v)] for k, v in sorted(c.items())]] for i, c in sorted(cols.items()) if c]}


def document_json(field: FieldSpec, hopf: dict, actions: dict | None = None,
                  pairs: dict | None = None, braces: dict | None = None,
                  settings: dict | None = None, products: dict | None = None) -> dict:
    """Serialize named structures.  Spaces are keyed by their own names."""
    spaces: dict = {}
    for H in hopf.values():
        prev = spaces.get(H.space.name)
        if prev is not None and prev != H.space:
            raise ValidationError(f"two different spaces are named {H.space.name!r}")
        spaces[H.space.name] = H.space
    names: dict = {}
    for n, H in hopf.items():
        names.setdefault(id(H), n)
    out = {
        "field": field.to_json(),
        "spaces": {n: _space_entry(S) for n, S in spaces.items()},
        "hopf": {n: hopf_json(H) for n, H in hopf.items()},
    }
    if actions:
        out["actions"] = {n: action_json(a, names) for n, a in actions.items()}
    if pairs:
        out["pairs"] = pairs
    if products:
        out["products"] = products
    if braces:
        out["braces"] = braces
    if settings:
        out["settings"] = settings
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, ensure_ascii=False, sort_keys=False) + "\n"


def write_hopf(H: HopfAlgebraData) -> str:
    return dumps(document_json(H.field, {"H": H}))
