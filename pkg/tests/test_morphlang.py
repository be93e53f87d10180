import json

import pytest
from hypothesis import given, strategies as st

from conftest import ORACLES, Q, F5
from hopfbrace import envs, hopfcore as hc
from hopfbrace.lintensor import mor_eq, shape_str
from hopfbrace.morphlang import files
from hopfbrace.morphlang.groups import (
    GroupTable, NotAGroup, UnknownElement, builtin, cyclic, direct_product, from_permutations,
    parse_group,
)
from hopfbrace.morphlang.script import fixture_family, parse_script, run_script, split_statements
from hopfbrace.morphlang.syntax import (
    Compose, Env, Id, MorphSyntaxError, MorphTypeError, Prim, Sym, Tensor, UnknownName, morphism,
    parse_expr, parse_morphism, strip, to_text,
)

# groups


@pytest.mark.parametrize("name", sorted(ORACLES["groups"]))
def test_builtin_groups_match_oracle(name):
    want = ORACLES["groups"][name]
    G = builtin(name)
    assert G.order == want["order"]
    assert G.labels[G.identity] == want["identity"]
    for key, c in want["table"].items():
        a, b = key.split("|")
        assert G.labels[G.mul(G.index(a), G.index(b))] == c
    for a, b in want["inverse"].items():
        assert G.labels[G.inv(G.index(a))] == b
    assert G.is_abelian() == want["abelian"]


def test_perm_spec_closure():
    G = parse_group("perm:(12),(123)")
    assert G.order == 6
    assert set(G.labels) == set(ORACLES["groups"]["S3"]["inverse"])
    assert parse_group("perm: (1234)").order == 4
    assert parse_group("perm: (12)(34), (13)(24)").order == 4
    assert parse_group("S4").order == 24 and parse_group("A4").order == 12
    assert parse_group("D4").order == 8 and not parse_group("Q8").is_abelian()


def test_table_spec():
    G = parse_group("table: [[0,1],[1,0]]")
    assert G.order == 2 and G.labels == ("e", "g1")
    H = parse_group('table: {"name": "Z3", "labels": ["0","1","2"], "table": [[0,1,2],[1,2,0],[2,0,1]]}')
    assert H.name == "Z3" and H.inv(1) == 2
    assert parse_group("table: S3").order == 6


@pytest.mark.parametrize("table,err", [
    ([[0, 1], [0, 1]], NotAGroup),           # no identity row/col
    ([[0, 1, 2], [1, 0, 0], [2, 0, 1]], NotAGroup),
    ([[0, 5], [1, 0]], UnknownElement),
    ([[0, 1]], NotAGroup),
])
def test_bad_tables(table, err):
    with pytest.raises(err):
        GroupTable.from_table("X", [str(i) for i in range(len(table))], table)


def test_bad_specs():
    for spec in ("C", "foo: x", "perm:", "Z7", "perm: (12),(1", "perm: (12) junk"):
        with pytest.raises((UnknownElement, NotAGroup)):
            parse_group(spec)


@given(st.integers(1, 7), st.integers(1, 5))
def test_direct_product_orders(m, n):
    G = direct_product(cyclic(m), cyclic(n))
    assert G.order == m * n
    assert G.is_abelian()
    e = G.identity
    assert all(G.mul(g, G.inv(g)) == e for g in range(G.order))


def test_conjugation():
    G = builtin("S3")
    t, r = G.index("(12)"), G.index("(123)")
    assert G.labels[G.conj(t, r)] == "(132)"
    assert from_permutations(["(12)"]).order == 2


# expressions

NAMES = st.sampled_from(["f", "g", "mu", "delta", "x1", "h'"])
OBJS = st.lists(st.sampled_from(["H", "A", "B"]), max_size=3).map(tuple)


def exprs():
    atoms = st.one_of(
        st.builds(Prim, NAMES, st.none()),
        st.builds(Prim, st.sampled_from(["mu", "eta", "lambda"]), st.sampled_from(["H", "A"])),
        st.builds(Id, OBJS),
        st.builds(Sym, OBJS, OBJS),
    )
    return st.recursive(atoms, lambda sub: st.one_of(
        st.builds(Compose, st.lists(sub, min_size=2, max_size=3)),
        st.builds(Tensor, st.lists(sub, min_size=2, max_size=3)),
    ), max_leaves=12)


def _normal(t):
    """Flatten nested n-ary nodes of one kind, which the printer cannot distinguish."""
    if t[0] in ("comp", "tens"):
        parts = []
        for p in t[1]:
            p = _normal(p)
            if p[0] == t[0] and t[0] == "comp":
                parts.extend(p[1])
            else:
                parts.append(p)
        return (t[0], tuple(parts))
    return t


@given(exprs())
def test_print_parse_round_trip(e):
    text = to_text(e)
    back = parse_expr(text)
    assert _normal(strip(back)) == _normal(strip(e))
    assert to_text(back) == text


def test_precedence_and_associativity():
    e = parse_expr("f . g * h . k")
    assert strip(e) == ("comp", (("prim", "f", None), ("tens", (("prim", "g", None), ("prim", "h", None))),
                                 ("prim", "k", None)))
    assert strip(parse_expr("f ⊗ g ∘ h")) == strip(parse_expr("(f * g) . h"))
    assert strip(parse_expr("c(H*A, K)")) == ("c", ("H", "A"), ())
    assert strip(parse_expr("id(K)")) == ("id", ())


@pytest.mark.parametrize("text,col", [("f . ", 5), ("(f * g", 7), ("f $ g", 3), ("c(H)", 4), ("mu@", 4)])
def test_syntax_error_positions(text, col):
    with pytest.raises(MorphSyntaxError) as ei:
        parse_expr(text)
    assert (ei.value.line, ei.value.col) == (1, col)


@pytest.fixture(scope="module")
def env():
    H = hc.sweedler4(Q)
    e = Env(Q)
    e.add_hopf("H", H)
    return e


def test_typecheck_and_elaborate(env):
    H = env.hopf["H"]
    m = morphism("mu@H . (lambda@H * id(H)) . delta@H", env)
    assert mor_eq(m, morphism("eta@H . eps@H", env))
    node = parse_morphism("mu@H * id(H)", env)
    assert shape_str(node.dom) == "Sw⊗Sw⊗Sw" and shape_str(node.cod) == "Sw⊗Sw"
    assert mor_eq(morphism("c(H, H) . c(H, H)", env), morphism("id(H*H)", env))
    assert H.lam is not None


def test_type_error_span(env):
    text = "mu@H . mu@H"
    with pytest.raises(MorphTypeError) as ei:
        parse_morphism(text, env)
    assert ei.value.col == 1
    assert "cannot compose" in str(ei.value)


def test_unknown_names(env):
    with pytest.raises(UnknownName) as ei:
        parse_morphism("id(H) . nope", env)
    assert ei.value.col == 9
    with pytest.raises(UnknownName):
        parse_morphism("id(X)", env)
    with pytest.raises(UnknownName):
        parse_morphism("frob@H", env)


# scripts


SCRIPT = """# fixtures: brace
let conv = mu@H . (lambda@H * id(H))
    . delta@H
assert antipode: conv == eta@H . eps@H   # trailing comment
assert mu@H . (mu@H * id(H)) == mu@H . (id(H) * mu@H)
check hopf(H)
"""


def test_script_structure():
    stmts = split_statements(SCRIPT)
    assert [s.kind for s in stmts] == ["let", "assert", "assert", "check"]
    assert [s.line for s in stmts] == [2, 4, 5, 6]
    assert fixture_family(SCRIPT) == "brace"
    assert "delta@H" in stmts[0].text


def test_script_runs(env):
    rep = run_script(SCRIPT, env)
    assert rep.passed
    assert [l.name for l in rep.laws] == ["antipode", "line 5", "check hopf(H)"]
    assert "conv" not in env.lets


def test_script_reports_failing_assertion(env):
    rep = run_script("assert wrong: mu@H == mu@H . c(H, H)", env)
    assert not rep.passed
    w = rep.laws[0].witness
    assert w["labels"] == ["g", "x"]  # first non-commuting basis pair


@pytest.mark.parametrize("src,line,col,err", [
    ("let x = mu@H\nassert x == mu@H . mu@H\n", 2, 13, MorphTypeError),
    ("assert mu@H == eps@H\n", 1, 8, MorphTypeError),
    ("let = mu@H\n", 1, 1, MorphSyntaxError),
    ("frobnicate mu@H\n", 1, 1, MorphSyntaxError),
    ("assert mu@H = mu@H\n", 1, 1, MorphSyntaxError),
    ("check brace(H)\n", 1, 1, MorphSyntaxError),
    ("\n\ncheck hopf(Q)\n", 3, 12, UnknownName),
    ("assert mu@H == mu@H . (id(H) *\n  zz)\n", 2, 3, UnknownName),
])
def test_script_error_locations(env, src, line, col, err):
    with pytest.raises(err) as ei:
        run_script(parse_script(src), env)
    assert (ei.value.line, ei.value.col) == (line, col)


@pytest.mark.parametrize("path", sorted((__import__("conftest").SCRIPTS).glob("*.hb")), ids=lambda p: p.name)
def test_shipped_scripts_parse(path):
    s = parse_script(path.read_text())
    assert s.statements
    assert s.family in envs.FIXTURE_KINDS


# structure files


def test_hopf_file_round_trip():
    for H in (hc.sweedler4(F5), hc.group_algebra(builtin("S3"), Q), hc.dual_group_algebra(builtin("C3"), Q)):
        back = files.parse_structure_file(files.write_hopf(H))
        assert back.field == H.field
        for a in ("eta", "mu", "eps", "delta", "lam"):
            assert mor_eq(getattr(back, a), getattr(H, a)), a


def _doc(**over):
    H = hc.group_algebra(builtin("C2"), Q)
    d = files.document_json(Q, {"H": H})
    d.update(over)
    return d


@pytest.mark.parametrize("mutate,err", [
    (lambda d: d.pop("field"), files.ParseError),
    (lambda d: d.update(field={"type": "prime", "p": 4}), Exception),
    (lambda d: d["hopf"]["H"].update(space="nope"), files.ValidationError),
    (lambda d: d["hopf"]["H"]["mult"][0][2][0].__setitem__(1, 1.5), files.ParseError),
    (lambda d: d["hopf"]["H"]["mult"][0][2][0].__setitem__(0, 9), files.ParseError),
    (lambda d: d.update(pairs={"P": {"A": "H", "H": "X"}}), files.ValidationError),
    (lambda d: d.update(braces={"B": {"first": "H", "second": "Y"}}), files.ValidationError),
    (lambda d: d.update(products={"T": {"tensor": ["H"]}}), files.ValidationError),
    (lambda d: d.update(products={"T": {"wedge": ["H", "H"]}}), files.ParseError),
])
def test_document_validation(mutate, err):
    d = _doc()
    mutate(d)
    with pytest.raises(err):
        files.load_document(json.dumps(d))


def test_not_json():
    with pytest.raises(files.ParseError):
        files.load_document("{nope")
    with pytest.raises(files.ParseError):
        files.load_document("[1, 2]")


def test_products_and_braces_load():
    d = _doc(products={"T": {"tensor": ["H", "H"]}}, braces={"B": {"first": "T", "second": "T"}})
    doc = files.load_document(json.dumps(d))
    assert doc.products == {"T": {"tensor": ["H", "H"]}}
    env = envs.env_from_document(doc)
    assert env.hopf["T"].dim == 4
    assert "B" in env.braces
