"""Morphism expressions.

    expr    := tensor ('.' tensor)*          '.' or '∘' is composition (f . g = f∘g)
    tensor  := atom ('*' atom)*              '*' or '⊗' is the tensor product
    atom    := '(' expr ')' | 'id' '(' obj ')' | 'c' '(' obj ',' obj ')'
             | NAME '@' NAME | NAME
    obj     := 'K' | NAME ('*' NAME)*

``.`` binds looser than ``*`` and both associate to the left.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..lintensor import (
    Morphism, compose, identity, same_shape, shape_str, symmetry, tensor,
)


class MorphSyntaxError(SyntaxError):
    def __init__(self, message: str, span: tuple, text: str = ""):
        self.span = span
        self.text_src = text
        line, col = line_col(text, span[0])
        self.line, self.col = line, col
        super().__init__(f"{line}:{col}: {message}")


class MorphTypeError(TypeError):
    def __init__(self, message: str, span: tuple, text: str = ""):
        self.span = span
        line, col = line_col(text, span[0])
        self.line, self.col = line, col
        super().__init__(f"{line}:{col}: {message}")


class UnknownName(NameError):
    def __init__(self, message: str, span: tuple, text: str = ""):
        self.span = span
        line, col = line_col(text, span[0])
        self.line, self.col = line, col
        super().__init__(f"{line}:{col}: {message}")


def line_col(text: str, pos: int) -> tuple:
    before = text[:pos]
    line = before.count("\n") + 1
    col = pos - (before.rfind("\n") + 1) + 1
    return line, col


# AST


@dataclass
class Node:
    span: tuple = field(default=(0, 0), compare=False, repr=False, kw_only=True)
    dom: tuple | None = field(default=None, compare=False, repr=False, kw_only=True)
    cod: tuple | None = field(default=None, compare=False, repr=False, kw_only=True)


@dataclass
class Prim(Node):
    name: str
    qual: str | None = None


@dataclass
class Id(Node):
    obj: tuple  # names; () is K


@dataclass
class Sym(Node):
    left: tuple
    right: tuple


@dataclass
class Compose(Node):
    parts: list


@dataclass
class Tensor(Node):
    parts: list


# lexer

_TOKENS = [
    ("ws", r"[ \t\r\n]+"),
    ("name", r"[A-Za-z_][A-Za-z0-9_']*"),
    ("at", r"@"),
    ("dot", r"\.|∘"),
    ("star", r"\*|⊗"),
    ("lp", r"\("),
    ("rp", r"\)"),
    ("comma", r","),
]
_LEX = re.compile("|".join(f"(?P<{k}>{v})" for k, v in _TOKENS))


def tokenize(text: str, base: int = 0, source: str | None = None) -> list:
    """Tokens as (kind, text, start, end); offsets are shifted by ``base``."""
    out, pos = [], 0
    while pos < len(text):
        m = _LEX.match(text, pos)
        if not m:
            raise MorphSyntaxError(f"unexpected character {text[pos]!r}",
                                   (base + pos, base + pos + 1), source or text)
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group(), base + m.start(), base + m.end()))
        pos = m.end()
    out.append(("eof", "", base + len(text), base + len(text)))
    return out


class _Parser:
    def __init__(self, text: str, source: str | None = None, base: int = 0):
        self.src = source if source is not None else text
        self.toks = tokenize(text, base, self.src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        t = self.toks[self.i]
        if kind and t[0] != kind:
            want = {"rp": "')'", "lp": "'('", "name": "a name", "comma": "','", "eof": "end of expression"}.get(kind, kind)
            got = repr(t[1]) if t[1] else "end of input"
            raise MorphSyntaxError(f"expected {want}, found {got}", (t[2], t[3]), self.src)
        self.i += 1
        return t

    def expr(self):
        first = self.tensor()
        parts = [first]
        while self.peek()[0] == "dot":
            self.take()
            parts.append(self.tensor())
        if len(parts) == 1:
            return first
        return Compose(parts, span=(parts[0].span[0], parts[-1].span[1]))

    def tensor(self):
        first = self.atom()
        parts = [first]
        while self.peek()[0] == "star":
            self.take()
            parts.append(self.atom())
        if len(parts) == 1:
            return first
        return Tensor(parts, span=(parts[0].span[0], parts[-1].span[1]))

    def atom(self):
        t = self.peek()
        if t[0] == "lp":
            self.take()
            e = self.expr()
            r = self.take("rp")
            e.span = (t[2], r[3])
            return e
        if t[0] != "name":
            got = repr(t[1]) if t[1] else "end of input"
            raise MorphSyntaxError(f"expected a morphism, found {got}", (t[2], t[3]), self.src)
        self.take()
        if t[1] == "id" and self.peek()[0] == "lp":
            self.take()
            obj = self.obj()
            r = self.take("rp")
            return Id(obj, span=(t[2], r[3]))
        if t[1] == "c" and self.peek()[0] == "lp":
            self.take()
            x = self.obj()
            self.take("comma")
            y = self.obj()
            r = self.take("rp")
            return Sym(x, y, span=(t[2], r[3]))
        if self.peek()[0] == "at":
            self.take()
            q = self.take("name")
            return Prim(t[1], q[1], span=(t[2], q[3]))
        return Prim(t[1], None, span=(t[2], t[3]))

    def obj(self):
        t = self.take("name")
        if t[1] == "K":
            return ()
        names = [t[1]]
        while self.peek()[0] == "star":
            self.take()
            n = self.take("name")
            if n[1] != "K":
                names.append(n[1])
        return tuple(names)


def parse_expr(text: str, source: str | None = None, base: int = 0) -> Node:
    """Parse without typechecking.  ``base`` offsets spans into ``source``."""
    p = _Parser(text, source, base)
    e = p.expr()
    p.take("eof")
    return e


# printing


def _obj(names: tuple) -> str:
    return "*".join(names) if names else "K"


def to_text(e: Node) -> str:
    if isinstance(e, Prim):
        return e.name if e.qual is None else f"{e.name}@{e.qual}"
    if isinstance(e, Id):
        return f"id({_obj(e.obj)})"
    if isinstance(e, Sym):
        return f"c({_obj(e.left)}, {_obj(e.right)})"
    if isinstance(e, Compose):
        return " . ".join(_wrap(p, Compose) for p in e.parts)
    if isinstance(e, Tensor):
        return " * ".join(_wrap(p, (Tensor, Compose)) for p in e.parts)
    raise TypeError(e)


def _wrap(p: Node, kinds) -> str:
    s = to_text(p)
    return f"({s})" if isinstance(p, kinds) else s


def strip(e: Node):
    """Span-free structural form, for α-equivalence."""
    if isinstance(e, Prim):
        return ("prim", e.name, e.qual)
    if isinstance(e, Id):
        return ("id", e.obj)
    if isinstance(e, Sym):
        return ("c", e.left, e.right)
    tag = "comp" if isinstance(e, Compose) else "tens"
    return (tag, tuple(strip(p) for p in e.parts))


# environment and typing


PRIMS = ("eta", "mu", "eps", "delta", "lambda", "lambdainv")


class Env:
    """Named Hopf algebras, spaces, actions, pairs and derived morphisms."""

    def __init__(self, field):
        self.field = field
        self.hopf: dict = {}
        self.spaces: dict = {}
        self.derived: dict = {}  # (name, qual) -> Morphism
        self.lets: dict = {}
        self.pairs: dict = {}
        self.braces: dict = {}
        self.products: dict = {}  # name -> {"tensor": [X, Y]} | {"smash": [A, H, act]}
        self.actions: dict = {}
        self.settings: dict = {}
        self.resolvers: dict = {}  # name -> fn(env, qual) -> Morphism | None

    def add_hopf(self, name: str, H) -> None:
        if H.field != self.field:
            raise ValueError("all env entries must share one field")
        self.hopf[name] = H
        self.spaces[name] = H.space

    def add_space(self, name: str, space) -> None:
        self.spaces[name] = space

    def add_derived(self, name: str, qual: str | None, m: Morphism) -> None:
        self.derived[(name, qual)] = m

    def shape(self, names: tuple, span=(0, 0), text="") -> tuple:
        out = []
        for n in names:
            if n not in self.spaces:
                raise UnknownName(f"unknown object {n!r}", span, text)
            out.append(self.spaces[n])
        return tuple(out)

    def prim(self, e: Prim, text="") -> Morphism:
        key = (e.name, e.qual)
        if e.qual is None:
            if e.name in self.lets:
                return self.lets[e.name]
            if key in self.derived:
                return self.derived[key]
            raise UnknownName(f"unknown name {e.name!r}", e.span, text)
        if key in self.derived:
            return self.derived[key]
        if e.name in PRIMS and e.qual in self.hopf:
            H = self.hopf[e.qual]
            m = {"eta": H.eta, "mu": H.mu, "eps": H.eps, "delta": H.delta,
                 "lambda": H.lam, "lambdainv": H.lam_inv}[e.name]
            if m is None:
                raise UnknownName(f"{e.qual} has no {e.name}", e.span, text)
            return m
        fn = self.resolvers.get(e.name)
        m = fn(self, e.qual) if fn else None
        if m is None:
            raise UnknownName(f"unknown morphism {e.name}@{e.qual}", e.span, text)
        self.derived[key] = m
        return m


def typecheck(e: Node, env: Env, text: str = "") -> Node:
    """Annotate every node with dom/cod; raise MorphTypeError on a bad composite."""
    if isinstance(e, Prim):
        m = env.prim(e, text)
        e.dom, e.cod = m.dom, m.cod
    elif isinstance(e, Id):
        s = env.shape(e.obj, e.span, text)
        e.dom = e.cod = s
    elif isinstance(e, Sym):
        x, y = env.shape(e.left, e.span, text), env.shape(e.right, e.span, text)
        e.dom, e.cod = x + y, y + x
    elif isinstance(e, Tensor):
        for p in e.parts:
            typecheck(p, env, text)
        e.dom = tuple(s for p in e.parts for s in p.dom)
        e.cod = tuple(s for p in e.parts for s in p.cod)
    elif isinstance(e, Compose):
        for p in e.parts:
            typecheck(p, env, text)
        for left, right in zip(e.parts, e.parts[1:]):
            if not same_shape(right.cod, left.dom):
                raise MorphTypeError(
                    f"cannot compose: {to_text(left)} expects {shape_str(left.dom)} "
                    f"but {to_text(right)} gives {shape_str(right.cod)}",
                    (left.span[0], right.span[1]), text)
        e.dom, e.cod = e.parts[-1].dom, e.parts[0].cod
    return e


def elaborate(e: Node, env: Env) -> Morphism:
    if isinstance(e, Prim):
        return env.prim(e)
    if isinstance(e, Id):
        return identity(env.shape(e.obj), env.field)
    if isinstance(e, Sym):
        return symmetry(env.shape(e.left), env.shape(e.right), env.field)
    if isinstance(e, Tensor):
        return tensor(*(elaborate(p, env) for p in e.parts), field=env.field)
    if isinstance(e, Compose):
        return compose(*(elaborate(p, env) for p in e.parts))
    raise TypeError(e)


def parse_morphism(text: str, env: Env) -> Node:
    return typecheck(parse_expr(text), env, text)


def morphism(text: str, env: Env) -> Morphism:
    """Parse, typecheck and elaborate in one step."""
    return elaborate(parse_morphism(text, env), env)
