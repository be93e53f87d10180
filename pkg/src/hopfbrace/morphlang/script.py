"""Verification scripts.

    # fixtures: matched-pair          optional; names the builtin fixture family
    let NAME = EXPR
    assert [LABEL:] EXPR == EXPR
    check brace(NAME1, NAME2) | check hopf(NAME) | check pair(NAME)

A statement continues on following lines that start with whitespace.
"""
from __future__ import annotations

import re
import time
from dataclasses import dataclass

from ..report import CheckReport, Law, check_equal
from .syntax import (
    Env, MorphSyntaxError, MorphTypeError, elaborate, line_col, parse_expr, same_shape,
    shape_str, typecheck,
)


@dataclass
class Statement:
    kind: str  # let | assert | check
    start: int  # offset of the statement text in the source
    text: str
    line: int


_FIXTURES = re.compile(r"#\s*fixtures:\s*([\w-]+)")
_LABEL = re.compile(r"([A-Za-z_][\w'\-]*)\s*:")
_CHECK = re.compile(r"(brace|hopf|pair)\s*\(\s*([\w]+)\s*(?:,\s*([\w]+)\s*)?\)\s*$")


def fixture_family(text: str) -> str | None:
    for line in text.splitlines():
        m = _FIXTURES.match(line.strip())
        if m:
            return m.group(1)
    return None


def _blank_comment(line: str) -> str:
    """Replace a trailing comment by spaces so offsets stay put."""
    body = line.rstrip("\r\n")
    code, hash_, rest = body.partition("#")
    return code + " " * len(hash_ + rest) + line[len(body):]


def split_statements(text: str) -> list:
    """Statements with their source offsets; comments are blanked, not removed."""
    out = []
    pos = 0
    cur = None
    for lineno, raw in enumerate(text.splitlines(keepends=True), 1):
        body = raw.split("#", 1)[0]
        line_start = pos
        pos += len(raw)
        if not body.strip():
            continue
        if body[0] in " \t" and cur is not None:
            cur[2] = line_start + len(body.rstrip("\r\n"))
            continue
        if cur is not None:
            out.append(cur)
        cur = [lineno, line_start, line_start + len(body.rstrip("\r\n"))]
    if cur is not None:
        out.append(cur)
    stmts = []
    for lineno, a, b in out:
        chunk = "".join(_blank_comment(l) for l in text[a:b].splitlines(keepends=True))
        word = chunk.split(None, 1)[0]
        if word not in ("let", "assert", "check"):
            raise MorphSyntaxError(f"unknown statement {word!r}", (a, a + len(word)), text)
        stmts.append(Statement(word, a, chunk, lineno))
    return stmts


def _parse_at(text: str, src: str, offset: int):
    """Parse ``text`` found at ``offset`` of ``src`` (spans refer to ``src``)."""
    lead = len(text) - len(text.lstrip())
    return parse_expr(text.strip(), source=src, base=offset + lead)


@dataclass
class ParsedScript:
    source: str
    statements: list
    family: str | None


def parse_script(text: str) -> ParsedScript:
    stmts = split_statements(text)
    for s in stmts:
        _syntax(s, text)
    return ParsedScript(text, stmts, fixture_family(text))


def _syntax(s: Statement, src: str):
    """Return the parsed parts of one statement, raising MorphSyntaxError."""
    body = s.text[len(s.kind):]
    off = s.start + len(s.kind)
    if s.kind == "let":
        m = re.match(r"\s*([A-Za-z_][\w']*)\s*=(?!=)", body)
        if not m:
            raise MorphSyntaxError("expected 'let NAME = EXPR'", (s.start, s.start + len(s.text.rstrip())), src)
        return ("let", m.group(1), _parse_at(body[m.end():], src, off + m.end()))
    if s.kind == "assert":
        label = None
        m = _LABEL.match(body.lstrip())
        skip = len(body) - len(body.lstrip())
        if m:
            label = m.group(1)
            skip += m.end()
        rest = body[skip:]
        if rest.count("==") != 1:
            raise MorphSyntaxError("expected exactly one '=='", (s.start, s.start + len(s.text.rstrip())), src)
        i = rest.index("==")
        lhs = _parse_at(rest[:i], src, off + skip)
        rhs = _parse_at(rest[i + 2:], src, off + skip + i + 2)
        return ("assert", label, lhs, rhs)
    m = _CHECK.match(body.strip())
    if not m or (m.group(1) == "brace") != (m.group(3) is not None):
        raise MorphSyntaxError("expected 'check brace(N1, N2)', 'check hopf(N)' or 'check pair(N)'",
                               (s.start, s.start + len(s.text.rstrip())), src)
    return ("check", m.group(1), m.group(2), m.group(3))


def run_script(script: ParsedScript | str, env: Env, jobs: int | None = None,
               subject: str = "script") -> CheckReport:
    """Run every statement; assertions and checks each produce laws.

    Type errors and unknown names propagate (the CLI maps them to exit 2)."""
    from .. import bracelab, crossprod, hopfcore

    if isinstance(script, str):
        script = parse_script(script)
    src = script.source
    rep = CheckReport(subject)
    lets_before = dict(env.lets)
    try:
        for s in script.statements:
            parsed = _syntax(s, src)
            if parsed[0] == "let":
                _, name, e = parsed
                typecheck(e, env, src)
                env.lets[name] = elaborate(e, env).materialize()
            elif parsed[0] == "assert":
                _, label, lhs, rhs = parsed
                typecheck(lhs, env, src)
                typecheck(rhs, env, src)
                if not (same_shape(lhs.dom, rhs.dom) and same_shape(lhs.cod, rhs.cod)):
                    raise MorphTypeError(
                        f"sides differ in type: {shape_str(lhs.dom)} -> {shape_str(lhs.cod)} vs "
                        f"{shape_str(rhs.dom)} -> {shape_str(rhs.cod)}", (lhs.span[0], rhs.span[1]), src)
                name = label or f"line {s.line}"
                law = check_equal(name, elaborate(lhs, env), elaborate(rhs, env), jobs, "assertion")
                rep.laws.append(law)
            else:
                _, what, n1, n2 = parsed
                t0 = time.perf_counter()
                if what == "brace":
                    sub = bracelab.check_brace(bracelab.HopfBraceData(_hopf(env, n1, s, src), _hopf(env, n2, s, src)), jobs)
                elif what == "hopf":
                    sub = hopfcore.check_hopf(_hopf(env, n1, s, src), jobs)
                else:
                    if n1 not in env.pairs:
                        raise _unknown(n1, s, src)
                    sub = crossprod.check_matched_pair(env.pairs[n1], jobs)
                ms = (time.perf_counter() - t0) * 1000
                w = None
                if not sub.passed:
                    w = dict(next(l.witness for l in sub.laws if not l.passed))
                    w["failed"] = sub.failed()
                rep.laws.append(Law(f"check {what}({', '.join(x for x in (n1, n2) if x)})",
                                    sub.passed, w, ms, "check"))
    finally:
        env.lets = lets_before
    return rep


def _hopf(env, name, s, src):
    if name not in env.hopf:
        raise _unknown(name, s, src)
    return env.hopf[name]


def _unknown(name, s, src):
    from .syntax import UnknownName
    i = s.text.find(name)
    return UnknownName(f"unknown name {name!r}", (s.start + i, s.start + i + len(name)), src)


def error_location(exc, src: str) -> tuple:
    return line_col(src, exc.span[0])
