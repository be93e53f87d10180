"""Finite groups from permutation generators or explicit tables."""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass


class NotAGroup(ValueError):
    pass


class UnknownElement(ValueError):
    pass


@dataclass(frozen=True)
class GroupTable:
    name: str
    labels: tuple
    table: tuple  # table[i][j] = index of labels[i]·labels[j]
    identity: int
    inverse: tuple

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.inverse[i]

    def conj(self, g: int, r: int) -> int:
        """g·r·g⁻¹."""
        return self.table[self.table[g][r]][self.inverse[g]]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownElement(label) from None

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    @classmethod
    def from_table(cls, name: str, labels, table) -> "GroupTable":
        labels = tuple(str(l) for l in labels)
        n = len(labels)
        if n == 0:
            raise NotAGroup("empty table")
        if len(set(labels)) != n:
            raise NotAGroup("duplicate element labels")
        tab = tuple(tuple(int(x) for x in row) for row in table)
        if len(tab) != n or any(len(r) != n for r in tab):
            raise NotAGroup("table is not n×n")
        if any(not 0 <= x < n for r in tab for x in r):
            raise UnknownElement("table entry out of range")
        for a, b, c in itertools.product(range(n), repeat=3):
            if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
                raise NotAGroup(f"not associative at ({labels[a]}, {labels[b]}, {labels[c]})")
        units = [e for e in range(n) if all(tab[e][x] == x and tab[x][e] == x for x in range(n))]
        if not units:
            raise NotAGroup("no identity element")
        e = units[0]
        inverse = []
        for x in range(n):
            ys = [y for y in range(n) if tab[x][y] == e and tab[y][x] == e]
            if not ys:
                raise NotAGroup(f"{labels[x]} has no inverse")
            inverse.append(ys[0])
        return cls(name, labels, tab, e, tuple(inverse))


# permutations act on {1..n}; (g·h)(x) = g(h(x))

def _parse_cycles(text: str, n: int | None = None) -> tuple:
    text = text.strip()
    if text in ("e", "()", "id", "1"):
        return ()
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles or re.sub(r"\([^()]*\)", "", text).strip():
        raise UnknownElement(f"bad cycle notation {text!r}")
    out = []
    for c in cycles:
        c = c.strip()
        pts = [int(x) for x in re.split(r"[\s,]+", c)] if (" " in c or "," in c) else [int(x) for x in c]
        if len(set(pts)) != len(pts) or any(p < 1 for p in pts):
            raise UnknownElement(f"bad cycle ({c})")
        out.append(pts)
    return tuple(tuple(c) for c in out)


def _cycles_to_map(cycles, n: int) -> tuple:
    m = list(range(n + 1))
    # cycles compose right to left like the group product
    for cyc in reversed(cycles):
        step = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
        m = [step.get(m[x], m[x]) for x in range(n + 1)]
    return tuple(m)


def _map_to_label(m: tuple) -> str:
    n = len(m) - 1
    seen, parts = set(), []
    wide = n >= 10
    for x in range(1, n + 1):
        if x in seen or m[x] == x:
            continue
        cyc, y = [], x
        while y not in seen:
            seen.add(y)
            cyc.append(y)
            y = m[y]
        parts.append("(" + (" " if wide else "").join(str(c) for c in cyc) + ")")
    return "".join(parts) or "e"


def from_permutations(gens: list, name: str = "G") -> GroupTable:
    cyc = [_parse_cycles(g) for g in gens]
    n = max([p for c in cyc for cycle in c for p in cycle], default=1)
    maps = [_cycles_to_map(c, n) for c in cyc]
    ident = tuple(range(n + 1))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in maps:
                y = tuple(g[x[i]] for i in range(n + 1))
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    table = [[index[tuple(a[b[i]] for i in range(n + 1))] for b in elems] for a in elems]
    return GroupTable.from_table(name, [_map_to_label(m) for m in elems], table)


def cyclic(n: int, name: str | None = None) -> GroupTable:
    labels = ["e"] + (["a"] if n == 2 else [f"a{k}" for k in range(1, n)])
    return GroupTable.from_table(name or f"C{n}", labels,
                                 [[(i + j) % n for j in range(n)] for i in range(n)])


def direct_product(g: GroupTable, h: GroupTable, name: str | None = None) -> GroupTable:
    pairs = list(itertools.product(range(g.order), range(h.order)))
    idx = {p: i for i, p in enumerate(pairs)}

    def lab(a, b):
        la, lb = g.labels[a], h.labels[b]
        if la == "e" and lb == "e":
            return "e"
        return f"{la},{lb}"

    table = [[idx[(g.mul(a, c), h.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    return GroupTable.from_table(name or f"{g.name}x{h.name}", [lab(a, b) for a, b in pairs], table)


def quaternion() -> GroupTable:
    # elements ±1, ±i, ±j, ±k as (sign, unit)
    units = ["1", "i", "j", "k"]
    prod = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for s in (1, -1) for u in units]
    idx = {x: i for i, x in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = prod[(u1, u2)]
            row.append(idx[(s * s1 * s2, u)])
        table.append(row)
    labels = ["e" if x == (1, "1") else ("" if x[0] > 0 else "-") + x[1] for x in elems]
    return GroupTable.from_table("Q8", labels, table)


def builtin(name: str) -> GroupTable:
    key = name.strip().upper().replace("×", "X").replace("*", "X")
    m = re.fullmatch(r"C(\d+)", key)
    if m:
        return cyclic(int(m.group(1)))
    if key in ("V4", "K4"):
        key = "C2XC2"
    if "X" in key:
        parts = key.split("X")
        out = builtin(parts[0])
        for q in parts[1:]:
            nxt = builtin(q)
            out = direct_product(out, nxt, f"{out.name}x{nxt.name}")
        return out
    if key == "S3":
        return from_permutations(["(12)", "(123)"], "S3")
    if key == "S4":
        return from_permutations(["(12)", "(1234)"], "S4")
    if key == "A4":
        return from_permutations(["(123)", "(12)(34)"], "A4")
    if key == "D4":
        return from_permutations(["(1234)", "(13)"], "D4")
    if key == "Q8":
        return quaternion()
    raise UnknownElement(f"unknown builtin group {name!r}")


def parse_group(spec: str) -> GroupTable:
    """``perm: (12), (123)`` | ``table: S3`` | ``table: [[0,1],[1,0]]`` | bare builtin name."""
    s = spec.strip()
    kind, sep, rest = s.partition(":")
    if not sep:
        return builtin(s)
    kind = kind.strip().lower()
    rest = rest.strip()
    if kind == "perm":
        pat = r"(?:\([^()]*\))+|\be\b"
        gens = re.findall(pat, rest)
        junk = re.sub(r"[\s,]+", "", re.sub(pat, "", rest))
        if junk:
            raise UnknownElement(f"bad permutation list {rest!r} near {junk!r}")
        if not gens:
            raise UnknownElement(f"no generators in {spec!r}")
        return from_permutations(gens, "G")
    if kind == "table":
        if rest.startswith("[") or rest.startswith("{"):
            obj = json.loads(rest)
            if isinstance(obj, dict):
                return GroupTable.from_table(obj.get("name", "G"), obj["labels"], obj["table"])
            return GroupTable.from_table("G", [f"g{i}" if i else "e" for i in range(len(obj))], obj)
        return builtin(rest)
    raise UnknownElement(f"unknown group spec kind {kind!r}")
