"""Sparse exact linear maps between tensor products of finite spaces.

A shape is a tuple of ``Space`` objects; the empty tuple is the unit object K.
Spaces may themselves be products (``Space.product``); every computation is
carried out on the *atomic* expansion of a shape, so ``(A⊗H)`` used as a single
space and the pair ``(A, H)`` are interchangeable.  This is the strictness of
the monoidal structure made literal.

Internally basis vectors are tuples of atomic indices ("keys").  Public
vectors (``SparseVec``) use the row-major flat index over the declared shape,
which agrees with the row-major flat index over the atoms.
"""
from __future__ import annotations

import itertools
import multiprocessing as mp
import os
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Sequence

from .exactfield import FieldMismatch, FieldSpec, Raw


class ShapeMismatch(TypeError):
    pass


class NotConvolutionInvertible(ArithmeticError):
    pass


class SingularSystem(ArithmeticError):
    pass


# spaces and shapes


@dataclass(frozen=True)
class Space:
    name: str
    labels: tuple
    parts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise ValueError("a space needs dim >= 1")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate basis labels in {self.name}")

    @classmethod
    def named(cls, name: str, dim_or_labels) -> "Space":
        if isinstance(dim_or_labels, int):
            labels = tuple(f"{name}{i}" for i in range(dim_or_labels))
        else:
            labels = tuple(dim_or_labels)
        return cls(name, labels)

    @classmethod
    def product(cls, *spaces: "Space", name: str | None = None) -> "Space":
        if len(spaces) == 1:
            return spaces[0]
        labels = tuple("⊗".join(c) for c in itertools.product(*(s.labels for s in spaces)))
        return cls(name or "⊗".join(s.name for s in spaces), labels, tuple(spaces))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def atoms(self) -> tuple:
        if not self.parts:
            return (self,)
        return tuple(a for p in self.parts for a in p.atoms)

    def __repr__(self):
        return f"Space({self.name}, dim={self.dim})"


Shape = tuple
K: Shape = ()


def as_shape(x) -> Shape:
    if isinstance(x, Space):
        return (x,)
    return tuple(x)


def shape_atoms(shape: Shape) -> tuple:
    return tuple(a for s in shape for a in s.atoms)


def shape_dim(shape: Shape) -> int:
    n = 1
    for s in shape:
        n *= s.dim
    return n


def shape_str(shape: Shape) -> str:
    return "⊗".join(s.name for s in shape) if shape else "K"


def same_shape(x: Shape, y: Shape) -> bool:
    return shape_atoms(x) == shape_atoms(y)


def ravel(key: Sequence[int], dims: Sequence[int]) -> int:
    i = 0
    for k, d in zip(key, dims):
        i = i * d + k
    return i


def unravel(i: int, dims: Sequence[int]) -> tuple:
    out = []
    for d in reversed(dims):
        i, r = divmod(i, d)
        out.append(r)
    return tuple(reversed(out))


def key_labels(shape: Shape, key: tuple) -> tuple:
    """Split an atomic key along the declared factors and label each piece."""
    out, pos = [], 0
    for s in shape:
        atoms = s.atoms
        sub = key[pos : pos + len(atoms)]
        pos += len(atoms)
        out.append(s.labels[ravel(sub, [a.dim for a in atoms])])
    return tuple(out)


def dual_space(s: Space) -> Space:
    def one(lab: str) -> str:
        return f"f_{lab}" if "⊗" not in lab else f"f_({lab})"

    return Space(f"{s.name}*", tuple(one(l) for l in s.labels))


@dataclass(frozen=True)
class SparseVec:
    shape: Shape
    entries: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "shape", as_shape(self.shape))
        n = shape_dim(self.shape)
        clean = {}
        for i, v in self.entries.items():
            if not 0 <= i < n:
                raise IndexError(f"index {i} outside dim {n}")
            if v:
                clean[i] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def basis(cls, shape, i: int) -> "SparseVec":
        return cls(as_shape(shape), {i: 1})

    def keys_dict(self) -> dict:
        dims = [a.dim for a in shape_atoms(self.shape)]
        return {unravel(i, dims): v for i, v in self.entries.items()}

    @classmethod
    def from_keys(cls, shape, vec: dict) -> "SparseVec":
        shape = as_shape(shape)
        dims = [a.dim for a in shape_atoms(shape)]
        return cls(shape, {ravel(k, dims): v for k, v in vec.items()})

    def __eq__(self, other):
        return (
            isinstance(other, SparseVec)
            and same_shape(self.shape, other.shape)
            and self.entries == other.entries
        )


# morphisms


def _reduce(vec: dict, p: int | None) -> dict:
    if p is None:
        return {k: v for k, v in vec.items() if v}
    out = {}
    for k, v in vec.items():
        v %= p
        if v:
            out[k] = v
    return out


class Morphism:
    """Linear map between shapes.  Subclasses implement ``col(key)``."""

    def __init__(self, dom, cod, field: FieldSpec):
        self.dom = as_shape(dom)
        self.cod = as_shape(cod)
        self.field = field
        self.dom_atoms = shape_atoms(self.dom)
        self.cod_atoms = shape_atoms(self.cod)
        self.dom_dims = tuple(a.dim for a in self.dom_atoms)
        self.cod_dims = tuple(a.dim for a in self.cod_atoms)

    def col(self, key: tuple) -> dict:
        raise NotImplementedError

    def evaluate(self, key: tuple) -> dict:
        return self.col(key)

    def basis_keys(self) -> Iterable[tuple]:
        return itertools.product(*(range(d) for d in self.dom_dims))

    def materialize(self) -> "Matrix":
        cols = {}
        for k in self.basis_keys():
            c = self.evaluate(k)
            if c:
                cols[k] = c
        return Matrix(self.dom, self.cod, self.field, cols)

    def retype(self, dom=None, cod=None) -> "Morphism":
        """Same map, new declared shapes with identical atoms."""
        return Retyped(self, as_shape(dom) if dom is not None else self.dom,
                       as_shape(cod) if cod is not None else self.cod)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def __repr__(self):
        return f"<{type(self).__name__} {shape_str(self.dom)} -> {shape_str(self.cod)}>"


class Matrix(Morphism):
    """Stored columns, keyed by atomic domain keys."""

    def __init__(self, dom, cod, field, cols: dict):
        super().__init__(dom, cod, field)
        self.cols = cols

    def col(self, key):
        return self.cols.get(key, {})

    def materialize(self):
        return self

    @classmethod
    def from_function(cls, dom, cod, field, fn: Callable[[tuple], dict]) -> "Matrix":
        m = cls(dom, cod, field, {})
        p = field.p
        for k in m.basis_keys():
            c = _reduce({kk: field.norm(v) for kk, v in fn(k).items()}, p)
            if c:
                m.cols[k] = c
        return m

    @classmethod
    def from_flat(cls, dom, cod, field, columns: dict) -> "Matrix":
        """``columns``: flat domain index -> {flat codomain index: coeff}."""
        m = cls(dom, cod, field, {})
        for i, c in columns.items():
            c = _reduce({unravel(j, m.cod_dims): field.norm(v) for j, v in c.items()}, field.p)
            if c:
                m.cols[unravel(i, m.dom_dims)] = c
        return m

    def flat_columns(self) -> dict:
        out = {}
        for k, c in self.cols.items():
            out[ravel(k, self.dom_dims)] = {ravel(kk, self.cod_dims): v for kk, v in c.items()}
        return dict(sorted(out.items()))

    def with_entry(self, dom_key: tuple, cod_key: tuple, value) -> "Matrix":
        cols = {k: dict(c) for k, c in self.cols.items()}
        c = cols.setdefault(tuple(dom_key), {})
        v = self.field.norm(value)
        if v:
            c[tuple(cod_key)] = v
        else:
            c.pop(tuple(cod_key), None)
        return Matrix(self.dom, self.cod, self.field, cols)


class Identity(Morphism):
    def __init__(self, shape, field):
        super().__init__(shape, shape, field)

    def col(self, key):
        return {key: 1}


class Retyped(Morphism):
    def __init__(self, inner: Morphism, dom, cod):
        super().__init__(dom, cod, inner.field)
        if self.dom_atoms != inner.dom_atoms or self.cod_atoms != inner.cod_atoms:
            raise ShapeMismatch("retype must preserve the atomic shape")
        self.inner = inner

    def col(self, key):
        return self.inner.col(key)

    def evaluate(self, key):
        return self.inner.evaluate(key)


class Permutation(Morphism):
    """Reorders atoms: output atom j is input atom ``perm[j]``."""

    def __init__(self, dom, cod, perm: Sequence[int], field):
        super().__init__(dom, cod, field)
        self.perm = tuple(perm)
        if tuple(self.dom_atoms[i] for i in self.perm) != self.cod_atoms:
            raise ShapeMismatch("permutation does not match shapes")

    def col(self, key):
        return {tuple(key[i] for i in self.perm): 1}


class Tensor(Morphism):
    def __init__(self, children: Sequence[Morphism], field):
        dom = tuple(s for c in children for s in c.dom)
        cod = tuple(s for c in children for s in c.cod)
        super().__init__(dom, cod, field)
        self.children = tuple(children)
        # identity runs collapse into a single pass-through block
        parts: list = []
        for c in children:
            n = len(c.dom_atoms)
            if isinstance(c, Identity):
                if parts and parts[-1][0] is None:
                    parts[-1] = (None, parts[-1][1] + n)
                else:
                    parts.append((None, n))
            else:
                parts.append((c, n))
        self._parts = tuple(parts)

    def col(self, key):
        terms = [((), 1)]
        pos = 0
        for child, n in self._parts:
            sub = key[pos : pos + n]
            pos += n
            if child is None:
                terms = [(k + sub, v) for k, v in terms]
            else:
                c = child.col(sub)
                if not c:
                    return {}
                if len(c) == 1:
                    (k2, v2), = c.items()
                    terms = [(k + k2, v * v2) for k, v in terms]
                else:
                    terms = [(k + k2, v * v2) for k, v in terms for k2, v2 in c.items()]
        p = self.field.p
        if p is None:
            return dict(terms)
        return {k: v % p for k, v in terms}


_MEMO_LIMIT = 300_000


class Composite(Morphism):
    """Stages in application order (``stages[0]`` is applied first)."""

    def __init__(self, stages: Sequence[Morphism], field):
        super().__init__(stages[0].dom, stages[-1].cod, field)
        self.stages = tuple(stages)
        self._memo: dict = {}

    def evaluate(self, key):
        vec = {key: 1}
        p = self.field.p
        for st in self.stages:
            out: dict = {}
            get = out.get
            col = st.col
            for k, v in vec.items():
                for k2, v2 in col(k).items():
                    out[k2] = get(k2, 0) + v * v2
            vec = _reduce(out, p)
            if not vec:
                break
        return vec

    def col(self, key):
        c = self._memo.get(key)
        if c is None:
            c = self.evaluate(key)
            if len(self._memo) < _MEMO_LIMIT:
                self._memo[key] = c
        return c


def _field_of(fs: Sequence[Morphism]) -> FieldSpec:
    fields = {f.field for f in fs}
    if len(fields) != 1:
        raise FieldMismatch("morphisms over different fields")
    return fields.pop()


def identity(shape, field: FieldSpec) -> Identity:
    return Identity(as_shape(shape), field)


def compose(*fs: Morphism) -> Morphism:
    """compose(f, g, h) = f∘g∘h: h is applied first."""
    if not fs:
        raise ValueError("compose needs at least one morphism")
    field = _field_of(fs)
    stages: list[Morphism] = []
    for f in reversed(fs):
        if stages and not same_shape(stages[-1].cod, f.dom):
            raise ShapeMismatch(
                f"cannot compose {shape_str(f.dom)} -> {shape_str(f.cod)} after "
                f"{shape_str(stages[-1].dom)} -> {shape_str(stages[-1].cod)}"
            )
        if isinstance(f, Composite):
            stages.extend(f.stages)
        elif isinstance(f, Retyped) and isinstance(f.inner, Composite):
            stages.extend(f.inner.stages)
        else:
            stages.append(f)
    dom, cod = fs[-1].dom, fs[0].cod
    kept = [s for s in stages if not isinstance(s, Identity)]
    if not kept:
        return Identity(dom, field) if dom == cod else identity(dom, field).retype(dom, cod)
    out = kept[0] if len(kept) == 1 else Composite(kept, field)
    if out.dom != dom or out.cod != cod:
        out = out.retype(dom, cod)
    return out


def tensor(*fs, field: FieldSpec | None = None) -> Morphism:
    """Tensor product of maps.  A ``Space`` (or shape tuple) stands for its identity."""
    if field is None:
        ms = [f for f in fs if isinstance(f, Morphism)]
        if not ms:
            raise ValueError("tensor of spaces needs an explicit field")
        field = _field_of(ms)
    children = []
    for f in fs:
        if isinstance(f, Morphism):
            if f.field != field:
                raise FieldMismatch("morphisms over different fields")
            children.append(f)
        else:
            sh = as_shape(f)
            if sh:
                children.append(Identity(sh, field))
    children = [c for c in children if c.dom_atoms or c.cod_atoms or not isinstance(c, Identity)]
    if not children:
        return Identity(K, field)
    if all(isinstance(c, Identity) for c in children):
        return Identity(tuple(s for c in children for s in c.dom), field)
    if len(children) == 1:
        return children[0]
    return Tensor(children, field)


def symmetry(x, y, field: FieldSpec) -> Permutation:
    """c_{X,Y}: X⊗Y -> Y⊗X."""
    x, y = as_shape(x), as_shape(y)
    nx, ny = len(shape_atoms(x)), len(shape_atoms(y))
    perm = list(range(nx, nx + ny)) + list(range(nx))
    return Permutation(x + y, y + x, perm, field)


def permute(dom, order: Sequence[int], field: FieldSpec) -> Permutation:
    """Reorder declared factors: output factor j is input factor ``order[j]``."""
    dom = as_shape(dom)
    starts, pos = [], 0
    for s in dom:
        starts.append(pos)
        pos += len(s.atoms)
    perm = [starts[i] + j for i in order for j in range(len(dom[i].atoms))]
    return Permutation(dom, tuple(dom[i] for i in order), perm, field)


def apply(f: Morphism, v: SparseVec) -> SparseVec:
    if not same_shape(v.shape, f.dom):
        raise ShapeMismatch(f"vector of shape {shape_str(v.shape)} vs domain {shape_str(f.dom)}")
    out: dict = {}
    for k, c in v.keys_dict().items():
        for k2, c2 in f.evaluate(k).items():
            out[k2] = out.get(k2, 0) + c * c2
    out = _reduce(out, f.field.p)
    return SparseVec.from_keys(f.cod, out)


def scale(f: Morphism, s: Raw) -> Matrix:
    m = f.materialize()
    cols = {k: _reduce({kk: v * s for kk, v in c.items()}, f.field.p) for k, c in m.cols.items()}
    return Matrix(f.dom, f.cod, f.field, {k: c for k, c in cols.items() if c})


def add(f: Morphism, g: Morphism) -> Matrix:
    if not (same_shape(f.dom, g.dom) and same_shape(f.cod, g.cod)):
        raise ShapeMismatch("adding maps of different shapes")
    cols = {}
    for k in f.basis_keys():
        c = dict(f.evaluate(k))
        for kk, v in g.evaluate(k).items():
            c[kk] = c.get(kk, 0) + v
        c = _reduce(c, f.field.p)
        if c:
            cols[k] = c
    return Matrix(f.dom, f.cod, f.field, cols)


def zero_map(dom, cod, field) -> Matrix:
    return Matrix(dom, cod, field, {})


def rebase(f: Morphism, dom, cod) -> Matrix:
    """The same flat matrix declared on other shapes of equal total dimension."""
    dom, cod = as_shape(dom), as_shape(cod)
    if shape_dim(dom) != shape_dim(f.dom) or shape_dim(cod) != shape_dim(f.cod):
        raise ShapeMismatch("rebase needs equal dimensions")
    return Matrix.from_flat(dom, cod, f.field, f.materialize().flat_columns())


def transpose(f: Morphism) -> Matrix:
    """f: X1⊗..⊗Xm -> Y1⊗..⊗Yn gives f^T: Y1*⊗..⊗Yn* -> X1*⊗..⊗Xm* under the
    factorwise pairing <φ1⊗φ2, x1⊗x2> = φ1(x1)φ2(x2)."""
    dom = tuple(dual_space(s) for s in f.cod)
    cod = tuple(dual_space(s) for s in f.dom)

    def flatten(shape, key):
        out, pos = [], 0
        for s in shape:
            n = len(s.atoms)
            out.append(ravel(key[pos : pos + n], [a.dim for a in s.atoms]))
            pos += n
        return tuple(out)

    cols: dict = {}
    for k in f.basis_keys():
        kd = flatten(f.dom, k)
        for k2, v in f.evaluate(k).items():
            cols.setdefault(flatten(f.cod, k2), {})[kd] = v
    return Matrix(dom, cod, f.field, cols)


# equality


@dataclass
class Witness:
    index: int
    key: tuple
    labels: tuple
    lhs: dict
    rhs: dict

    def image_terms(self, shape: Shape, vec: dict) -> list:
        dims = [a.dim for a in shape_atoms(shape)]
        rows = sorted(vec.items(), key=lambda kv: ravel(kv[0], dims))
        return [[list(key_labels(shape, k)), str(v)] for k, v in rows]


@dataclass
class EqResult:
    equal: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.equal


_PAR: tuple | None = None


def _first_diff(f: Morphism, g: Morphism, start: int, stop: int):
    dims = f.dom_dims
    keys = itertools.islice(itertools.product(*(range(d) for d in dims)), start, stop)
    for i, k in enumerate(keys, start):
        if f.evaluate(k) != g.evaluate(k):
            return i
    return None


def _par_chunk(bounds):
    f, g = _PAR
    return _first_diff(f, g, *bounds)


def default_jobs() -> int:
    v = os.environ.get("HOPFBRACE_JOBS")
    return int(v) if v else 1


_PARALLEL_MIN = 4096


def mor_eq(f: Morphism, g: Morphism, jobs: int | None = None) -> EqResult:
    """Exhaustive comparison on every domain basis vector.  The witness is the
    lowest differing row-major index, for any ``jobs``."""
    global _PAR
    if not (same_shape(f.dom, g.dom) and same_shape(f.cod, g.cod)):
        raise ShapeMismatch(
            f"{shape_str(f.dom)} -> {shape_str(f.cod)} vs {shape_str(g.dom)} -> {shape_str(g.cod)}"
        )
    if f.field != g.field:
        raise FieldMismatch("maps over different fields")
    jobs = default_jobs() if jobs is None else jobs
    n = shape_dim(f.dom)
    if jobs <= 1 or n < _PARALLEL_MIN:
        first = _first_diff(f, g, 0, n)
    else:
        nchunks = jobs * 4
        step = -(-n // nchunks)
        bounds = [(a, min(a + step, n)) for a in range(0, n, step)]
        _PAR = (f, g)
        try:
            with mp.get_context("fork").Pool(jobs) as pool:
                found = [r for r in pool.map(_par_chunk, bounds) if r is not None]
        finally:
            _PAR = None
        first = min(found) if found else None
    if first is None:
        return EqResult(True)
    key = unravel(first, f.dom_dims)
    return EqResult(False, Witness(first, key, key_labels(f.dom, key), f.evaluate(key), g.evaluate(key)))


# convolution


def convolution(f: Morphism, g: Morphism, coalg, alg) -> Morphism:
    """f∗g = μ_A∘(f⊗g)∘δ_C.  ``coalg`` needs ``delta``; ``alg`` needs ``mu``."""
    return compose(alg.mu, tensor(f, g), coalg.delta)


def conv_unit(coalg, alg) -> Morphism:
    return compose(alg.eta, coalg.eps)


def solve_sparse(rows: list, rhs: list, ncols: int, field: FieldSpec) -> list:
    """Unique solution of ``rows · x = rhs``.

    ``rows[i]`` maps column -> coefficient; ``rhs[i]`` maps a right-hand-side
    label -> value, so several systems share one elimination.  Returns, for
    each column, the dict label -> value.  Raises ``SingularSystem`` when the
    rank is below ``ncols`` or the system is inconsistent.
    """
    p = field.p
    div = field.div

    order = sorted(range(len(rows)), key=lambda i: len(rows[i]))
    pivots: dict = {}
    created: list = []
    for i in order:
        r = {c: v for c, v in rows[i].items() if v}
        b = {l: v for l, v in rhs[i].items() if v}
        while True:
            hit = [c for c in r if c in pivots]
            if not hit:
                break
            c = min(hit, key=lambda c: pivots[c][2])
            prow, pb, _ = pivots[c]
            factor = r[c]
            for cc, vv in prow.items():
                nv = r.get(cc, 0) - factor * vv
                if p is not None:
                    nv %= p
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
            for ll, vv in pb.items():
                nv = b.get(ll, 0) - factor * vv
                if p is not None:
                    nv %= p
                if nv:
                    b[ll] = nv
                else:
                    b.pop(ll, None)
        if not r:
            if b:
                raise SingularSystem("inconsistent system")
            continue
        c = min(r, key=lambda c: (len(r), c))
        lead = r[c]
        if lead != 1:
            r = {cc: field.norm(div(vv, lead)) for cc, vv in r.items()}
            b = {ll: field.norm(div(vv, lead)) for ll, vv in b.items()}
        pivots[c] = (r, b, len(created))
        created.append(c)
    if len(pivots) < ncols:
        raise SingularSystem(f"rank {len(pivots)} < {ncols}")
    sol: dict = {}
    for c in reversed(created):
        r, b, _ = pivots[c]
        x = dict(b)
        for cc, vv in r.items():
            if cc == c:
                continue
            for ll, xv in sol[cc].items():
                nv = x.get(ll, 0) - vv * xv
                if p is not None:
                    nv %= p
                x[ll] = nv
        sol[c] = {ll: field.norm(v) for ll, v in x.items() if v}
    return [sol[c] for c in range(ncols)]


def matrix_inverse(f: Morphism) -> Matrix:
    """Exact inverse of a square map; raises ``SingularSystem``."""
    if shape_dim(f.dom) != shape_dim(f.cod):
        raise ShapeMismatch("inverse of a non-square map")
    m = f.materialize()
    n = shape_dim(f.dom)
    rows: list = [dict() for _ in range(n)]
    for k, c in m.cols.items():
        j = ravel(k, m.dom_dims)
        for kk, v in c.items():
            rows[ravel(kk, m.cod_dims)][j] = v
    sol = solve_sparse(rows, [{i: 1} for i in range(n)], n, f.field)
    cols: dict = {}
    for j, xrow in enumerate(sol):
        for k, v in xrow.items():
            cols.setdefault(k, {})[j] = v
    return Matrix.from_flat(f.cod, f.dom, f.field, cols)


def conv_inverse(f: Morphism, coalg, alg, verify: bool = True) -> Matrix:
    """u with u∗f = f∗u = η∘ε, by solving u∗f = η∘ε and checking the other side."""
    field = f.field
    C, A = f.dom, f.cod
    c_keys = list(f.basis_keys())
    a_keys = list(itertools.product(*(range(d) for d in f.cod_dims)))
    a_index = {k: i for i, k in enumerate(a_keys)}
    c_index = {k: i for i, k in enumerate(c_keys)}
    na, nc = len(a_keys), len(c_keys)
    nca = len(f.dom_atoms)
    delta, mu = coalg.delta, alg.mu
    unit = alg.eta.col(())
    eps = coalg.eps

    right_mult: dict = {}

    def rmult(c2):
        # a' -> μ(a' ⊗ f(c2)) as {a_index: coeff}
        r = right_mult.get(c2)
        if r is None:
            fc = f.col(c2)
            r = []
            for ap in a_keys:
                acc: dict = {}
                for k, v in fc.items():
                    for kk, vv in mu.col(ap + k).items():
                        acc[a_index[kk]] = acc.get(a_index[kk], 0) + v * vv
                r.append(_reduce(acc, field.p))
            right_mult[c2] = r
        return r

    rows: list = []
    rhs: list = []
    for c in c_keys:
        block = [dict() for _ in range(na)]
        for k, d in delta.col(c).items():
            c1, c2 = k[:nca], k[nca:]
            j1 = c_index[c1]
            for ia, img in enumerate(rmult(c2)):
                col = ia * nc + j1
                for a, v in img.items():
                    row = block[a]
                    row[col] = row.get(col, 0) + d * v
        e = eps.col(c).get((), 0)
        for a in range(na):
            rows.append(_reduce(block[a], field.p))
            val = field.norm(e * unit.get(a_keys[a], 0)) if e else 0
            rhs.append({0: val} if val else {})
    try:
        sol = solve_sparse(rows, rhs, na * nc, field)
    except SingularSystem as exc:
        raise NotConvolutionInvertible(str(exc)) from None
    cols: dict = {}
    for idx, x in enumerate(sol):
        v = x.get(0)
        if v:
            ia, jc = divmod(idx, nc)
            cols.setdefault(c_keys[jc], {})[a_keys[ia]] = v
    u = Matrix(C, A, field, cols)
    if verify:
        target = conv_unit(coalg, alg)
        if not mor_eq(convolution(u, f, coalg, alg), target, jobs=1):
            raise NotConvolutionInvertible("left equation has no solution")
        if not mor_eq(convolution(f, u, coalg, alg), target, jobs=1):
            raise NotConvolutionInvertible("solution is one-sided only")
    return u
