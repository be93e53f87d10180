import itertools

import pytest
from hypothesis import assume, given, strategies as st

from hopfbrace.exactfield import FieldSpec
from hopfbrace.lintensor import (
    FieldMismatch, Matrix, ShapeMismatch, SingularSystem, Space, SparseVec, add, apply, compose,
    identity, key_labels, matrix_inverse, mor_eq, permute, ravel, rebase, scale, shape_dim,
    solve_sparse, symmetry, tensor, transpose, unravel, zero_map,
)

Q = FieldSpec.rational()
F5 = FieldSpec.prime(5)

SPACES = {d: Space.named(f"V{d}", d) for d in (1, 2, 3)}
dims = st.sampled_from([1, 2, 3])
fields = st.sampled_from([Q, F5])
coeffs = st.integers(-3, 3)


def dense(m):
    """Row-major dense array of a map, by flat index."""
    m = m.materialize()
    n_in, n_out = shape_dim(m.dom), shape_dim(m.cod)
    out = [[0] * n_in for _ in range(n_out)]
    for j, col in m.flat_columns().items():
        for i, v in col.items():
            out[i][j] = v
    return out


def dense_mul(a, b, F):
    return [[F.norm(sum(a[i][k] * b[k][j] for k in range(len(b)))) for j in range(len(b[0]))]
            for i in range(len(a))]


def kron(a, b, F):
    return [[F.norm(a[i // len(b)][j // len(b[0])] * b[i % len(b)][j % len(b[0])])
             for j in range(len(a[0]) * len(b[0]))] for i in range(len(a) * len(b))]


@st.composite
def matrices(draw, dom=None, cod=None, field=None):
    F = field or draw(fields)
    dom = dom if dom is not None else (SPACES[draw(dims)],)
    cod = cod if cod is not None else (SPACES[draw(dims)],)
    n_in, n_out = shape_dim(dom), shape_dim(cod)
    cols = {j: {i: draw(coeffs) for i in range(n_out)} for j in range(n_in)}
    return Matrix.from_flat(dom, cod, F, cols)


@st.composite
def chains(draw):
    """Three composable maps over one field."""
    F = draw(fields)
    a, b, c, d = (SPACES[draw(dims)] for _ in range(4))
    h = draw(matrices((a,), (b,), F))
    g = draw(matrices((b,), (c,), F))
    f = draw(matrices((c,), (d,), F))
    return f, g, h


@given(chains())
def test_composition_matches_dense_product(fgh):
    f, g, h = fgh
    F = f.field
    assert dense(compose(f, g)) == dense_mul(dense(f), dense(g), F)
    assert mor_eq(compose(compose(f, g), h), compose(f, compose(g, h)))
    assert mor_eq(compose(f, g, h), compose(f, compose(g, h)))


@given(chains())
def test_identity_is_neutral(fgh):
    f, _, _ = fgh
    assert mor_eq(compose(identity(f.cod, f.field), f), f)
    assert mor_eq(compose(f, identity(f.dom, f.field)), f)


@given(st.data())
def test_tensor_is_kronecker(data):
    F = data.draw(fields)
    f = data.draw(matrices(field=F))
    g = data.draw(matrices(field=F))
    assert dense(tensor(f, g)) == kron(dense(f), dense(g), F)


@given(st.data())
def test_interchange_law(data):
    """(f⊗g)∘(h⊗k) = (f∘h)⊗(g∘k)."""
    F = data.draw(fields)
    a, b, c, d, e, x = (SPACES[data.draw(dims)] for _ in range(6))
    h = data.draw(matrices((a,), (b,), F))
    f = data.draw(matrices((b,), (c,), F))
    k = data.draw(matrices((d,), (e,), F))
    g = data.draw(matrices((e,), (x,), F))
    assert mor_eq(compose(tensor(f, g), tensor(h, k)), tensor(compose(f, h), compose(g, k)))


@given(st.data())
def test_symmetry_is_natural_and_involutive(data):
    F = data.draw(fields)
    f = data.draw(matrices(field=F))
    g = data.draw(matrices(field=F))
    lhs = compose(symmetry(f.cod, g.cod, F), tensor(f, g))
    rhs = compose(tensor(g, f), symmetry(f.dom, g.dom, F))
    assert mor_eq(lhs, rhs)
    X, Y = f.dom, g.dom
    assert mor_eq(compose(symmetry(Y, X, F), symmetry(X, Y, F)), identity(X + Y, F))


def test_hexagon():
    A, B, C = SPACES[1], SPACES[2], SPACES[3]
    lhs = symmetry((A,), (B, C), Q)
    rhs = compose(tensor(B, symmetry(A, C, Q), field=Q), tensor(symmetry(A, B, Q), C, field=Q))
    assert mor_eq(lhs, rhs)


def test_permute_reorders_factors():
    A, B, C = SPACES[1], SPACES[2], SPACES[3]
    p = permute((A, B, C), (2, 0, 1), Q)
    assert p.cod == (C, A, B)
    assert p.col((0, 1, 2)) == {(2, 0, 1): 1}


@given(st.data())
def test_mor_eq_witness_is_minimal(data):
    F = data.draw(fields)
    f = data.draw(matrices((SPACES[3], SPACES[2]), (SPACES[2],), F))
    j = data.draw(st.integers(0, 5))
    i = data.draw(st.integers(0, 1))
    v = data.draw(st.integers(1, 4))
    key = unravel(j, f.dom_dims)
    g = f.with_entry(key, (i,), F.norm(f.col(key).get((i,), 0) + v))
    res = mor_eq(f, g)
    assert not res
    assert res.witness.index == j
    assert res.witness.key == key
    assert res.witness.labels == key_labels(f.dom, key)
    assert res.witness.lhs == f.evaluate(key)
    assert res.witness.rhs == g.evaluate(key)


def test_mor_eq_parallel_agrees():
    # above the parallel threshold: 20^3 = 8000 keys
    V = Space.named("W", 20)
    f = tensor(identity((V,), Q), identity((V,), Q), identity((V,), Q))
    g = Matrix.from_function((V, V, V), (V, V, V), Q, lambda k: {k: 1})
    g = g.with_entry((7, 3, 19), (7, 3, 19), 2).with_entry((15, 0, 0), (1, 1, 1), 1)
    one = mor_eq(f, g, jobs=1)
    many = mor_eq(f, g, jobs=4)
    assert one.witness.index == many.witness.index == ravel((7, 3, 19), (20, 20, 20))
    assert mor_eq(f, f, jobs=3)


def test_mor_eq_type_errors():
    f = identity((SPACES[2],), Q)
    with pytest.raises(ShapeMismatch):
        mor_eq(f, identity((SPACES[3],), Q))
    with pytest.raises(FieldMismatch):
        mor_eq(f, identity((SPACES[2],), F5))
    with pytest.raises(ShapeMismatch):
        compose(identity((SPACES[2],), Q), identity((SPACES[3],), Q))
    with pytest.raises(FieldMismatch):
        compose(identity((SPACES[2],), Q), identity((SPACES[2],), F5))


@given(st.data())
def test_apply_is_linear(data):
    F = data.draw(fields)
    f = data.draw(matrices(field=F))
    n = shape_dim(f.dom)
    u = {i: data.draw(coeffs) for i in range(n)}
    v = {i: data.draw(coeffs) for i in range(n)}
    s = SparseVec(f.dom, {i: F.norm(u[i] + v[i]) for i in range(n)})
    fu, fv = apply(f, SparseVec(f.dom, u)), apply(f, SparseVec(f.dom, v))
    total = {}
    for d in (fu.entries, fv.entries):
        for k, x in d.items():
            total[k] = F.norm(total.get(k, 0) + x)
    assert apply(f, s) == SparseVec(f.cod, total)


@given(st.data())
def test_add_scale_and_zero(data):
    F = data.draw(fields)
    f = data.draw(matrices(field=F))
    assert mor_eq(add(f, zero_map(f.dom, f.cod, F)), f)
    assert mor_eq(add(f, scale(f, -1)), zero_map(f.dom, f.cod, F))
    assert mor_eq(scale(f, 2), add(f, f))


@given(st.data())
def test_transpose_reverses_composition(data):
    F = data.draw(fields)
    a, b, c = (SPACES[data.draw(dims)] for _ in range(3))
    g = data.draw(matrices((a,), (b,), F))
    f = data.draw(matrices((b,), (c,), F))
    assert dense(transpose(compose(f, g))) == dense(compose(transpose(g), transpose(f)))
    assert dense(transpose(transpose(f))) == dense(f)


def test_rebase_keeps_the_flat_matrix():
    f = Matrix.from_flat((SPACES[2], SPACES[3]), (SPACES[2],), Q, {0: {1: 1}, 5: {0: 2}})
    W, X = Space.named("W", 6), Space.named("X", 2)
    g = rebase(f, (W,), (X,))
    assert g.flat_columns() == f.flat_columns()
    with pytest.raises(ShapeMismatch):
        rebase(f, (Space.named("Y", 5),), (X,))


@given(st.data())
def test_inverse_of_invertible(data):
    F = data.draw(fields)
    n = data.draw(st.integers(1, 4))
    V = Space.named("U", n)
    # upper unitriangular times a permutation is always invertible
    perm = data.draw(st.permutations(range(n)))
    cols = {j: {i: (1 if i == j else data.draw(coeffs)) for i in range(j + 1)} for j in range(n)}
    U = Matrix.from_flat((V,), (V,), F, cols)
    P = Matrix.from_flat((V,), (V,), F, {j: {perm[j]: 1} for j in range(n)})
    M = compose(P, U).materialize()
    Mi = matrix_inverse(M)
    assert mor_eq(compose(M, Mi), identity((V,), F))
    assert mor_eq(compose(Mi, M), identity((V,), F))


def test_singular_system():
    V = Space.named("U", 2)
    M = Matrix.from_flat((V,), (V,), Q, {0: {0: 1, 1: 1}, 1: {0: 2, 1: 2}})
    with pytest.raises(SingularSystem):
        matrix_inverse(M)
    with pytest.raises(SingularSystem):
        solve_sparse([{0: 1}, {0: 1}], [{"a": 1}, {"a": 2}], 1, Q)


def test_solve_sparse_several_right_hand_sides():
    # x + y = a, x - y = b over F_5
    sol = solve_sparse([{0: 1, 1: 1}, {0: 1, 1: 4}], [{"a": 1}, {"b": 1}], 2, F5)
    assert sol[0] == {"a": 3, "b": 3}  # x = (a + b)/2
    assert sol[1] == {"a": 3, "b": 2}  # y = (a - b)/2


def test_ravel_unravel_round_trip():
    dims_ = (2, 3, 4)
    for i in range(24):
        assert ravel(unravel(i, dims_), dims_) == i
    assert [unravel(i, dims_) for i in range(24)] == list(itertools.product(range(2), range(3), range(4)))


def test_space_products_and_labels():
    A, B = SPACES[2], SPACES[3]
    AB = Space.product(A, B)
    assert AB.dim == 6 and AB.atoms == (A, B)
    assert AB.labels[4] == "V21⊗V31"
    assert key_labels((AB, A), (1, 1, 0)) == ("V21⊗V31", "V20")
    with pytest.raises(ValueError):
        Space("bad", ("a", "a"))
    with pytest.raises(ValueError):
        Space("empty", ())
