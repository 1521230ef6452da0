"""Tensor bookkeeping: spaces, Kronecker products, chains, identity checks."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from entwiner.fields import QQ
from entwiner.linalg import (
    LinearMap,
    ShapeError,
    Space,
    apply_covector,
    check_map_identity,
    compose,
    contract_left,
    contract_right,
    dual_space,
    embed13,
    from_columns,
    identity,
    insert_left,
    insert_right,
    is_invertible,
    kron,
    lazy_kron,
    materialize,
    rank_one,
    space,
    tensor,
    tensor_vec,
    twist,
    zero_map,
)

V2 = space("a0", "a1")
V3 = space("b0", "b1", "b2")
W2 = space("c0", "c1")
W3 = space("d0", "d1", "d2")


def dense(rng, dom, cod, lo=-2, hi=3):
    rows = tuple(
        tuple(rng.randrange(lo, hi) for _ in range(dom.dim)) for _ in range(cod.dim)
    )
    return LinearMap(QQ, dom, cod, rows)


def test_space_is_atomic_or_tensor():
    assert space("x").dim == 1
    assert V3.dims == (3,)
    with pytest.raises(ShapeError):
        Space()
    with pytest.raises(ShapeError):
        Space(labels=("x",), factors=(V2,))


def test_tensor_flattens():
    t = tensor(tensor(V2, V3), W2)
    assert t == tensor(V2, V3, W2)
    assert t.dim == 12
    assert t.dims == (2, 3, 2)
    assert tensor(V2) == V2


def test_row_major_basis_tuples():
    t = tensor(V2, V3)
    assert t.basis_tuple(0) == ("a0", "b0")
    assert t.basis_tuple(1) == ("a0", "b1")
    assert t.basis_tuple(3) == ("a1", "b0")
    assert t.label(3) == "(a1)(b0)"


def test_triple_index_roundtrip():
    # flattening a triple basis index (i, j, k) is row-major and invertible
    dims = (2, 3, 4)
    spaces = tuple(space(*(f"e{n}{i}" for i in range(d))) for n, d in enumerate(dims))
    t = tensor(*spaces)
    for i in range(dims[0]):
        for j in range(dims[1]):
            for k in range(dims[2]):
                flat = (i * dims[1] + j) * dims[2] + k
                vec = tensor_vec(
                    tensor_vec(basis_vec(dims[0], i), basis_vec(dims[1], j)),
                    basis_vec(dims[2], k),
                )
                assert vec == basis_vec(t.dim, flat)
                assert t.basis_tuple(flat) == (f"e0{i}", f"e1{j}", f"e2{k}")


def basis_vec(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def test_tensor_vec_matches_nesting():
    v = (1, 2)
    w = (3, 0, 5)
    assert tensor_vec(v, w) == (3, 0, 5, 6, 0, 10)
    u = (7,)
    assert tensor_vec(u, tensor_vec(v, w)) == tensor_vec(tensor_vec(u, v), w)


def test_kron_matches_definition():
    rng = random.Random(11)
    for v, vp, w, wp in ((V2, V3, W2, W3), (V3, V2, W3, W2), (V2, V2, W3, W3)):
        f = dense(rng, v, vp)
        g = dense(rng, w, wp)
        k = kron(f, g)
        assert k.domain == tensor(v, w)
        assert k.codomain == tensor(vp, wp)
        for i in range(vp.dim):
            for j in range(v.dim):
                for m in range(wp.dim):
                    for l in range(w.dim):
                        assert (
                            k.rows[i * wp.dim + m][j * w.dim + l]
                            == f.rows[i][j] * g.rows[m][l]
                        )


def test_kron_mixed_product_law():
    rng = random.Random(23)
    for _ in range(10):
        f1 = dense(rng, V2, V3)
        f2 = dense(rng, V3, V2)
        g1 = dense(rng, W2, W3)
        g2 = dense(rng, W3, W2)
        lhs = kron(compose(f1, f2), compose(g1, g2))
        rhs = compose(kron(f1, g1), kron(f2, g2))
        assert lhs.rows == rhs.rows


def test_compose_is_right_to_left():
    g = LinearMap(QQ, V2, V2, ((0, 0), (1, 0)))  # e0 -> e1, e1 -> 0
    f = LinearMap(QQ, V2, V2, ((0, 0), (0, 1)))  # e1 -> e1, e0 -> 0
    fg = compose(f, g)
    assert fg.rows == ((0, 0), (1, 0))  # e0 -> e1, e1 -> 0
    with pytest.raises(ShapeError):
        compose(dense(random.Random(1), V2, V3), dense(random.Random(1), V2, V3))


def test_compose_associativity():
    rng = random.Random(37)
    for _ in range(10):
        f = dense(rng, V3, W2)
        g = dense(rng, V2, V3)
        h = dense(rng, W3, V2)
        assert compose(compose(f, g), h).rows == compose(f, compose(g, h)).rows


def test_twist_literal_2x2():
    tau = twist(QQ, V2, W2)
    assert tau.rows == (
        (1, 0, 0, 0),
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (0, 0, 0, 1),
    )


def test_twist_permutes_basis():
    tau = twist(QQ, V2, V3)
    for i in range(2):
        for j in range(3):
            col = [row[i * 3 + j] for row in tau.rows]
            assert col == list(basis_vec(6, j * 2 + i))
    assert compose(twist(QQ, V3, V2), tau).rows == identity(QQ, tensor(V2, V3)).rows


def test_twist_naturality():
    rng = random.Random(41)
    for _ in range(8):
        f = dense(rng, V2, V3)
        g = dense(rng, W2, W3)
        lhs = compose(kron(g, f), twist(QQ, V2, W2))
        rhs = compose(twist(QQ, V3, W3), kron(f, g))
        assert lhs.rows == rhs.rows


def test_embed13_matches_definition():
    rng = random.Random(53)
    s = dense(rng, tensor(V2, W2), tensor(V2, W2))
    mid = V3
    e = embed13(s, mid)
    dv, dm, dw = 2, 3, 2
    for i in range(dv):
        for m in range(dm):
            for k in range(dw):
                for j in range(dv):
                    for mm in range(dm):
                        for l in range(dw):
                            got = e.rows[(i * dm + m) * dw + k][(j * dm + mm) * dw + l]
                            want = s.rows[i * dw + k][j * dw + l] if m == mm else 0
                            assert got == want


def test_lazy_kron_matches_dense_kron():
    rng = random.Random(67)
    f = dense(rng, V2, V3)
    g = dense(rng, W3, W2)
    assert materialize([lazy_kron(f, g)]).rows == kron(f, g).rows
    h = dense(rng, tensor(V3, W2), V2)
    assert (
        materialize([h, lazy_kron(f, g)]).rows == compose(h, kron(f, g)).rows
    )


def test_identity_and_zero():
    assert identity(QQ, V3).rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert zero_map(QQ, V2, V3).rows == ((0, 0), (0, 0), (0, 0))
    assert is_invertible(identity(QQ, V3))
    assert not is_invertible(zero_map(QQ, V2, V2))
    assert is_invertible(twist(QQ, V2, V3))
    assert not is_invertible(LinearMap(QQ, V2, V2, ((1, 1), (1, 1))))


def test_from_columns():
    f = from_columns(QQ, V2, V3, ((1, 2, 3), (0, 1, 0)))
    assert f.rows == ((1, 0), (2, 1), (3, 0))


def test_covector_helpers():
    phi = (2, -1)
    assert apply_covector(phi, (3, 4)) == 2
    r = rank_one(QQ, V2, phi, V3, (1, 0, 1))
    assert r.rows == ((2, -1), (0, 0), (2, -1))


def test_insert_and_contract():
    wv = (3, 5)
    ins = insert_left(QQ, wv, W2, V3)
    for j in range(3):
        col = [row[j] for row in ins.rows]
        assert col == list(tensor_vec(wv, basis_vec(3, j)))
    ins_r = insert_right(QQ, V3, wv, W2)
    for j in range(3):
        col = [row[j] for row in ins_r.rows]
        assert col == list(tensor_vec(basis_vec(3, j), wv))
    phi = (1, -2)
    cl = contract_left(QQ, phi, W2, V3)
    assert compose(cl, ins).rows == tuple(
        tuple(apply_covector(phi, wv) * x for x in row)
        for row in identity(QQ, V3).rows
    )
    cr = contract_right(QQ, V3, phi, W2)
    assert compose(cr, ins_r).rows == compose(cl, ins).rows


def test_check_map_identity_passes():
    c = check_map_identity("tau-involution", [twist(QQ, W2, V2), twist(QQ, V2, W2)], identity(QQ, tensor(V2, W2)))
    assert c.passed
    assert c.witness is None


def test_check_map_identity_witness_is_first_failing_column():
    rhs = identity(QQ, tensor(V2, V3))
    bad = LinearMap(
        QQ,
        rhs.domain,
        rhs.codomain,
        tuple(
            tuple(v + (1 if (i, j) == (0, 4) else 0) for j, v in enumerate(row))
            for i, row in enumerate(rhs.rows)
        ),
    )
    c = check_map_identity("bumped", bad, rhs)
    assert not c.passed
    assert c.witness == ("a1", "b1")  # column 4 = e_{a1} (x) e_{b1}
    assert c.residual[0] == "1"
    assert all(r == "0" for r in c.residual[1:])


def test_check_map_identity_shape_errors():
    with pytest.raises(ShapeError):
        check_map_identity("bad", identity(QQ, V2), identity(QQ, V3))


small_entries = st.integers(min_value=-3, max_value=3)


@st.composite
def maps_2x2(draw):
    rows = tuple(tuple(draw(small_entries) for _ in range(2)) for _ in range(2))
    return LinearMap(QQ, V2, V2, rows)


@given(maps_2x2(), maps_2x2(), maps_2x2(), maps_2x2())
def test_kron_bilinear_in_each_leg(f1, f2, g1, g2):
    add = lambda p, q: LinearMap(
        QQ, p.domain, p.codomain,
        tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(p.rows, q.rows)),
    )
    assert kron(add(f1, f2), g1).rows == add(kron(f1, g1), kron(f2, g1)).rows
    assert kron(f1, add(g1, g2)).rows == add(kron(f1, g1), kron(f1, g2)).rows
