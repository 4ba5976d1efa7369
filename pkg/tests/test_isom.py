import random

import pytest

from latticeforge.discform import discriminant_form, forms_isomorphic
from latticeforge.errors import NotAnIsometry
from latticeforge.isom import (
    Isometry,
    canonical_embedding_rows,
    canonical_lambda,
    discriminant_action,
    extend_to_lambda,
    identity_isometry,
    invariant_coinvariant,
    isometry_order,
    neg_identity,
    nonsymplectic_feasible,
    spinor_norm,
)
from latticeforge.lattice import Lattice, direct_sum, from_expression, make_named, rescale
from latticeforge.linalg import Matrix, block_diag

A2 = make_named("A", 2)
U = make_named("U")
ROT3 = Matrix([[0, -1], [1, -1]])


def _reflection(lat, v):
    nv = lat.norm(v)
    gv = lat.gram.apply(v)
    n = lat.rank
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            num = 2 * v[i] * gv[j]
            assert num % nv == 0
            row.append((1 if i == j else 0) - num // nv)
        rows.append(row)
    return Isometry(lat, Matrix(rows))


def test_isometry_validation():
    with pytest.raises(NotAnIsometry):
        Isometry(A2, Matrix([[1, 1], [0, 1]]))
    with pytest.raises(NotAnIsometry):
        Isometry(A2, Matrix([[2, 0], [0, 2]]))


def test_order():
    assert isometry_order(identity_isometry(A2)) == 1
    assert isometry_order(neg_identity(A2)) == 2
    assert isometry_order(Isometry(A2, ROT3)) == 3


def test_order_cap():
    # Pell automorphism of the form 2x^2 - 6y^2 has infinite order
    lat = Lattice(Matrix([[2, 0], [0, -6]]))
    f = Isometry(lat, Matrix([[2, 3], [1, 2]]))
    assert isometry_order(f, cap=50) is None
    with pytest.raises(Exception):
        invariant_coinvariant(f)


def test_invariant_coinvariant_examples():
    pair = invariant_coinvariant(neg_identity(U))
    assert pair.invariant.rank == 0
    assert pair.coinvariant.rank == 2
    assert pair.glue_a == 0

    pair = invariant_coinvariant(Isometry(A2, ROT3))
    assert pair.invariant.rank == 0
    assert pair.coinvariant.rank == 2
    assert pair.coinvariant.lattice().gram == A2.gram
    # rk(coinvariant)/(p-1) is an integer
    assert pair.coinvariant.rank % 2 == 0

    lat = direct_sum([U, A2])
    f = Isometry(lat, block_diag([Matrix.identity(2), ROT3]))
    pair = invariant_coinvariant(f)
    assert pair.invariant.rank == 2
    assert pair.coinvariant.lattice().gram == A2.gram
    assert pair.glue_a == 0


def test_discriminant_action():
    assert discriminant_action(identity_isometry(make_named("E", 8)))[0] == "id"
    assert discriminant_action(neg_identity(make_named("OG10")))[0] == "-id"

    og = make_named("OG10")
    # swap the two E8(-1) blocks (coordinates 6..13 and 14..21)
    perm = list(range(24))
    for t in range(8):
        perm[6 + t], perm[14 + t] = perm[14 + t], perm[6 + t]
    m = Matrix([[1 if perm[i] == j else 0 for j in range(24)] for i in range(24)])
    assert discriminant_action(Isometry(og, m))[0] == "id"

    # the A2 rotation on the tail acts trivially on the discriminant group
    rot_tail = block_diag([Matrix.identity(22), ROT3])
    assert discriminant_action(Isometry(og, rot_tail))[0] == "id"


def test_disc_action_power_trivial():
    og = make_named("OG10")
    rot_tail = block_diag([Matrix.identity(22), ROT3])
    f = Isometry(og, rot_tail)
    n = isometry_order(f)
    power = identity_isometry(og)
    for _ in range(n):
        power = f * power
    assert discriminant_action(power)[0] == "id"


def test_spinor_norm_convention():
    og = make_named("OG10")
    v = tuple(1 if i == 6 else 0 for i in range(24))  # a (-2)-vector
    assert og.norm(v) == -2
    assert spinor_norm(_reflection(og, v)) == 1

    assert spinor_norm(identity_isometry(og)) == 1

    w = (1, 1)  # (+2)-vector of U
    assert U.norm(w) == 2
    assert spinor_norm(_reflection(U, w)) == -1


def test_spinor_norm_multiplicative():
    rng = random.Random(4)
    lat = direct_sum([U, A2, rescale(A2, -1)])
    roots = []
    n = lat.rank
    for x in ([1, 1, 0, 0, 0, 0], [1, -1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
              [0, 0, 0, 1, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 0],
              [0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 1, 1]):
        v = tuple(x)
        if abs(lat.norm(v)) == 2:
            roots.append(v)
    isoms = [_reflection(lat, v) for v in roots]
    for _ in range(15):
        f = rng.choice(isoms)
        g = rng.choice(isoms)
        assert spinor_norm(f * g) == spinor_norm(f) * spinor_norm(g)


def test_canonical_lambda():
    lam = canonical_lambda()
    assert lam.rank == 26
    assert abs(lam.det) == 1
    assert lam.signature == (5, 21)
    assert lam.is_even()


def test_extend_identity():
    ext = extend_to_lambda(identity_isometry(make_named("OG10")))
    assert ext.is_identity()


def test_extend_neg_identity():
    og = make_named("OG10")
    ext = extend_to_lambda(neg_identity(og))
    assert isometry_order(ext) == 2
    pair = invariant_coinvariant(ext)
    assert pair.invariant.rank == 1
    assert pair.invariant.gram() == Matrix([[2]])
    # the extension swaps the two orthogonal generators c, d
    og_rows, a2_rows = canonical_embedding_rows()
    c = a2_rows.row(0)
    d = a2_rows.row(1)
    assert ext.matrix.apply(c) == d
    assert ext.matrix.apply(d) == c


def test_extend_restricts_to_input():
    og = make_named("OG10")
    rot_tail = block_diag([Matrix.identity(22), ROT3])
    f = Isometry(og, rot_tail)
    ext = extend_to_lambda(f)
    og_rows, a2_rows = canonical_embedding_rows()
    for i in range(24):
        img = f.matrix.col(i)  # image of basis vector i under f
        want = tuple(sum(img[t] * og_rows[t, j] for t in range(24)) for j in range(26))
        assert ext.matrix.apply(og_rows.row(i)) == want
    # trivial disc action: the orthogonal A2 is fixed pointwise
    assert ext.matrix.apply(a2_rows.row(0)) == a2_rows.row(0)
    # its coinvariant matches the one downstairs (an A2(-1))
    pair = invariant_coinvariant(ext)
    assert pair.coinvariant.rank == 2
    f2, _ = discriminant_form(pair.coinvariant.lattice())
    f3, _ = discriminant_form(rescale(A2, -1))
    assert pair.coinvariant.lattice().signature == (0, 2)
    assert forms_isomorphic(f2, f3)


def test_extend_rejects_other_action():
    og = make_named("OG10")
    # an isometry moving the discriminant class to something not +-id does
    # not exist on Z/3; instead feed a non-OG10 lattice to hit the guard
    with pytest.raises(NotAnIsometry):
        extend_to_lambda(identity_isometry(make_named("F")))


def _coxeter(lat):
    """Product of the reflections in the basis vectors (order p on A_{p-1})."""
    f = identity_isometry(lat)
    for i in range(lat.rank):
        v = tuple(1 if t == i else 0 for t in range(lat.rank))
        f = _reflection(lat, v) * f
    return f


def test_prime_order_glue_bound_on_generated_isometries():
    # >= 20 block isometries of prime order: the glue group of
    # invariant + coinvariant is p-elementary of length a <= rk/(p-1)
    cases = []
    for p, piece in ((2, "[2] + [-2]"), (3, "A2"), (5, "A4"), (7, "A6")):
        base = from_expression(piece)
        cox = _coxeter(base) if p > 2 else neg_identity(base)
        assert isometry_order(cox) == p
        for extra in ("U", "U^2", "E8(-1)", "U + A2(-1)", "U(3)", "A2(-1)^2"):
            other = from_expression(extra)
            lat = direct_sum([base, other])
            m = block_diag([cox.matrix, Matrix.identity(other.rank)])
            cases.append((p, Isometry(lat, m)))
    assert len(cases) >= 20
    for p, f in cases:
        pair = invariant_coinvariant(f)
        rk = pair.coinvariant.rank
        assert rk % (p - 1) == 0
        m = rk // (p - 1)
        assert all(d == p for d in pair.glue_orders)
        assert pair.glue_a <= m


def test_nonsymplectic_feasible_involution_pair():
    # assemble the induced involution pair inside a lattice of the rank-24
    # hyperbolic-type genus by gluing along the 2-parts of the discriminants,
    # then check the feasibility report accepts it
    from latticeforge.catalog import induced_row
    from latticeforge.discform import (
        _match_maps,
        discriminant_form,
        subgroup_form,
    )
    from latticeforge.glue import GlueData, Sublattice, glue_group, primitive_extension
    from latticeforge.isom import InvariantPair

    row = induced_row("phi21")
    inv = from_expression(row.inv)        # U + E6(-2)
    coinv = from_expression(row.coinv)    # U^2 + D4(-1)^3
    fi, _ = discriminant_form(inv)
    fc, _ = discriminant_form(coinv)
    two_part = [x for x in fi.elements() if any(x) and fi.element_order(x) == 2]
    sub, lifts = subgroup_form(fi, two_part)
    assert sub.orders == (2,) * 6
    maps = _match_maps(sub, fc, -1, max_results=1)
    assert maps
    ext, inv_rows, coinv_rows = primitive_extension(
        GlueData(inv, coinv, lifts, maps[0]))
    amb = ext.lattice
    assert amb.rank == 24 and abs(amb.det) == 3 and amb.signature == (3, 21)
    s_inv = Sublattice(amb, inv_rows)
    s_coinv = Sublattice(amb, coinv_rows)
    orders, a = glue_group(amb, s_inv, s_coinv)
    pair = InvariantPair(s_inv, s_coinv, orders, a)
    ok, report = nonsymplectic_feasible(pair, 2)
    assert ok, report


def test_nonsymplectic_feasible_p_too_big():
    og = make_named("OG10")
    pair = invariant_coinvariant(identity_isometry(og))
    ok, report = nonsymplectic_feasible(pair, 29)
    assert not ok
    assert any(name == "p_le_23" and not passed for name, passed, _ in report)


def test_nonsymplectic_feasible_positive_definite_coinvariant():
    og = make_named("OG10")
    rot_tail = block_diag([Matrix.identity(22), ROT3])
    f = Isometry(og, rot_tail)
    pair = invariant_coinvariant(f)
    assert pair.coinvariant.lattice().signature == (0, 2)
    ok, report = nonsymplectic_feasible(pair, 3)
    assert not ok
    assert any(name == "coinvariant_signature" and not passed for name, passed, _ in report)
