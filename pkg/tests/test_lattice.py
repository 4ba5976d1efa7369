import json
import random

import pytest

from latticeforge.errors import BadParams, UnknownName, ZeroScale, ZeroVector
from latticeforge.lattice import (
    Lattice,
    direct_sum,
    from_expression,
    invariants,
    make_named,
    rescale,
)
from latticeforge.linalg import Matrix

# name, rank, signature, determinant, even
GOLDEN = [
    ("U", 2, (1, 1), -1, True),
    ("A2", 2, (2, 0), 3, True),
    ("A4", 4, (4, 0), 5, True),
    ("A10", 10, (10, 0), 11, True),
    ("D4", 4, (4, 0), 4, True),
    ("E6", 6, (6, 0), 3, True),
    ("E7", 7, (7, 0), 2, True),
    ("E8", 8, (8, 0), 1, True),
    ("K7", 2, (0, 2), 7, True),
    ("K11", 2, (0, 2), 11, True),
    ("K19", 2, (0, 2), 19, True),
    ("K23", 2, (0, 2), 23, True),
    ("h5", 2, (1, 1), -5, True),
    ("h13", 2, (1, 1), -13, True),
    ("E6*(3)", 6, (6, 0), 243, True),
    ("L17", 4, (4, 0), 17, True),
    ("N69", 2, (1, 1), -69, True),
    ("N15", 2, (2, 0), 15, True),
    ("ExA", 2, (2, 0), 23, True),
    ("ExB", 2, (2, 0), 23, True),
    ("OG10", 24, (3, 21), -3, True),
    ("Lambda", 26, (5, 21), -1, True),
    ("F", 22, (20, 2), 3, True),
    ("K3", 22, (3, 19), -1, True),
]


@pytest.mark.parametrize("name,rank,sig,d,even", GOLDEN)
def test_named_invariants(name, rank, sig, d, even):
    lat = from_expression(name)
    assert lat.rank == rank
    assert lat.signature == sig
    assert lat.det == d
    assert lat.is_even() == even


def test_named_k7_h5_matrices():
    assert make_named("K", 7).gram == Matrix([[-4, 1], [1, -2]])
    assert make_named("H", 5).gram == Matrix([[2, 1], [1, -2]])
    assert make_named("ExA").gram == Matrix([[12, 1], [1, 2]])


def test_middle_cohomology_lattice():
    # the odd unimodular middle-cohomology lattice of a cubic fourfold;
    # rank 23 = 22 + 1 from the primitive part plus the square of the
    # hyperplane class, signature (21, 2)
    h4 = make_named("H4cubic")
    assert h4.rank == 23
    assert h4.signature == (21, 2)
    assert abs(h4.det) == 1
    assert not h4.is_even()


def test_bad_names():
    with pytest.raises(UnknownName):
        make_named("Zorp")
    with pytest.raises(BadParams):
        make_named("K", 4)
    with pytest.raises(BadParams):
        make_named("H", 9)


def test_rescale():
    u3 = rescale(make_named("U"), 3)
    assert u3.gram == Matrix([[0, 3], [3, 0]])
    assert rescale(make_named("A", 2), -1).gram == Matrix([[-2, 1], [1, -2]])
    assert rescale(make_named("[]", 1), -1).gram == Matrix([[-1]])
    with pytest.raises(ZeroScale):
        rescale(u3, 0)


def test_rescale_det_scaling():
    rng = random.Random(1)
    for name in ("A2", "D4", "E6", "U"):
        lat = from_expression(name)
        for _ in range(5):
            k = rng.choice([-3, -2, -1, 2, 3, 5])
            assert rescale(lat, k).det == k ** lat.rank * lat.det


def test_direct_sum():
    uu = direct_sum([make_named("U")] * 2)
    assert uu.rank == 4 and uu.signature == (2, 2)
    og = from_expression("U^3 + E8(-1)^2 + A2(-1)")
    assert og.rank == 24 and og.det == -3 and og.signature == (3, 21)
    lam = from_expression("U^5 + E8(-1)^2")
    assert lam.rank == 26 and lam.det == -1


def test_invariants_fields():
    og = make_named("OG10")
    inv = invariants(og)
    assert inv.determinant == -3
    assert inv.disc_group_orders == (3,)
    assert inv.p_elementary == (3, 1)
    u = invariants(make_named("U"))
    assert u.even and u.determinant == -1 and not u.disc_group_orders
    h4 = invariants(make_named("H4cubic"))
    assert not h4.even and abs(h4.determinant) == 1


def test_divisibility():
    a2 = make_named("A", 2)
    assert a2.divisibility((1, 0)) == 1
    u3 = rescale(make_named("U"), 3)
    assert u3.divisibility((1, 0)) == 3
    og = make_named("OG10")
    gen = tuple(1 if i == 22 else 0 for i in range(24))
    assert og.divisibility(gen) == 1
    with pytest.raises(ZeroVector):
        a2.divisibility((0, 0))


def test_divisibility_divides_pairings():
    rng = random.Random(9)
    og = make_named("OG10")
    v = tuple(rng.randint(-2, 2) for _ in range(24))
    if not any(v):
        v = (1,) + (0,) * 23
    d = og.divisibility(v)
    for _ in range(20):
        w = tuple(rng.randint(-4, 4) for _ in range(24))
        assert og.inner(v, w) % d == 0


def test_inner():
    u = make_named("U")
    assert u.inner((1, 0), (0, 1)) == 1
    exb = make_named("ExB")
    assert exb.inner((1, 0), (1, 0)) == 6
    from latticeforge.catalog import AY_PHI37

    ay = Lattice(AY_PHI37)
    eta = (1,) + (0,) * 8
    f1 = (0, 1) + (0,) * 7
    assert ay.inner(eta, f1) == 1


def test_expression_parser():
    assert from_expression("U(3)").gram == Matrix([[0, 3], [3, 0]])
    assert from_expression("[2] + [-2]^2").rank == 3
    assert from_expression("E6*(-3)").signature == (0, 6)
    with pytest.raises(UnknownName):
        from_expression("Q17 + U")
    with pytest.raises(UnknownName):
        from_expression("")


def test_json_roundtrip(tmp_path):
    lat = make_named("ExA")
    data = json.loads(json.dumps(lat.to_json()))
    back = Lattice.from_json(data)
    assert back.gram == lat.gram
