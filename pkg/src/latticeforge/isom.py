"""Lattice isometries: invariant/coinvariant splitting, discriminant action,
spinor norm, prime-order feasibility, and the canonical rank-26 extension."""

from dataclasses import dataclass
from fractions import Fraction

from . import discform, glue, linalg
from .errors import (
    InfiniteOrder,
    NontrivialDiscAction,
    NotAnIsometry,
)
from .lattice import direct_sum, make_named
from .linalg import Matrix

ORDER_CAP = 120  # everything in scope has prime order <= 23; the cap guards junk input


class Isometry:
    """Integer matrix preserving a Gram matrix; acts on column vectors."""

    __slots__ = ("lattice", "matrix")

    def __init__(self, lattice, matrix):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(matrix)
        matrix = matrix.to_int()
        if matrix.shape != (lattice.rank, lattice.rank):
            raise NotAnIsometry("matrix size does not match the rank")
        if matrix.T @ lattice.gram @ matrix != lattice.gram:
            raise NotAnIsometry("matrix does not preserve the Gram matrix")
        if abs(linalg.bareiss_det(matrix)) != 1:
            raise NotAnIsometry("matrix is not unimodular")
        self.lattice = lattice
        self.matrix = matrix

    def __mul__(self, other):
        return Isometry(self.lattice, self.matrix @ other.matrix)

    def apply(self, v):
        return self.matrix.apply(v)

    def is_identity(self):
        return self.matrix == Matrix.identity(self.lattice.rank)

    def __repr__(self):
        return "Isometry(%r)" % (self.lattice,)

    def to_json(self):
        return {"lattice": self.lattice.to_json(), "matrix": [list(r) for r in self.matrix.rows]}


def identity_isometry(lat):
    return Isometry(lat, Matrix.identity(lat.rank))


def neg_identity(lat):
    return Isometry(lat, -Matrix.identity(lat.rank))


def block_isometry(lats, blocks):
    """Isometry of a direct sum acting by the given blocks."""
    return Isometry(direct_sum(lats), linalg.block_diag([b.matrix if isinstance(b, Isometry) else Matrix(b) for b in blocks]))


def isometry_order(f, cap=ORDER_CAP):
    """Smallest n >= 1 with f^n = id, or None beyond the cap."""
    n = f.lattice.rank
    ident = Matrix.identity(n)
    power = f.matrix
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = power @ f.matrix
    return None


@dataclass
class InvariantPair:
    """Fixed sublattice of an isometry and its orthogonal complement."""

    invariant: glue.Sublattice
    coinvariant: glue.Sublattice
    glue_orders: tuple
    glue_a: int

    @property
    def ambient(self):
        return self.invariant.ambient


def invariant_coinvariant(f):
    """Saturated fixed sublattice and its orthogonal complement."""
    if isometry_order(f) is None:
        raise InfiniteOrder("isometry order exceeds the search cap")
    n = f.lattice.rank
    diff = f.matrix - Matrix.identity(n)
    inv_rows = linalg.integer_kernel(diff.T)
    inv = glue.Sublattice(f.lattice, inv_rows)
    coinv = glue.orthogonal_complement(inv)
    orders, a = glue.glue_group(f.lattice, inv, coinv)
    return InvariantPair(inv, coinv, orders, a)


def discriminant_action(f):
    """Induced action on the discriminant group.

    Returns (kind, images) with kind one of 'id', '-id', 'other'; images is
    the matrix of generator images in generator coordinates.
    """
    form, lifts = discform.discriminant_form(f.lattice)
    if form.is_trivial():
        return "id", Matrix(())
    mat = f.matrix.to_fraction()
    images = []
    for row in lifts.rows:
        img = mat.apply(row)
        images.append(discform.class_of(f.lattice, lifts, form, img))
    images = Matrix(images)
    k = form.ngens
    if all(form.reduce(images.row(i)) == tuple(1 if j == i else 0 for j in range(k)) for i in range(k)):
        return "id", images
    if all(form.reduce(images.row(i)) == form.reduce(tuple(-1 if j == i else 0 for j in range(k)))
           for i in range(k)):
        return "-id", images
    return "other", images


def _diagonal_basis(gram):
    """Rational basis vectors (rows) pairwise orthogonal for the form, each of
    nonzero norm; classical congruence diagonalization."""
    n = gram.nrows
    a = [[Fraction(x) for x in r] for r in gram.rows]
    basis = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]

    def add_rowcol(i, j, fct):
        basis[i] = [x + fct * y for x, y in zip(basis[i], basis[j])]
        a[i] = [x + fct * y for x, y in zip(a[i], a[j])]
        for row in a:
            row[i] += fct * row[j]

    for k in range(n):
        if a[k][k] == 0:
            fixed = False
            for j in range(k + 1, n):
                if a[j][j] != 0:
                    a[k], a[j] = a[j], a[k]
                    basis[k], basis[j] = basis[j], basis[k]
                    for row in a:
                        row[k], row[j] = row[j], row[k]
                    fixed = True
                    break
            if not fixed:
                for j in range(k + 1, n):
                    if a[k][j] != 0:
                        add_rowcol(k, j, Fraction(1))
                        fixed = True
                        break
            if not fixed:
                raise NotAnIsometry("degenerate Gram matrix")
        piv = a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                add_rowcol(i, k, -a[i][k] / piv)
    return [tuple(row) for row in basis]


def _reflection_matrix(gram, w):
    """Reflection in a non-isotropic vector w, as a rational matrix."""
    gw = gram.apply(w)
    nw = sum(a * b for a, b in zip(w, gw))
    n = gram.nrows
    return Matrix(tuple(
        tuple((1 if i == j else 0) - Fraction(2 * w[i] * gw[j], nw) for j in range(n))
        for i in range(n)
    ))


def spinor_norm(f):
    """Spinor norm with the convention +1 on reflections in vectors of
    negative square (and hence -1 on reflections in positive vectors)."""
    gram = f.lattice.gram.to_fraction()
    n = f.lattice.rank
    if n == 0:
        return 1

    def contrib(norm_val):
        return 1 if norm_val < 0 else -1

    current = f.matrix.to_fraction()
    ident = Matrix.identity(n).to_fraction()
    spin = 1
    for v in _diagonal_basis(f.lattice.gram):
        fv = current.apply(v)
        w = tuple(a - b for a, b in zip(fv, v))
        if all(x == 0 for x in w):
            continue
        gw = gram.apply(w)
        nw = sum(a * b for a, b in zip(w, gw))
        if nw != 0:
            current = _reflection_matrix(gram, w) @ current
            spin *= contrib(nw)
        else:
            u = tuple(a + b for a, b in zip(fv, v))
            nu = sum(a * b for a, b in zip(u, gram.apply(u)))
            nv = sum(a * b for a, b in zip(v, gram.apply(v)))
            current = _reflection_matrix(gram, v) @ _reflection_matrix(gram, u) @ current
            spin *= contrib(nu) * contrib(nv)
    if current != ident:
        raise NotAnIsometry("reflection factorization failed")
    return spin


# ---------------------------------------------------------------------------
# the canonical embedding of the rank-24 lattice into the rank-26 unimodular one

_CANON = None


def _canonical_extension():
    """Overlattice of OG10 + A2 along (a-b+c-d)/3 and (a+2b+c+2d)/3, where
    a, b span the A2(-1) tail of OG10 and c, d span the orthogonal A2."""
    global _CANON
    if _CANON is None:
        og = make_named("OG10")
        a2 = make_named("A", 2)
        amb = direct_sum([og, a2])
        ia, ib, ic, id_ = 22, 23, 24, 25
        g1 = [Fraction(0)] * 26
        g2 = [Fraction(0)] * 26
        for idx, val in ((ia, 1), (ib, -1), (ic, 1), (id_, -1)):
            g1[idx] = Fraction(val, 3)
        for idx, val in ((ia, 1), (ib, 2), (ic, 1), (id_, 2)):
            g2[idx] = Fraction(val, 3)
        ext = glue.overlattice(amb, [tuple(g1), tuple(g2)], require_even=True, label="Lambda")
        _CANON = (og, a2, ext)
    return _CANON


def canonical_lambda():
    """The glued rank-26 even unimodular lattice of signature (5, 21)."""
    return _canonical_extension()[2].lattice


def canonical_embedding_rows():
    """(og10_rows, a2_rows): the 24 + 2 old basis vectors in glued coordinates."""
    _, _, ext = _canonical_extension()
    return Matrix(ext.old_in_new.rows[:24]), Matrix(ext.old_in_new.rows[24:])


def extend_to_lambda(f):
    """Extend an isometry of OG10 to the rank-26 unimodular overlattice.

    Acts trivially on the orthogonal A2 when the discriminant action is the
    identity and swaps its two generators when the action is -id; any other
    discriminant action is an error.
    """
    og, a2, ext = _canonical_extension()
    if f.lattice.gram != og.gram:
        raise NotAnIsometry("expected an isometry of the rank-24 lattice in its standard basis")
    kind, _ = discriminant_action(f)
    if kind == "id":
        tail = Matrix.identity(2)
    elif kind == "-id":
        tail = Matrix([[0, 1], [1, 0]])
    else:
        raise NontrivialDiscAction("discriminant action is neither id nor -id")
    bd = linalg.block_diag([f.matrix, tail]).to_fraction()
    p_t = ext.basis.T
    m_lambda = linalg.inverse(p_t) @ bd @ p_t
    if not m_lambda.is_integral():
        raise NontrivialDiscAction("extension is not integral; unexpected glue mismatch")
    return Isometry(ext.lattice, m_lambda.to_int())


def nonsymplectic_feasible(pair, p):
    """Necessary conditions for a prime-order pair to come from a
    non-symplectic automorphism action on a hyperbolic-type ambient lattice.

    Returns (ok, report): report is a list of (condition, passed, detail).
    """
    report = []
    inv = pair.invariant
    coinv = pair.coinvariant
    ambient = pair.ambient
    rk_c = coinv.rank
    rk_i = inv.rank

    def check(name, passed, detail=""):
        report.append((name, bool(passed), detail))

    check("p_le_23", 2 <= p <= 23, "p=%d" % p)
    sig_c = coinv.lattice().signature if rk_c else (0, 0)
    sig_i = inv.lattice().signature if rk_i else (0, 0)
    check("coinvariant_signature", rk_c >= 2 and sig_c == (2, rk_c - 2), "%s" % (sig_c,))
    check("invariant_signature", rk_i >= 1 and sig_i == (1, rk_i - 1), "%s" % (sig_i,))
    check("rank_divisibility", rk_c % (p - 1) == 0 if p > 1 else False,
          "rk=%d, p-1=%d" % (rk_c, p - 1))
    co_orders = coinv.lattice().disc_group_orders() if rk_c else ()
    in_orders = inv.lattice().disc_group_orders() if rk_i else ()
    check("coinvariant_p_elementary", all(d == p for d in co_orders), "%s" % (co_orders,))
    amb_orders = ambient.disc_group_orders()

    def split_p(orders):
        """Split invariant factors into p-power parts and the rest."""
        p_part, rest = [], []
        for d in orders:
            v = 1
            while d % p == 0:
                d //= p
                v *= p
            if v > 1:
                p_part.append(v)
            if d > 1:
                rest.append(d)
        return sorted(p_part), sorted(rest)

    in_p, in_rest = split_p(in_orders)
    amb_p, amb_rest = split_p(amb_orders)
    check("invariant_p_part_elementary", all(v == p for v in in_p), "%s" % (in_orders,))
    check("invariant_offp_part_from_ambient",
          not in_rest or in_rest == amb_rest,
          "%s vs ambient %s" % (in_rest, amb_rest))
    m, rem = divmod(rk_c, p - 1)
    a = pair.glue_a
    check("glue_bound", rem == 0 and a <= m, "a=%d, m=%s" % (a, m if rem == 0 else "n/a"))
    lp_c = len(co_orders)
    lp_i = len(in_p)
    if abs(ambient.det) % p:
        check("glue_lengths_match", lp_c == lp_i, "l_p=%d vs %d" % (lp_c, lp_i))
    else:
        check("glue_lengths_match", abs(lp_c - lp_i) <= 1, "l_p=%d vs %d" % (lp_c, lp_i))
    ok = all(passed for _, passed, _ in report)
    return ok, report
