"""Exhaustive vector enumeration on definite lattices.

Fincke-Pohst branch and bound over an exact LDL-type decomposition of the
Gram matrix; all bounds are computed with integer square roots of rational
numbers, never floating point.  Negative definite inputs are globally negated
before enumeration.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import DegenerateForm, IndefiniteLattice, RankTooLarge
from .lattice import Lattice
from .linalg import Matrix

RANK_CAP = 16
ISOM_RANK_CAP = 14


def _flip_to_positive(lat):
    """(positive definite lattice, sign) for a definite input."""
    if lat.rank == 0:
        return lat, 1
    p, m = lat.signature
    if m == 0:
        return lat, 1
    if p == 0:
        return Lattice(-lat.gram, lat.label), -1
    raise IndefiniteLattice("lattice of signature %s is indefinite" % ((p, m),))


def _ldl(gram):
    """Q(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2 for positive definite G."""
    n = gram.nrows
    a = [[Fraction(gram[i, j]) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise DegenerateForm("matrix is not positive definite")
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                a[j][k] -= a[i][j] * a[i][k] / d[i]
                a[k][j] = a[j][k]
    return d, u


def _floor_plus_sqrt(c, b):
    """floor(c + sqrt(b)) for Fraction c and Fraction b >= 0."""
    root = isqrt(b.numerator // b.denominator)
    g = (c.numerator // c.denominator) + root

    def le(k):  # k <= c + sqrt(b)
        t = k - c
        return t <= 0 or t * t <= b

    while le(g + 1):
        g += 1
    while not le(g):
        g -= 1
    return g


def _enumerate_upto(gram, bound):
    """Yield all nonzero integer vectors with 0 < Q(x) <= bound, positive
    definite Gram; both v and -v are produced."""
    n = gram.nrows
    if n == 0 or bound <= 0:
        return
    d, u = _ldl(gram)
    bound = Fraction(bound)
    x = [0] * n

    def rec(i, remaining):
        if i < 0:
            if any(x):
                yield tuple(x)
            return
        c = sum((u[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        hi = _floor_plus_sqrt(-c, remaining / d[i])
        lo = -_floor_plus_sqrt(c, remaining / d[i])
        for xi in range(lo, hi + 1):
            x[i] = xi
            t = d[i] * (xi + c) ** 2
            yield from rec(i - 1, remaining - t)
        x[i] = 0

    yield from rec(n - 1, bound)


def vectors_of_norm(lat, norm):
    """All vectors of the given positive norm in a definite lattice (negated
    transparently when negative definite)."""
    pos, _sign = _flip_to_positive(lat)
    if pos.rank == 0:
        return []
    out = [v for v in _enumerate_upto(pos.gram, norm) if pos.norm(v) == norm]
    out.sort()
    return out


def vectors_up_to(lat, max_norm):
    """Nonzero vectors bucketed by norm, one enumeration pass."""
    pos, _sign = _flip_to_positive(lat)
    buckets = {m: [] for m in range(1, max_norm + 1)}
    if pos.rank == 0:
        return buckets
    for v in _enumerate_upto(pos.gram, max_norm):
        buckets[pos.norm(v)].append(v)
    for m in buckets:
        buckets[m].sort()
    return buckets


@dataclass
class EnumQuery:
    lattice: Lattice
    target_norm: int
    dot_constraints: list = field(default_factory=list)  # (vector, required value)
    divisibility_filter: int | None = None


def count_vectors(query, want_list=False, rank_cap=RANK_CAP):
    """Exact count of vectors with (v, v) = target and all constraints.

    The norm is interpreted on the positive definite model: a negative
    definite lattice is negated first, and dot constraints refer to the
    original Gram matrix.
    """
    lat = query.lattice
    if lat.rank > rank_cap:
        raise RankTooLarge("rank %d exceeds the enumeration cap %d" % (lat.rank, rank_cap))
    pos, sign = _flip_to_positive(lat)
    target = abs(query.target_norm)
    vecs = []
    count = 0
    for v in _enumerate_upto(pos.gram, target) if pos.rank else ():
        if pos.norm(v) != target:
            continue
        ok = True
        for w, val in query.dot_constraints:
            if lat.inner(v, w) != val:
                ok = False
                break
        if ok and query.divisibility_filter is not None:
            if lat.divisibility(v) != query.divisibility_filter:
                ok = False
        if ok:
            count += 1
            if want_list:
                vecs.append(v)
    if want_list:
        vecs.sort()
        return count, vecs
    return count


def minimum(lat, rank_cap=RANK_CAP):
    """Minimal nonzero |norm| of a definite lattice."""
    if lat.rank == 0:
        raise DegenerateForm("minimum of the rank-zero lattice")
    if lat.rank > rank_cap:
        raise RankTooLarge("rank %d exceeds the enumeration cap %d" % (lat.rank, rank_cap))
    pos, _ = _flip_to_positive(lat)
    bound = 1
    while True:
        best = None
        for v in _enumerate_upto(pos.gram, bound):
            nv = pos.norm(v)
            if best is None or nv < best:
                best = nv
        if best is not None:
            return best
        bound *= 2


def has_square_one(lat, rank_cap=RANK_CAP):
    """True when some vector has (v, v) = 1 (after sign normalization)."""
    if lat.rank == 0:
        return False
    return count_vectors(EnumQuery(lat, 1), rank_cap=rank_cap) > 0


def root_report(lat, ambient=None, rank_cap=RANK_CAP):
    """(number of short roots, number of long roots).

    Short root: v^2 = 2 with divisibility 1; long root: v^2 = 6 with
    divisibility 3.  Divisibility is measured in `ambient` (a Sublattice
    embedding this lattice) when given, else in the lattice itself.  Negative
    definite lattices are negated first.
    """
    if lat.rank == 0:
        return (0, 0)

    def div_of(v):
        if ambient is None:
            return lat.divisibility(v)
        amb_vec = ambient.basis.T.apply(v)
        return ambient.ambient.divisibility(amb_vec)

    short = sum(1 for v in vectors_of_norm(lat, 2) if div_of(v) == 1)
    long_ = sum(1 for v in vectors_of_norm(lat, 6) if div_of(v) == 3)
    return (short, long_)


def wall_class(square, div):
    """Classify a (square, divisibility) pair against the numerical wall and
    prime-exceptional sets of the rank-24 hyperbolic-type lattice."""
    if square == -2 or (square == -6 and div == 3):
        return "pex"
    if square == -4 or (square == -24 and div == 3):
        return "wall"
    return "neither"


def definite_isometric(l1, l2, rank_cap=ISOM_RANK_CAP):
    """Explicit isometry witness between definite lattices, or None.

    Searches images of the basis of l1 among the vectors of l2 of matching
    norm, pruned by pairwise inner products; a complete failed search proves
    non-isometry.  The returned matrix W has columns = images and satisfies
    W^T G2 W = G1.
    """
    if l1.rank != l2.rank:
        return None
    if l1.rank == 0:
        return Matrix(())
    if l1.rank > rank_cap:
        raise RankTooLarge("rank %d exceeds the isometry-search cap %d" % (l1.rank, rank_cap))
    pos1, sign1 = _flip_to_positive(l1)
    pos2, sign2 = _flip_to_positive(l2)
    if sign1 != sign2 or l1.det != l2.det or l1.is_even() != l2.is_even():
        return None
    n = pos1.rank
    basis_norms = [pos1.gram[i, i] for i in range(n)]
    order = sorted(range(n), key=lambda i: -basis_norms[i])
    pools = {}
    for nv in set(basis_norms):
        pools[nv] = vectors_of_norm(pos2, nv)
        if len(pools[nv]) != count_vectors(EnumQuery(pos1, nv), rank_cap=max(rank_cap, RANK_CAP)):
            return None
    chosen = [None] * n

    def rec(k):
        if k == n:
            return True
        i = order[k]
        for cand in pools[basis_norms[i]]:
            ok = True
            for kk in range(k):
                j = order[kk]
                if pos2.inner(cand, chosen[j]) != pos1.gram[i, j]:
                    ok = False
                    break
            if ok:
                chosen[i] = cand
                if rec(k + 1):
                    return True
                chosen[i] = None
        return False

    if not rec(0):
        return None
    w = Matrix(chosen).T
    assert w.T @ l2.gram @ w == l1.gram
    return w
