"""Integral lattices: Gram matrices, named constructors, first-order invariants.

A lattice is a free Z-module with a nondegenerate symmetric integer Gram
matrix.  Vectors are coordinate tuples in the fixed basis.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import linalg
from .errors import (
    BadParams,
    DegenerateForm,
    DimensionMismatch,
    UnknownName,
    ZeroScale,
    ZeroVector,
)
from .linalg import Matrix


class Lattice:
    """Free Z-module of finite rank with a symmetric integer bilinear form."""

    __slots__ = ("gram", "label", "_sig", "_det", "_snf")

    def __init__(self, gram, label=None):
        if not isinstance(gram, Matrix):
            gram = Matrix(gram)
        gram = gram.to_int()
        if not gram.is_symmetric():
            raise DegenerateForm("Gram matrix not symmetric")
        self.gram = gram
        self.label = label
        self._sig = None
        self._det = None
        self._snf = None

    @property
    def rank(self):
        return self.gram.nrows

    @property
    def det(self):
        if self._det is None:
            self._det = linalg.bareiss_det(self.gram)
        return self._det

    @property
    def signature(self):
        if self._sig is None:
            self._sig = linalg.rational_signature(self.gram)
        return self._sig

    def snf(self):
        if self._snf is None:
            self._snf = linalg.smith_normal_form(self.gram)
        return self._snf

    def is_even(self):
        return all(self.gram[i, i] % 2 == 0 for i in range(self.rank))

    def is_unimodular(self):
        return abs(self.det) == 1

    def is_definite(self):
        p, m = self.signature
        return p == 0 or m == 0

    def is_positive_definite(self):
        return self.signature[1] == 0

    def is_negative_definite(self):
        return self.signature[0] == 0

    def disc_group_orders(self):
        """Invariant factors (> 1) of the discriminant group."""
        return tuple(d for d in self.snf().divisors if d not in (0, 1))

    def inner(self, v, w):
        if len(v) != self.rank or len(w) != self.rank:
            raise DimensionMismatch("vector length vs rank %d" % self.rank)
        gw = self.gram.apply(w)
        return sum(a * b for a, b in zip(v, gw))

    def norm(self, v):
        return self.inner(v, v)

    def divisibility(self, v):
        """Positive generator of the ideal {(v, x) : x in the lattice}."""
        if all(c == 0 for c in v):
            raise ZeroVector("divisibility of the zero vector")
        return gcd(*self.gram.apply(v)) if self.rank > 1 else abs(self.gram.apply(v)[0])

    def relabel(self, label):
        return Lattice(self.gram, label)

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return "Lattice(%s, rank=%d)" % (self.label or "?", self.rank)

    def to_json(self):
        return {"name": self.label, "gram": [list(r) for r in self.gram.rows]}

    @classmethod
    def from_json(cls, data):
        return cls(Matrix(data["gram"]), data.get("name"))


@dataclass(frozen=True)
class LatticeInvariants:
    rank: int
    signature: tuple
    determinant: int
    even: bool
    disc_group_orders: tuple
    p_elementary: tuple | None  # (p, a) when the discriminant group is (Z/p)^a
    delta: int | None  # only for even 2-elementary lattices


def rescale(lat, k):
    """Same module with the bilinear form multiplied by k."""
    if k == 0:
        raise ZeroScale("rescale by zero")
    name = None
    if lat.label:
        name = "%s(%d)" % (lat.label, k) if k != 1 else lat.label
    return Lattice(lat.gram.scale(k), name)


def direct_sum(lats):
    """Orthogonal direct sum; Gram is block diagonal."""
    lats = list(lats)
    if not lats:
        raise BadParams("direct sum of an empty list")
    label = " + ".join(l.label or "?" for l in lats) if len(lats) > 1 else lats[0].label
    return Lattice(linalg.block_diag([l.gram for l in lats]), label)


def invariants(lat):
    """Rank, signature, determinant, parity, discriminant data."""
    orders = lat.disc_group_orders()
    p_elem = None
    if orders and all(d == orders[0] for d in orders) and _is_prime(orders[0]):
        p_elem = (orders[0], len(orders))
    delta = None
    if lat.is_even() and (not orders or p_elem and p_elem[0] == 2):
        from .discform import delta_invariant, discriminant_form

        delta = delta_invariant(discriminant_form(lat)[0])
    return LatticeInvariants(
        rank=lat.rank,
        signature=lat.signature,
        determinant=lat.det,
        even=lat.is_even(),
        disc_group_orders=orders,
        p_elementary=p_elem,
        delta=delta,
    )


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# named lattices


def _path_gram(n, forks=()):
    """Positive definite Gram of a simply-laced diagram: a path on n nodes
    plus extra edges given as (i, j) pairs."""
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    for i in range(n - 1):
        g[i][i + 1] = g[i + 1][i] = -1
    for i, j in forks:
        g[i][j] = g[j][i] = -1
    return Matrix(g)


def _gram_A(n):
    return _path_gram(n)


def _gram_D(n):
    if n < 4:
        raise BadParams("D_n needs n >= 4")
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    for i in range(n - 2):
        g[i][i + 1] = g[i + 1][i] = -1
    g[n - 3][n - 1] = g[n - 1][n - 3] = -1
    return Matrix(g)


def _gram_E(n):
    if n not in (6, 7, 8):
        raise BadParams("E_n needs n in {6, 7, 8}")
    # path 0-1-...-(n-2), extra node (n-1) attached to node 2
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    for i in range(n - 2):
        g[i][i + 1] = g[i + 1][i] = -1
    g[2][n - 1] = g[n - 1][2] = -1
    return Matrix(g)


E6_STAR_3 = Matrix([
    [4, 2, -1, 2, -1, 1],
    [2, 4, 1, 1, -2, 2],
    [-1, 1, 4, 1, -2, -1],
    [2, 1, 1, 4, -2, -1],
    [-1, -2, -2, -2, 4, -1],
    [1, 2, -1, -1, -1, 4],
])

L17 = Matrix([
    [2, 1, 0, 1],
    [1, 2, 0, 0],
    [0, 0, 2, -1],
    [1, 0, -1, 4],
])

N69 = Matrix([[6, 3], [3, -10]])
N15 = Matrix([[4, -1], [-1, 4]])
EX_A = Matrix([[12, 1], [1, 2]])
EX_B = Matrix([[6, 1], [1, 4]])


def make_named(name, *params):
    """Construct a lattice from its conventional name.

    Supported: U, A<n>, D<n>, E<n>, [k] rank-one, K<p>, H<p> (odd prime p),
    E6*(3), L17, N69, N15, ExA, ExB, and the composite lattices OG10, Lambda,
    F, K3, H4cubic.
    """
    key = name.strip()
    if key == "U":
        return Lattice(Matrix([[0, 1], [1, 0]]), "U")
    if key in ("E6*", "E6star", "E6star3", "E6*(3)"):
        return Lattice(E6_STAR_3, "E6*(3)")
    if key == "L17":
        return Lattice(L17, "L17")
    if key == "N69":
        return Lattice(N69, "N69")
    if key == "N15":
        return Lattice(N15, "N15")
    if key == "ExA":
        return Lattice(EX_A, "ExA")
    if key == "ExB":
        return Lattice(EX_B, "ExB")
    if key == "OG10":
        return direct_sum([make_named("U")] * 3
                          + [rescale(make_named("E", 8), -1)] * 2
                          + [rescale(make_named("A", 2), -1)]).relabel("OG10")
    if key == "Lambda":
        return direct_sum([make_named("U")] * 5
                          + [rescale(make_named("E", 8), -1)] * 2).relabel("Lambda")
    if key == "F":
        return direct_sum([make_named("U")] * 2 + [make_named("E", 8)] * 2
                          + [make_named("A", 2)]).relabel("F")
    if key == "K3":
        return direct_sum([make_named("U")] * 3
                          + [rescale(make_named("E", 8), -1)] * 2).relabel("K3")
    if key == "H4cubic":
        # middle cohomology lattice of a cubic fourfold: odd unimodular (21, 2)
        return Lattice(Matrix.diagonal([1] * 21 + [-1] * 2), "H4cubic")

    if params:
        n = params[0]
        if key == "A":
            return Lattice(_gram_A(n), "A%d" % n)
        if key == "D":
            return Lattice(_gram_D(n), "D%d" % n)
        if key == "E":
            return Lattice(_gram_E(n), "E%d" % n)
        if key == "K":
            p = n
            if p < 3 or p % 2 == 0 or not _is_prime(p):
                raise BadParams("K_p needs an odd prime, got %r" % (p,))
            return Lattice(Matrix([[-(p + 1) // 2, 1], [1, -2]]), "K%d" % p)
        if key in ("H", "h"):
            p = n
            if p < 3 or p % 2 == 0 or not _is_prime(p):
                raise BadParams("h_p needs an odd prime, got %r" % (p,))
            return Lattice(Matrix([[(p - 1) // 2, 1], [1, -2]]), "h%d" % p)
        if key == "[]":
            if n == 0:
                raise BadParams("rank-one lattice [0] is degenerate")
            return Lattice(Matrix([[n]]), "[%d]" % n)
    raise UnknownName("unknown lattice name %r" % (name,))


_TERM_RE = re.compile(
    r"""^\s*
    (?P<base>\[[+-]?\d+\]|[A-Za-z][A-Za-z0-9*]*)
    (?:\((?P<twist>-?\d+)\))?
    (?:\^(?P<power>\d+))?
    \s*$""",
    re.VERBOSE,
)


@lru_cache(maxsize=None)
def from_expression(expr):
    """Parse a lattice expression like 'U + U(3) + A2(-1)^5 + [2]'.

    Terms are named lattices with an optional integer rescaling in
    parentheses and an optional repetition power.
    """
    parts = expr.replace("⊕", "+").split("+")
    if not parts or not expr.strip():
        raise UnknownName("empty lattice expression")
    summands = []
    for part in parts:
        m = _TERM_RE.match(part)
        if not m:
            raise UnknownName("bad lattice term %r" % part.strip())
        base, twist, power = m.group("base"), m.group("twist"), m.group("power")
        if base == "E6*":
            # E6*(3) is the integral matrix itself; E6*(-3) is its negation
            if twist not in ("3", "-3"):
                raise UnknownName("E6* occurs only as E6*(3) or E6*(-3)")
            lat = make_named("E6*(3)")
            if twist == "-3":
                lat = rescale(lat, -1).relabel("E6*(-3)")
            twist = None
        elif base.startswith("["):
            lat = make_named("[]", int(base[1:-1]))
        elif base in ("OG10", "Lambda", "F", "K3", "H4cubic", "L17", "N69",
                      "N15", "ExA", "ExB", "U"):
            # composite names win over the ADEKH-family pattern; the rank-two
            # lattice K_3 is A2(-1) anyway, so nothing is lost
            lat = make_named(base)
        else:
            mm = re.fullmatch(r"([ADEKH])(\d+)", base)
            if mm:
                lat = make_named(mm.group(1), int(mm.group(2)))
            elif re.fullmatch(r"h(\d+)", base):
                lat = make_named("H", int(base[1:]))
            else:
                lat = make_named(base)
        if twist is not None:
            lat = rescale(lat, int(twist))
        summands.extend([lat] * (int(power) if power else 1))
    out = direct_sum(summands) if summands[1:] else summands[0]
    return out.relabel(expr.strip())


ZERO = Lattice(Matrix(()), "0")


def zero_lattice():
    """The rank-zero lattice."""
    return ZERO
