"""Overlattices, primitive embeddings, orthogonal complements, saturation.

Sublattices carry their ambient lattice and a basis given as integer rows of
coordinates.  Overlattices are built by Hermite reduction of stacked
generators over a common denominator, so bases are canonical and stable.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import discform, linalg
from .errors import (
    DegenerateComplement,
    DimensionMismatch,
    InfeasibleSignature,
    NotComplementary,
    NotIsotropic,
    NotIsotropicGraph,
)
from .lattice import Lattice
from .linalg import Matrix


class Sublattice:
    """Z-span of integer row vectors inside an ambient lattice."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient, basis):
        if not isinstance(basis, Matrix):
            basis = Matrix(basis)
        basis = basis.to_int()
        if basis.nrows and basis.ncols != ambient.rank:
            raise DimensionMismatch("basis rows must have ambient rank length")
        self.ambient = ambient
        self.basis = basis

    @property
    def rank(self):
        return self.basis.nrows

    def gram(self):
        b = self.basis
        return (b @ self.ambient.gram @ b.T) if b.nrows else Matrix(())

    def lattice(self, label=None):
        return Lattice(self.gram(), label)

    def is_primitive(self):
        return _hnf_rows(self.basis) == _hnf_rows(saturate(self).basis)

    def __repr__(self):
        return "Sublattice(rank %d of %r)" % (self.rank, self.ambient)


def _hnf_rows(m):
    if m.nrows == 0:
        return m
    h, _ = linalg.hermite_normal_form(m)
    return Matrix(tuple(r for r in h.rows if any(r)))


def span(ambient, rows):
    """Sublattice spanned by the given rows (must be independent)."""
    m = Matrix(rows)
    if m.nrows and _hnf_rows(m).nrows != m.nrows:
        raise DimensionMismatch("rows are linearly dependent")
    return Sublattice(ambient, m)


def saturate(s):
    """Smallest primitive sublattice containing s."""
    n = s.ambient.rank
    k = s.basis.nrows
    if k == 0:
        return Sublattice(s.ambient, Matrix(()))
    if k == n:
        return Sublattice(s.ambient, Matrix.identity(n))
    perp = linalg.integer_kernel(s.basis.T)
    sat = linalg.integer_kernel(perp.T)
    return Sublattice(s.ambient, sat)


def saturation_index(s):
    """Index of s inside its saturation."""
    sat = saturate(s)
    if s.rank != sat.rank:
        raise DimensionMismatch("rank drop during saturation")
    if s.rank == 0:
        return 1
    # express the rows of s in the saturation basis; the standard dot-product
    # Gram keeps this well defined even when the lattice form degenerates
    b = sat.basis.to_fraction()
    gram_std = b @ b.T
    coeffs = (s.basis.to_fraction() @ b.T) @ linalg.inverse(gram_std)
    c = coeffs.to_int()
    return abs(linalg.bareiss_det(c))


def orthogonal_complement(s):
    """Primitive sublattice of everything orthogonal to s."""
    s = saturate(s)
    n = s.ambient.rank
    if s.rank == 0:
        return Sublattice(s.ambient, Matrix.identity(n))
    m = s.ambient.gram @ s.basis.T  # n x k
    rows = linalg.integer_kernel(m)
    comp = Sublattice(s.ambient, rows)
    if comp.rank and linalg.det(comp.gram()) == 0:
        raise DegenerateComplement("induced form on the complement is degenerate")
    return comp


@dataclass
class Extension:
    """An overlattice together with coordinate bookkeeping.

    `basis` rows express the new basis in the old rational coordinates;
    `old_in_new` rows express the old basis vectors in the new basis.
    """

    lattice: Lattice
    basis: Matrix
    old_in_new: Matrix


def overlattice(lat, lifts, require_even=None, label=None):
    """Overlattice of `lat` generated by the dual vectors in `lifts`.

    `lifts` are rational coordinate rows; they must pair integrally with the
    lattice and with each other (bilinear isotropy of the subgroup they
    span).  With require_even=True their norms must also be even.
    """
    n = lat.rank
    if require_even is None:
        require_even = lat.is_even()
    den = 1
    rows = []
    for v in lifts:
        v = tuple(Fraction(x) for x in v)
        if len(v) != n:
            raise DimensionMismatch("lift of wrong length")
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append(v)
    stacked = [tuple(int(x * den) for x in r) for r in rows]
    stacked += [tuple(den if j == i else 0 for j in range(n)) for i in range(n)]
    h = _hnf_rows(Matrix(stacked))
    if h.nrows != n:
        raise DimensionMismatch("overlattice basis is not full rank")
    basis = Matrix(tuple(tuple(Fraction(x, den) for x in r) for r in h.rows))
    gram = basis @ lat.gram.to_fraction() @ basis.T
    if not gram.is_integral():
        raise NotIsotropic("generators do not pair integrally")
    gram = gram.to_int()
    if require_even and any(gram[i, i] % 2 for i in range(n)):
        raise NotIsotropic("overlattice of an even lattice fails to be even")
    old_in_new = linalg.inverse(basis.T).T
    if not old_in_new.is_integral():
        raise NotIsotropic("original lattice not contained in the overlattice")
    return Extension(Lattice(gram, label), basis, old_in_new.to_int())


def extension_index(lat, ext):
    """Index [M : L] of the original lattice in the overlattice."""
    ratio = Fraction(abs(lat.det), abs(ext.lattice.det))
    num = isqrt(ratio.numerator)
    if ratio.denominator != 1 or num * num != ratio.numerator:
        raise DimensionMismatch("index^2 should divide the determinant ratio")
    return num


@dataclass
class GlueData:
    """Gluing data for a primitive extension of left + right.

    `subgroup` rows are coefficient vectors in the generators of disc(left);
    `images` rows are their images in the generators of disc(right).
    """

    left: Lattice
    right: Lattice
    subgroup: Matrix
    images: Matrix


def primitive_extension(g, require_even=None, label=None):
    """Overlattice of left + right along the graph of the gluing map.

    Returns (extension, left_rows, right_rows); the row matrices embed the
    factors into the extension.  Raises NotIsotropicGraph when the glue
    violates integrality.
    """
    left, right = g.left, g.right
    fl, ll = discform.discriminant_form(left)
    fr, lr = discform.discriminant_form(right)
    amb = Lattice(linalg.block_diag([left.gram, right.gram]))
    nl = left.rank
    lifts = []
    for xrow, yrow in zip(g.subgroup.rows, g.images.rows):
        vx = discform.element_lift(ll, fl.reduce(xrow))
        vy = discform.element_lift(lr, fr.reduce(yrow))
        lifts.append(tuple(vx) + tuple(vy))
    try:
        ext = overlattice(amb, lifts, require_even=require_even, label=label)
    except NotIsotropic as e:
        raise NotIsotropicGraph(str(e)) from e
    left_rows = Matrix(ext.old_in_new.rows[:nl])
    right_rows = Matrix(ext.old_in_new.rows[nl:])
    return ext, left_rows, right_rows


def trivial_glue(left, right):
    return GlueData(left, right, Matrix(()), Matrix(()))


def full_anti_isometry_glues(left, right, max_results=1):
    """Glue data identifying the whole discriminant groups; anti-isometric in
    the even case, bilinear-anti-preserving in the odd case.  This is the
    standard glue for complements inside a unimodular lattice."""
    fl, _ = discform.discriminant_form(left)
    fr, _ = discform.discriminant_form(right)
    k = fl.ngens
    gens = Matrix.identity(k) if k else Matrix(())
    if fl.q is not None and fr.q is not None and left.is_even() and right.is_even():
        maps = discform.anti_isometries(fl, fr, max_results=max_results)
        if not maps:
            maps = discform.odd_glue_maps(fl, fr, max_results=max_results)
    else:
        maps = discform.odd_glue_maps(fl, fr, max_results=max_results)
    return [GlueData(left, right, gens, m) for m in maps]


def injective_anti_glues(left, right, max_results=1):
    """Glue data embedding the whole discriminant group of `left`
    anti-isometrically into disc(right); the standard glue for a pair whose
    direct sum has finite index in a lattice with small discriminant."""
    fl, _ = discform.discriminant_form(left)
    fr, _ = discform.discriminant_form(right)
    k = fl.ngens
    gens = Matrix.identity(k) if k else Matrix(())
    maps = discform._match_maps(fl, fr, -1, max_results=max_results,
                                require_onto=False, require_injective=True)
    return [GlueData(left, right, gens, m) for m in maps]


def complement_genus(host_form, host_sig, sub, glue):
    """Signature and discriminant form of the orthogonal complement of a
    primitive embedding of `sub` into a host with discriminant form
    `host_form` and signature `host_sig`.

    `glue` is (subgroup_rows, image_rows): a subgroup of disc(sub) mapped
    q-preservingly into the host form.
    """
    sig = (host_sig[0] - sub.signature[0], host_sig[1] - sub.signature[1])
    if sig[0] < 0 or sig[1] < 0:
        raise InfeasibleSignature("complement signature would be negative")
    fs, _ = discform.discriminant_form(sub)
    big = fs.neg().direct_sum(host_form)
    sub_rows, img_rows = glue
    graph = []
    for xr, yr in zip(sub_rows.rows, img_rows.rows):
        x = fs.reduce(xr)
        y = host_form.reduce(yr)
        if host_form.q_of(y) != fs.q_of(x):
            raise NotIsotropic("glue map must preserve quadratic values")
        graph.append(tuple(x) + tuple(y))
    return sig, discform.subquotient_form(big, graph)


def glue_group(ambient, s1, s2, p=None):
    """Quotient of the ambient lattice by the direct sum of two orthogonal
    primitive sublattices; returns (orders, a)."""
    if s1.rank + s2.rank != ambient.rank:
        raise NotComplementary("ranks do not sum to the ambient rank")
    for v in s1.basis.rows:
        gv = ambient.gram.apply(v)
        for w in s2.basis.rows:
            if sum(a * b for a, b in zip(w, gv)) != 0:
                raise NotComplementary("sublattices are not orthogonal")
    if s1.rank and s2.rank:
        stacked = linalg.stack([s1.basis, s2.basis])
    else:
        stacked = s1.basis if s1.rank else s2.basis
    snf = linalg.smith_normal_form(stacked)
    orders = tuple(d for d in snf.divisors if d not in (0, 1))
    a = len(orders)
    if p is not None and any(d != p for d in orders):
        raise NotComplementary("glue group is not p-elementary for p=%d" % p)
    return orders, a
