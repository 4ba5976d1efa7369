"""Shared helpers: independent brute-force oracles kept free of the library's
enumeration path."""

import itertools
from fractions import Fraction
from math import isqrt

import pytest

from latticeforge import linalg


def box_vectors(gram, norm):
    """All vectors of the given norm via plain box enumeration.

    Coordinate bounds come from the dual Gram diagonal: |x_i| <= sqrt(norm *
    (G^-1)_ii) by Cauchy-Schwarz in the positive definite form.  Independent
    of the branch-and-bound enumerator.
    """
    n = gram.nrows
    inv = linalg.inverse(gram)
    bounds = []
    for i in range(n):
        b = Fraction(norm) * inv[i, i]
        bounds.append(isqrt(b.numerator // b.denominator) + 1)
    out = []
    for x in itertools.product(*(range(-b, b + 1) for b in bounds)):
        if any(x):
            gx = gram.apply(x)
            if sum(a * c for a, c in zip(x, gx)) == norm:
                out.append(x)
    return sorted(out)


def box_count(gram, norm):
    return len(box_vectors(gram, norm))


def box_minimum(lat, coeff_bound=5):
    """Minimal nonzero |norm| over a +-coeff_bound coordinate box."""
    g = lat.gram
    n = g.nrows
    best = None
    for x in itertools.product(*(range(-coeff_bound, coeff_bound + 1) for _ in range(n))):
        if any(x):
            v = abs(lat.norm(x))
            if best is None or v < best:
                best = v
    return best


@pytest.fixture(scope="session")
def named():
    from latticeforge.lattice import make_named

    return make_named
