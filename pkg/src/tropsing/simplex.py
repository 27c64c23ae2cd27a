"""The dilated standard simplex, its lattice, and the ordering machinery.

Lattice points are plain tuples of n+1 nonnegative integers summing to the
degree d (homogeneous coordinates).  The order used everywhere is the
reversed lexicographic one: x comes before y when the highest coordinate in
which they differ is smaller in x.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import BadIndices, NotInSimplex

LatticePoint = tuple


def prec_key(point):
    """Sort key for the reversed lexicographic order."""
    return tuple(reversed(point))


def prec_lt(x, y) -> bool:
    return prec_key(x) < prec_key(y)


def compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


class SimplexContext:
    """Immutable bundle of the lattice of one dilated simplex.

    Holds the points in increasing order, the 1-based index map, and the
    separating functional phi with phi_i = (d+1)**i, whose values are the
    base-(d+1) digit values of the coordinate strings.
    """

    def __init__(self, n: int, d: int):
        if n < 1 or d < 1:
            raise BadIndices(f"need n >= 1 and d >= 1, got n={n}, d={d}")
        self.n = n
        self.d = d
        self.points = tuple(sorted(compositions(d, n + 1), key=prec_key))
        self._index = {p: i + 1 for i, p in enumerate(self.points)}
        self._phi = tuple((d + 1) ** i for i in range(n + 1))

    # The number of point conditions is N - 1 where N = |points| - 1.
    @property
    def N(self) -> int:
        return len(self.points) - 1

    def __contains__(self, point) -> bool:
        return tuple(point) in self._index

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"SimplexContext(n={self.n}, d={self.d})"

    def require(self, point):
        p = tuple(point)
        if p not in self._index:
            raise NotInSimplex(f"{p} is not a lattice point of {self!r}")
        return p

    def ord_index(self, point) -> int:
        """1-based position under the order."""
        return self._index[self.require(point)]

    def phi_value(self, point) -> int:
        p = self.require(point)
        return sum(c * f for c, f in zip(p, self._phi))

    def pred(self, point):
        """Last lattice point preceding `point`, or None."""
        i = self.ord_index(point)
        return self.points[i - 2] if i >= 2 else None

    def succ(self, point):
        """First lattice point succeeding `point`, or None."""
        i = self.ord_index(point)
        return self.points[i] if i < len(self.points) else None


@lru_cache(maxsize=None)
def lattice_points(n: int, d: int) -> SimplexContext:
    """All lattice points of the degree-d n-simplex, sorted."""
    return SimplexContext(n, d)


def project_parallel(v, l1: int, l2: int):
    """Merge coordinates l1..l2 into one (projection along an axis block)."""
    v = tuple(v)
    if not (0 <= l1 < l2 <= len(v) - 1):
        raise BadIndices(f"need 0 <= l1 < l2 <= n, got l1={l1}, l2={l2}")
    return v[:l1] + (sum(v[l1:l2 + 1]),) + v[l2 + 1:]


def project_typeIV(v, ell: int, u, w):
    """Affine projection used when gluing on top of a type-IV prefix.

    Maps into the lattice of the simplex of degree w_0+1 and dimension
    n-ell-1; the image may have negative entries for points far from the
    relevant fibers.
    """
    v, u, w = tuple(v), tuple(u), tuple(w)
    n = len(v) - 1
    if not (0 <= ell <= n - 2):
        raise BadIndices(f"need 0 <= ell <= n-2, got ell={ell} for n={n}")
    head = (sum(v[: ell + 1]),) + v[ell + 1: n]
    shift = (sum(u[: ell + 1]) - w[0],) + u[ell + 1: n]
    t = v[n] - w[n] + 1
    return tuple(h + t * s for h, s in zip(head, shift))
