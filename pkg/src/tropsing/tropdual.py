"""Regular subdivisions, the tropical singularity criterion, lattice paths
and illuminated sets.

The regular subdivision induced by a weight function is computed by exact
gift wrapping on the lower hull of the lifted configuration.  All
comparisons of lifted heights go through the symbolic sign of SymWeight
differences, so the same code handles rational weights and the ordered
field of Mikhalkin-position weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import exactlin as xl
from .errors import (
    EmptyDomain,
    EmptySet,
    OutsideHull,
    TooFewPoints,
)
from .simplex import SimplexContext, prec_key
from .symweights import SymWeight, WeightFunction


@dataclass(frozen=True)
class Subdivision:
    """Cells of a polyhedral subdivision, each given by its domain points."""

    cells: tuple
    dim: int

    def __len__(self):
        return len(self.cells)

    def cell_sets(self):
        return {frozenset(c) for c in self.cells}

    def to_json(self) -> str:
        import json

        return json.dumps(
            {"cells": [[list(p) for p in cell] for cell in self.cells]})

    @staticmethod
    def canonical(cells, dim) -> "Subdivision":
        normed = sorted(tuple(sorted(c, key=prec_key)) for c in cells)
        return Subdivision(tuple(normed), dim)


@dataclass(frozen=True)
class LatticePathEdge:
    tail: tuple
    head: tuple


@dataclass(frozen=True)
class PathDescriptor:
    kind: str               # "connected" | "disconnected"
    w: tuple
    edges: tuple
    missing: tuple | None = None


class _Chart:
    """Exact affine coordinates on the span of a point configuration."""

    def __init__(self, points):
        self.base = points[0]
        dirs = [tuple(Fraction(a - b) for a, b in zip(p, self.base))
                for p in points]
        basis = []
        for v in dirs:
            if basis and xl.in_span(v, basis):
                continue
            if any(x != 0 for x in v):
                basis.append(v)
        self.basis = basis
        self.k = len(basis)
        cols = [[b[i] for b in basis] for i in range(len(self.base))]
        self.coords = {}
        for p, v in zip(points, dirs):
            sol = xl.solve(cols, list(v))
            self.coords[p] = tuple(sol)


class _Affine:
    """Affine function with SymWeight coefficients on chart coordinates."""

    def __init__(self, coeffs, const):
        self.coeffs = list(coeffs)
        self.const = const

    @classmethod
    def constant(cls, value, k):
        return cls([SymWeight.const(0)] * k, SymWeight.coerce(value))

    def __call__(self, x):
        total = self.const
        for a, xi in zip(self.coeffs, x):
            total = total + a * xi
        return total

    def shifted(self, t, g):
        """self + t * g for symbolic t and rational affine g=(gcoeffs, g0)."""
        gc, g0 = g
        coeffs = [a + t * gi for a, gi in zip(self.coeffs, gc)]
        return _Affine(coeffs, self.const + t * g0)


def _rational_affine_vanishing_on(chart, pts):
    """A nonzero rational affine functional vanishing on the given points.

    Returns (coeffs, const) in chart coordinates.  The points must not span
    the full chart space affinely.
    """
    rows = [list(chart.coords[p]) + [Fraction(1)] for p in pts]
    if not rows:
        rows = [[Fraction(0)] * (chart.k + 1)]
    ker = xl.kernel_basis(rows)
    for v in ker:
        if any(x != 0 for x in v[:chart.k]) or v[chart.k] != 0:
            return [Fraction(x) for x in v[:chart.k]], Fraction(v[chart.k])
    raise ValueError("no affine functional vanishes on the given set")


def _affine_dim(chart, pts):
    if len(pts) <= 1:
        return 0
    base = chart.coords[pts[0]]
    dirs = [[a - b for a, b in zip(chart.coords[p], base)] for p in pts[1:]]
    return xl.rank(dirs)


def _interpolate(chart, pts, values):
    """The affine function agreeing with the values on the given points."""
    chosen = []
    rows = []
    for p in pts:
        cand = rows + [list(chart.coords[p]) + [Fraction(1)]]
        if xl.rank(cand) > len(rows):
            rows = cand
            chosen.append(p)
        if len(rows) == chart.k + 1:
            break
    sol = xl.solve(
        rows, [values[p] for p in chosen])
    if sol is None:
        raise ValueError("interpolation failed")
    return _Affine(sol[:chart.k], sol[chart.k])


def regular_subdivision(nu, domain=None) -> Subdivision:
    """Subdivision induced by the lower convex hull of the lifted domain.

    `nu` is a WeightFunction or a dict point -> value; `domain` optionally
    restricts it.  Heights may be rational or symbolic.
    """
    if isinstance(nu, WeightFunction):
        values = dict(nu.values)
    else:
        values = {tuple(p): SymWeight.coerce(v) for p, v in nu.items()}
    if domain is not None:
        domain = [tuple(p) for p in domain]
        values = {p: values[p] for p in domain}
    points = sorted(values, key=prec_key)
    if not points:
        raise EmptyDomain("weight function with empty domain")
    chart = _Chart(points)
    k = chart.k
    if k == 0:
        return Subdivision.canonical([points], 0)

    def tight(func):
        return tuple(p for p in points if (values[p] - func(p_coord(p))).is_zero())

    def p_coord(p):
        return chart.coords[p]

    # Initial maximal cell: sweep a supporting affine function up from the
    # constant at the minimum height until the tight set spans the chart.
    min_val = None
    for p in points:
        if min_val is None or (values[p] - min_val).sign() < 0:
            min_val = values[p]
    func = _Affine.constant(min_val, k)
    cell = tight(func)
    while _affine_dim(chart, cell) < k:
        g = _rational_affine_vanishing_on(chart, cell)
        if not any(_g_val(g, p_coord(p)) > 0 for p in points):
            g = ([-c for c in g[0]], -g[1])
        t_star = None
        for p in points:
            gv = _g_val(g, p_coord(p))
            if gv > 0:
                ratio = (values[p] - func(p_coord(p))) / gv
                if t_star is None or (ratio - t_star).sign() < 0:
                    t_star = ratio
        func = func.shifted(t_star, g)
        cell = tight(func)

    cells = {}
    queue = [(cell, func)]
    cells[frozenset(cell)] = cell
    while queue:
        cell, func = queue.pop()
        for facet, g in _cell_facets(chart, cell):
            # Pivot the supporting function around the facet: it leaves the
            # rest of the cell and picks up the neighbor across the ridge.
            t_star = None
            for p in points:
                gv = _g_val(g, chart.coords[p])
                if gv > 0:
                    ratio = (values[p] - func(chart.coords[p])) / gv
                    if t_star is None or (ratio - t_star).sign() < 0:
                        t_star = ratio
            if t_star is None:
                continue  # ridge on the boundary of the hull
            new_func = func.shifted(t_star, g)
            new_cell = tight(new_func)
            key = frozenset(new_cell)
            if key not in cells:
                cells[key] = new_cell
                queue.append((new_cell, new_func))
    return Subdivision.canonical(cells.values(), k)


def _g_val(g, x):
    gc, g0 = g
    return sum(a * b for a, b in zip(gc, x)) + g0


def _cell_facets(chart, cell):
    """Facets of conv(cell) with outward rational affine functionals.

    Yields (facet points, g) where g vanishes on the facet and is negative
    on the rest of the cell.
    """
    k = chart.k
    seen = set()
    if len(cell) < k + 1:
        return
    for sub in combinations(cell, k):
        if _affine_dim(chart, sub) != k - 1:
            continue
        try:
            g = _rational_affine_vanishing_on(chart, sub)
        except ValueError:
            continue
        vals = [_g_val(g, chart.coords[p]) for p in cell]
        if all(v <= 0 for v in vals):
            pass
        elif all(v >= 0 for v in vals):
            g = ([-c for c in g[0]], -g[1])
            vals = [-v for v in vals]
        else:
            continue
        facet = tuple(p for p, v in zip(cell, vals) if v == 0)
        key = frozenset(facet)
        if key in seen or len(facet) == len(cell):
            continue
        seen.add(key)
        yield facet, g


def hull_certificate(nu, cell):
    """Exact check that `cell` is a lower-hull face of the lifted `nu`.

    Returns True when some affine function matches nu on the cell and stays
    strictly below it on the rest of the domain.
    """
    values = dict(nu.values) if isinstance(nu, WeightFunction) else {
        tuple(p): SymWeight.coerce(v) for p, v in nu.items()}
    points = sorted(values, key=prec_key)
    chart = _Chart(points)
    func = _interpolate(chart, list(cell), values)
    cellset = set(cell)
    for p in points:
        diff = values[p] - func(chart.coords[p])
        if p in cellset:
            if not diff.is_zero():
                return False
        elif diff.sign() <= 0:
            return False
    return True


def normalized_volume(points) -> int:
    """Lattice-normalized volume of conv(points) (unimodular simplex = 1)."""
    pts = sorted({tuple(p) for p in points})
    total = 0
    for simplex in _pull_triangulate(tuple(pts)):
        edges = [[a - b for a, b in zip(p, simplex[0])] for p in simplex[1:]]
        total += _lattice_index(edges)
    return total


def simplex_is_unimodular(points) -> bool:
    """True when the points are a lattice simplex of normalized volume 1."""
    pts = [tuple(p) for p in points]
    edges = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    return xl.rank(edges) == len(pts) - 1 and _lattice_index(edges) == 1


def _pull_triangulate(pts):
    """Triangulation of conv(pts) by pulling from the first point."""
    chart = _Chart(list(pts))
    k = chart.k
    if k == 0:
        return [pts[:1]]
    if len(pts) == k + 1:
        return [pts]
    apex = pts[0]
    simplices = []
    for facet, g in _cell_facets(chart, tuple(pts)):
        if _g_val(g, chart.coords[apex]) == 0:
            continue
        for sub in _pull_triangulate(tuple(sorted(facet))):
            simplices.append(sub + (apex,))
    return simplices


def _lattice_index(int_rows) -> int:
    """Index of the sublattice spanned by integer rows inside its saturation.

    Equals the normalized volume of the simplex spanned by the rows and the
    origin; computed as the product of Smith normal form divisors.
    """
    rows = [list(map(int, r)) for r in int_rows if any(r)]
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    det = 1
    top = 0
    while top < m:
        # Locate the smallest-magnitude nonzero entry in the remaining block.
        best = None
        for i in range(top, m):
            for j in range(n):
                v = rows[i][j]
                if v != 0 and (best is None or abs(v) < abs(rows[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            return 0  # rank deficient: degenerate simplex
        bi, bj = best
        rows[top], rows[bi] = rows[bi], rows[top]
        clean = True
        for i in range(top + 1, m):
            if rows[i][bj] != 0:
                q = rows[i][bj] // rows[top][bj]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[top])]
                if rows[i][bj] != 0:
                    clean = False
        if not clean:
            continue
        # Column reduction: subtract multiples of column bj from the others
        # within the remaining rows (unimodular column operations).
        pivot = rows[top][bj]
        for j in range(n):
            if j != bj and rows[top][j] != 0:
                q = rows[top][j] // pivot
                for i in range(top, m):
                    rows[i][j] -= q * rows[i][bj]
        if any(rows[top][j] != 0 for j in range(n) if j != bj):
            continue
        det *= abs(pivot)
        # Drop the pivot column's residue from the block below.
        for i in range(top + 1, m):
            rows[i][bj] = 0
        top += 1
    return det


def legendre_value(nu: WeightFunction, x) -> Fraction:
    """Value of the convex piecewise-linear Legendre dual at rational x."""
    if not nu.is_rational():
        raise ValueError("legendre_value needs rational weights")
    values = nu.rational_values()
    points = list(nu.domain)
    xs = [Fraction(v) for v in x]
    sub = regular_subdivision(nu)
    for cell in sub.cells:
        if xl.point_in_hull(xs, cell):
            lam = _hull_coordinates(xs, cell)
            return sum(l * values[p] for l, p in zip(lam, cell))
    raise OutsideHull(f"{x} is outside the hull of the domain")


def _hull_coordinates(x, points):
    dim = len(x)
    lhs = [[Fraction(p[i]) for p in points] for i in range(dim)]
    rhs = [Fraction(v) for v in x]
    lhs.append([Fraction(1)] * len(points))
    rhs.append(Fraction(1))
    res = xl.lp_maximize([Fraction(0)] * len(points), lhs, rhs)
    if res is None:
        raise OutsideHull(f"{x} not in hull")
    return res[1]


def _levels_ascending(values):
    """Points grouped by equal value, in increasing order of value."""
    groups = {}
    for p, v in values.items():
        groups.setdefault(v, []).append(p)
    keys = list(groups)
    keys.sort()
    return [sorted(groups[key], key=prec_key) for key in keys]


def is_singular_at_origin(nu: WeightFunction) -> bool:
    """Tropical singularity of the hypersurface of nu at the origin.

    True iff every level of nu carries a dependency, modulo the span of all
    lower levels, that uses every point of the level with a nonzero
    coefficient.  Requires nu defined on the full simplex lattice.
    """
    ctx = nu.ctx
    if set(nu.domain) != set(ctx.points):
        raise EmptyDomain("singularity test needs weights on every point")
    levels = _levels_ascending(nu.values)
    prior = []
    for level in levels:
        basis = _dependency_space(level, prior)
        if not basis:
            return False
        for i in range(len(level)):
            if all(v[i] == 0 for v in basis):
                return False
        prior.extend(level)
    return True


def _dependency_space(points, prior):
    """Basis of {alpha : sum alpha_x x in Sp(prior)}, row-reduced."""
    pts = [tuple(p) for p in points]
    pri = [tuple(p) for p in prior]
    dim = len(pts[0])
    cols = pts + pri
    stacked = [[Fraction(c[i]) for c in cols] for i in range(dim)]
    ker = xl.kernel_basis(stacked)
    projected = [v[: len(pts)] for v in ker]
    reduced, pivots = xl.rref(projected) if projected else ([], [])
    return [xl.primitive_vector(reduced[i]) for i in range(len(pivots))]


def geometric_type_check(nu: WeightFunction) -> str:
    """not_singular / singular_non_maximal / singular_maximal."""
    if not is_singular_at_origin(nu):
        return "not_singular"
    ctx = nu.ctx
    distinct = len({v for v in nu.values.values()})
    if distinct == len(ctx.points) - ctx.n - 1:
        return "singular_maximal"
    return "singular_non_maximal"


def complete_path(points):
    """Consecutive edges of the complete lattice path on the given points."""
    pts = sorted((tuple(p) for p in points), key=prec_key)
    if len(pts) < 2:
        raise TooFewPoints("a path needs at least two points")
    return [LatticePathEdge(a, b) for a, b in zip(pts, pts[1:])]


def pencil_paths(ctx: SimplexContext):
    """All lattice paths of the pencil: connected ones (one per skipped
    point) and disconnected ones (one per removable edge)."""
    out = []
    for w in ctx.points:
        rest = [p for p in ctx.points if p != w]
        out.append(PathDescriptor(
            kind="connected", w=w, edges=tuple(complete_path(rest))))
    full = complete_path(ctx.points)
    for w in ctx.points[1:]:
        pr = ctx.pred(w)
        edges = tuple(e for e in full if not (e.tail == pr and e.head == w))
        out.append(PathDescriptor(
            kind="disconnected", w=w, edges=edges, missing=(pr, w)))
    return out


def illuminated_set(w, A):
    """Points a of A whose segment [a, w] meets conv(A) only in a."""
    pts = [tuple(p) for p in A]
    if not pts:
        raise EmptySet("illuminated set of an empty configuration")
    w = tuple(w)
    out = []
    for a in pts:
        if a == w:
            out.append(a)
            continue
        t_star = xl.max_step_in_hull(a, w, pts)
        if t_star == 0:
            out.append(a)
    return sorted(set(out), key=prec_key)
