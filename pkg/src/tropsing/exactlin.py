"""Exact rational linear algebra.

Everything here runs over ``fractions.Fraction`` (or plain ints, which are
promoted) with full reduction at every pivot; no floating point anywhere.
Matrices are plain sequences of rows.  Sizes stay small (a few hundred rows
at most), so dense Gaussian elimination is the right tool.

The two point-level operations, :func:`circuit_relation` and
:func:`dependency_mod_span`, treat their arguments as lattice points in
homogeneous coordinates and normalize their output relations to primitive
integer vectors with a deterministic sign.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NoSuchDependency, NotACircuit, NotUnique, ZeroCoefficient

Vec = tuple


def _revkey(point):
    """Sort key realizing the reversed lexicographic order on lattice points."""
    return tuple(reversed(point))


def _to_rows(matrix):
    return [[Fraction(x) for x in row] for row in matrix]


def rref(matrix):
    """Reduced row echelon form.

    Returns ``(rows, pivot_columns)``; input is not modified.
    """
    rows = _to_rows(matrix)
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def rank(matrix) -> int:
    """Rank over the rationals via exact Gaussian elimination."""
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def primitive_vector(vec):
    """Clear denominators and divide by the gcd; returns a tuple of ints.

    The sign is left untouched; callers pick their own normalization.
    """
    fracs = [Fraction(x) for x in vec]
    if all(x == 0 for x in fracs):
        return tuple(0 for _ in fracs)
    denom_lcm = 1
    for x in fracs:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)


def kernel_basis(matrix):
    """Basis of the right kernel of ``matrix``.

    Each basis vector is cleared to primitive integer form with its first
    nonzero entry positive.  The order is the deterministic one induced by
    the reduced row-echelon pivots (one vector per free column).
    """
    if not matrix:
        return []
    n_cols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        iv = primitive_vector(v)
        first = next(x for x in iv if x != 0)
        if first < 0:
            iv = tuple(-x for x in iv)
        basis.append(iv)
    return basis


def solve(matrix, rhs):
    """One particular solution of ``matrix @ x = rhs``, or None.

    ``rhs`` entries may live in any module over the rationals (e.g. symbolic
    weights) as long as they support addition, subtraction and
    multiplication by Fraction.  Free variables are set to zero.
    """
    rows = _to_rows(matrix)
    b = list(rhs)
    n_rows, n_cols = len(rows), len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        b[r], b[pivot] = b[pivot], b[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        b[r] = b[r] * inv
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * p for a, p in zip(rows[i], rows[r])]
                b[i] = b[i] - b[r] * f
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    # Consistency: zero rows must have zero rhs.
    for i in range(r, n_rows):
        if _is_nonzero(b[i]):
            return None
    x = [_zero_like(b[0]) if b else Fraction(0) for _ in range(n_cols)]
    for i, c in enumerate(pivots):
        x[c] = b[i]
    return x


def _zero_like(value):
    return value - value


def _is_nonzero(value):
    zero = value - value
    return value != zero


def in_span(vector, spanning):
    """Exact membership of ``vector`` in the linear span of ``spanning``."""
    vecs = [list(map(Fraction, v)) for v in spanning]
    if not vecs:
        return all(Fraction(x) == 0 for x in vector)
    base = rank(vecs)
    return rank(vecs + [list(map(Fraction, vector))]) == base


def circuit_relation(points):
    """The unique primitive integer relation of a circuit.

    ``points`` must be a circuit: linearly dependent with every proper
    subset independent.  The relation is normalized so the coefficient of
    the point that is last under the reversed lexicographic order is
    positive.  Raises NotACircuit otherwise.
    """
    pts = [tuple(p) for p in points]
    if len(pts) < 2:
        raise NotACircuit("a circuit needs at least two points")
    cols = [[Fraction(p[i]) for p in pts] for i in range(len(pts[0]))]
    ker = kernel_basis(cols)
    if len(ker) != 1:
        raise NotACircuit(f"kernel dimension {len(ker)} != 1")
    rel = ker[0]
    if any(c == 0 for c in rel):
        raise NotACircuit("relation kills a point; set is not minimal")
    for j in range(len(pts)):
        sub = [[Fraction(p[i]) for k, p in enumerate(pts) if k != j]
               for i in range(len(pts[0]))]
        if rank(sub) != len(pts) - 1:
            raise NotACircuit(f"removing point {j} leaves a dependent set")
    last = max(range(len(pts)), key=lambda k: _revkey(pts[k]))
    if rel[last] < 0:
        rel = tuple(-c for c in rel)
    return rel


def dependency_mod_span(points, prior):
    """The unique all-nonzero combination of ``points`` inside Sp(prior).

    Returns the primitive integer coefficient vector, normalized so the
    coefficient of the point that comes first under the reversed
    lexicographic order is positive.  Raises NoSuchDependency, NotUnique or
    ZeroCoefficient as appropriate.
    """
    pts = [tuple(p) for p in points]
    pri = [tuple(p) for p in prior]
    if not pts:
        raise NoSuchDependency("no points given")
    dim = len(pts[0])
    # Kernel of [P | B] projected to the P block gives exactly the
    # combinations of `points` landing in the span of `prior`.
    cols = pts + pri
    stacked = [[Fraction(c[i]) for c in cols] for i in range(dim)]
    ker = kernel_basis(stacked)
    projected = [v[: len(pts)] for v in ker]
    proj_rank = rank(projected) if projected else 0
    if proj_rank == 0:
        raise NoSuchDependency("no combination lies in the prior span")
    if proj_rank >= 2:
        raise NotUnique(f"dependency space has dimension {proj_rank}")
    rel = next(v for v in (primitive_vector(p) for p in projected)
               if any(c != 0 for c in v))
    if any(c == 0 for c in rel):
        raise ZeroCoefficient("the unique dependency kills a point")
    first = min(range(len(pts)), key=lambda k: _revkey(pts[k]))
    if rel[first] < 0:
        rel = tuple(-c for c in rel)
    return rel


class RowSpace:
    """Incrementally built row space with fast exact membership tests."""

    def __init__(self, vectors=()):
        self.rows = []  # kept in reduced echelon form
        self.pivots = []
        for v in vectors:
            self.add(v)

    def _reduce(self, vector):
        v = [Fraction(x) for x in vector]
        for row, piv in zip(self.rows, self.pivots):
            if v[piv] != 0:
                f = v[piv]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, vector) -> bool:
        """Insert a vector; returns True when it enlarges the space."""
        v = self._reduce(vector)
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        self.rows = [[a - r[piv] * b for a, b in zip(r, v)] for r in self.rows]
        self.rows.append(v)
        self.pivots.append(piv)
        return True

    def __contains__(self, vector) -> bool:
        return all(x == 0 for x in self._reduce(vector))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def copy(self) -> "RowSpace":
        out = RowSpace()
        out.rows = [row[:] for row in self.rows]
        out.pivots = list(self.pivots)
        return out


# ---------------------------------------------------------------------------
# Exact linear programming (dense two-phase simplex with Bland's rule).
# ---------------------------------------------------------------------------

def lp_maximize(objective, eq_lhs, eq_rhs):
    """Maximize ``objective . x`` subject to ``eq_lhs @ x = eq_rhs``, x >= 0.

    All data rational.  Returns ``(value, x)`` at an optimal vertex, or
    None if infeasible.  Raises ValueError on an unbounded program (callers
    here always pose bounded ones).
    """
    m = len(eq_lhs)
    n = len(objective)
    A = [[Fraction(x) for x in row] for row in eq_lhs]
    b = [Fraction(x) for x in eq_rhs]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # Phase 1 tableau with one artificial variable per row.
    tab = [A[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
           + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    _simplex_iterate(tab, basis, cost)
    if sum(tab[i][-1] for i in range(m) if basis[i] >= n) != 0:
        return None
    # Drive remaining artificial variables out of the basis if possible.
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    rows = [i for i in range(m) if basis[i] < n]
    tab = [[tab[i][j] for j in range(n)] + [tab[i][-1]] for i in rows]
    basis = [basis[i] for i in rows]
    cost = [-Fraction(c) for c in objective] + [Fraction(0)]
    _simplex_iterate(tab, basis, cost)
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = tab[i][-1]
    value = sum(Fraction(objective[j]) * x[j] for j in range(n))
    return value, x


def _pivot(tab, basis, row, col):
    inv = 1 / tab[row][col]
    tab[row] = [x * inv for x in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [a - f * p for a, p in zip(tab[i], tab[row])]
    basis[row] = col


def _simplex_iterate(tab, basis, cost):
    m = len(tab)
    width = len(tab[0]) - 1
    # Reduced costs maintained implicitly: z_j - c_j via the basis.
    while True:
        reduced = []
        for j in range(width):
            zj = sum(cost[basis[i]] * tab[i][j] for i in range(m))
            reduced.append(zj - cost[j])
        enter = next((j for j in range(width) if reduced[j] > 0), None)
        if enter is None:
            return
        ratios = [(tab[i][-1] / tab[i][enter], basis[i], i)
                  for i in range(m) if tab[i][enter] > 0]
        if not ratios:
            raise ValueError("unbounded linear program")
        _, _, leave = min(ratios)
        _pivot(tab, basis, leave, enter)


def point_in_hull(x, points):
    """Exact test whether rational point ``x`` lies in conv(points)."""
    if not points:
        return False
    dim = len(x)
    lhs = [[Fraction(p[i]) for p in points] for i in range(dim)]
    rhs = [Fraction(v) for v in x]
    lhs.append([Fraction(1)] * len(points))
    rhs.append(Fraction(1))
    res = lp_maximize([Fraction(0)] * len(points), lhs, rhs)
    return res is not None


def max_step_in_hull(a, w, points):
    """max { t in [0,1] : a + t(w-a) in conv(points) }, exactly.

    Assumes ``a`` itself lies in conv(points) (callers pass a in points).
    """
    dim = len(a)
    n = len(points)
    # Variables: lambda_1..lambda_n, t, slack for t <= 1.
    lhs = []
    rhs = []
    for i in range(dim):
        row = [Fraction(p[i]) for p in points]
        row.append(Fraction(a[i]) - Fraction(w[i]))  # -t(w-a) moved left
        row.append(Fraction(0))
        lhs.append(row)
        rhs.append(Fraction(a[i]))
    lhs.append([Fraction(1)] * n + [Fraction(0), Fraction(0)])
    rhs.append(Fraction(1))
    lhs.append([Fraction(0)] * n + [Fraction(1), Fraction(1)])
    rhs.append(Fraction(1))
    objective = [Fraction(0)] * n + [Fraction(1), Fraction(0)]
    res = lp_maximize(objective, lhs, rhs)
    if res is None:
        raise ValueError("base point not in hull")
    return res[0]
