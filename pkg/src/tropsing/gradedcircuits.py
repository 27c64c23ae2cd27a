"""Graded circuits: validation, the Mikhalkin admissibility test,
multiplicities and min-sections.

A graded circuit is a center point together with a sequence of levels.
Every level must be linearly independent and carry a unique all-nonzero
dependency modulo the span of the earlier levels; singleton levels are
redundant and stripped by canonicalization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import exactlin as xl
from .errors import (
    BadLevelIndex,
    CenterFiber,
    DependencyMissing,
    DependencyNotUnique,
    EmptyFiber,
    LevelDependent,
    NoSuchDependency,
    NotUnique,
    ZeroCoefficient,
    ZeroCoefficientInRelation,
)
from .simplex import (
    SimplexContext,
    lattice_points,
    prec_key,
    project_parallel,
    project_typeIV,
)
from .symweights import SymWeight, path_weights


@dataclass(frozen=True)
class GradedCircuit:
    ctx: SimplexContext
    center: tuple
    levels: tuple  # tuple of tuples of points, each sorted by the order

    @property
    def height(self) -> int:
        return len(self.levels)

    def all_points(self):
        pts = [self.center]
        for lv in self.levels:
            pts.extend(lv)
        return pts

    def key(self):
        return (self.center, self.levels)

    def to_json(self, tags=None) -> str:
        doc = {
            "n": self.ctx.n,
            "d": self.ctx.d,
            "center": list(self.center),
            "levels": [[list(p) for p in lv] for lv in self.levels],
        }
        if tags is not None:
            doc["tags"] = list(tags)
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "GradedCircuit":
        doc = json.loads(text)
        ctx = lattice_points(doc["n"], doc["d"])
        return make_circuit(
            ctx, doc["center"], [[tuple(p) for p in lv] for lv in doc["levels"]])


def make_circuit(ctx, center, levels) -> GradedCircuit:
    center = ctx.require(center)
    normed = tuple(
        tuple(sorted((ctx.require(p) for p in lv), key=prec_key))
        for lv in levels)
    return GradedCircuit(ctx, center, normed)


def level_relation(circuit: GradedCircuit, i: int):
    """Primitive integer dependency of level i over the earlier levels."""
    if not (1 <= i <= circuit.height):
        raise BadLevelIndex(f"level {i} of a height-{circuit.height} circuit")
    prior = [circuit.center]
    for lv in circuit.levels[: i - 1]:
        prior.extend(lv)
    level = circuit.levels[i - 1]
    try:
        return xl.dependency_mod_span(level, prior)
    except NoSuchDependency as exc:
        raise DependencyMissing(str(exc)) from exc
    except NotUnique as exc:
        raise DependencyNotUnique(str(exc)) from exc
    except ZeroCoefficient as exc:
        raise ZeroCoefficientInRelation(str(exc)) from exc


def validate(circuit: GradedCircuit) -> GradedCircuit:
    """Check all graded-circuit axioms and return the canonical form.

    Canonicalization strips trivial (singleton) levels; they must still lie
    in the span of the earlier levels to be admissible at all.
    """
    ctx = circuit.ctx
    seen = {circuit.center}
    kept = []
    for i, level in enumerate(circuit.levels, start=1):
        if len(set(level)) != len(level) or seen & set(level):
            raise LevelDependent(f"level {i} repeats an earlier point")
        if xl.rank(list(level)) != len(level):
            raise LevelDependent(f"level {i} is linearly dependent")
        level_relation(circuit, i)
        seen.update(level)
        if len(level) >= 2:
            kept.append(level)
    canonical = GradedCircuit(ctx, circuit.center, tuple(kept))
    if kept != list(circuit.levels):
        # Relations must stay valid after stripping trivial levels (they do:
        # singletons lie in the prior span), but re-check to be safe.
        for i in range(1, canonical.height + 1):
            level_relation(canonical, i)
    return canonical


def is_parallel_level(circuit: GradedCircuit, i: int) -> bool:
    """True when the level's dependency coefficients sum to zero."""
    return sum(level_relation(circuit, i)) == 0


def multiplicity(circuit: GradedCircuit) -> int:
    """Number of algebraic lifts: 2 per two-point level, 1 otherwise."""
    m = 1
    for level in circuit.levels:
        if len(level) == 2:
            m *= 2
    return m


def span_spaces(circuit: GradedCircuit):
    """Row spaces of the truncated spans Sp(C^bar_0), ..., Sp(C^bar_ht)."""
    space = xl.RowSpace([circuit.center])
    spaces = [space.copy()]
    for level in circuit.levels:
        for p in level:
            space.add(p)
        spaces.append(space.copy())
    return spaces


def _signed_decomposition(circuit: GradedCircuit, h: int, v):
    """Coefficients of v - sum alpha_x x = 0 over levels 1..h with zero sums
    on levels below h; returns [(point, signed coefficient), ...] plus v."""
    cols = []
    points = []
    for lv in circuit.levels[:h]:
        for p in lv:
            cols.append(p)
            points.append(p)
    dim = len(v)
    rows = [[Fraction(c[i]) for c in cols] for i in range(dim)]
    rhs = [Fraction(x) for x in v]
    offset = 0
    for lv in circuit.levels[: h - 1]:
        row = [Fraction(0)] * len(cols)
        for j in range(offset, offset + len(lv)):
            row[j] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(0))
        offset += len(lv)
    sol = xl.solve(rows, rhs)
    if sol is None:
        return None
    signed = [(v, Fraction(1))]
    for p, alpha in zip(points, sol):
        if alpha != 0:
            signed.append((p, -alpha))
    return signed


def admits_mikhalkin(circuit: GradedCircuit) -> bool:
    """Combinatorial test for admitting a Mikhalkin-condition function.

    No level may be parallel to the earlier ones, and for every level h and
    every lattice point v of Sp(C^bar_h) that is neither in the level nor in
    the previous span, the signed decomposition of v over levels 1..h must
    carry a positive coefficient on its last point.
    """
    circuit = validate(circuit)
    for i in range(1, circuit.height + 1):
        if is_parallel_level(circuit, i):
            return False
    spaces = span_spaces(circuit)
    for h in range(1, circuit.height + 1):
        level = set(circuit.levels[h - 1])
        for v in circuit.ctx.points:
            if v in level or v in spaces[h - 1] or v not in spaces[h]:
                continue
            signed = _signed_decomposition(circuit, h, v)
            last_point, last_coeff = max(signed, key=lambda pc: prec_key(pc[0]))
            if last_coeff < 0:
                return False
    return True


def admitted_weight(circuit: GradedCircuit):
    """A symbolic Mikhalkin-condition function admitted by the circuit.

    Path weights plus the linear correction flattening every level; callers
    may use any admitted function interchangeably for min-sections.
    """
    ctx = circuit.ctx
    nu0 = path_weights(ctx, circuit.center)
    rows = []
    rhs = []
    for level in circuit.levels:
        for a, b in zip(level, level[1:]):
            rows.append([Fraction(bi - ai) for ai, bi in zip(a, b)])
            rhs.append(nu0[a] - nu0[b])
    if rows:
        lam = xl.solve(rows, rhs)
        if lam is None:
            raise DependencyMissing("no linear functional flattens the levels")
    else:
        lam = [SymWeight.const(0)] * (ctx.n + 1)
    values = {}
    for p in nu0.domain:
        total = nu0[p]
        for li, pi in zip(lam, p):
            total = total + li * pi
        values[p] = total
    return values


@dataclass(frozen=True)
class ParallelProjection:
    """Merge a contiguous coordinate block; projection along an axis span."""

    l1: int
    l2: int

    def apply(self, point):
        return project_parallel(point, self.l1, self.l2)


@dataclass(frozen=True)
class TypeIVProjection:
    """Affine projection along a type-IV prefix with first point u."""

    ell: int
    u: tuple
    w: tuple

    def apply(self, point):
        return project_typeIV(point, self.ell, self.u, self.w)


def fiber_points(ctx: SimplexContext, projection, y):
    y = tuple(y)
    return [p for p in ctx.points if projection.apply(p) == y]


def min_section(circuit: GradedCircuit, projection, y, weights=None):
    """The unique fiber point minimizing every admitted weight function.

    ``projection`` must be a projection along the circuit; ``y`` a point of
    its image other than the projected center.
    """
    y = tuple(y)
    if projection.apply(circuit.center) == y:
        raise CenterFiber("min-sections are undefined over the center fiber")
    fiber = fiber_points(circuit.ctx, projection, y)
    if not fiber:
        raise EmptyFiber(f"no lattice points project to {y}")
    if weights is None:
        weights = admitted_weight(circuit)
    best = None
    for p in fiber:
        if best is None or (weights[p] - weights[best]).sign() < 0:
            best = p
    return best
