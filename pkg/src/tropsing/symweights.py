"""Symbolic weights over the ordered scale 1 << M_1 << M_2 << ...

A SymWeight is a rational combination of the symbols {1, M_1, ..., M_k}.
Its sign is the sign of the highest-index nonzero coefficient, which is the
arithmetic of "super-increasing" positive rationals: any positive multiple
of M_k dominates every combination of lower symbols.  Index 0 is the
rational constant.

Only Q-linear structure is provided; products of symbols never occur.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import NotInSimplex
from .simplex import SimplexContext, prec_key


class SymWeight:
    """Immutable rational combination of ordered symbols.

    Entries are stored sparsely as a tuple of (symbol index, coefficient)
    pairs sorted by decreasing index, so sign and comparison checks can
    stop at the first nonzero coefficient.
    """

    __slots__ = ("entries",)

    def __init__(self, entries=()):
        cleaned = [(int(k), Fraction(c)) for k, c in entries if c != 0]
        cleaned.sort(key=lambda kc: -kc[0])
        self.entries = tuple(cleaned)

    @classmethod
    def const(cls, value):
        return cls(((0, Fraction(value)),))

    @classmethod
    def symbol(cls, index, coeff=1):
        return cls(((index, Fraction(coeff)),))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, SymWeight):
            return value
        return cls.const(value)

    def __add__(self, other):
        other = SymWeight.coerce(other)
        acc = dict(self.entries)
        for k, c in other.entries:
            acc[k] = acc.get(k, Fraction(0)) + c
        return SymWeight(acc.items())

    __radd__ = __add__

    def __neg__(self):
        return SymWeight((k, -c) for k, c in self.entries)

    def __sub__(self, other):
        return self + (-SymWeight.coerce(other))

    def __rsub__(self, other):
        return SymWeight.coerce(other) - self

    def __mul__(self, scalar):
        return SymWeight((k, c * Fraction(scalar)) for k, c in self.entries)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Fraction(1) / Fraction(scalar))

    def sign(self) -> int:
        if not self.entries:
            return 0
        top = self.entries[0][1]
        return 1 if top > 0 else -1

    def is_zero(self) -> bool:
        return not self.entries

    def constant_part(self) -> Fraction:
        for k, c in self.entries:
            if k == 0:
                return c
        return Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, SymWeight):
            other = SymWeight.coerce(other)
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def substitute(self, values):
        """Exact numeric value when each symbol M_k is given a rational."""
        total = Fraction(0)
        for k, c in self.entries:
            total += c * (Fraction(1) if k == 0 else Fraction(values[k]))
        return total

    def __repr__(self):
        if not self.entries:
            return "0"
        parts = []
        for k, c in reversed(self.entries):
            sym = "1" if k == 0 else f"M{k}"
            parts.append(f"{c}*{sym}")
        return " + ".join(parts)


def sym_sign(w) -> int:
    """Sign in {-1, 0, 1} of a symbolic weight (rationals allowed)."""
    return SymWeight.coerce(w).sign()


class WeightFunction:
    """A weight (height) function on part of a simplex lattice.

    Values are SymWeight; plain rationals are wrapped as degenerate
    symbolic weights.  The domain is kept in the simplex order.
    """

    def __init__(self, ctx: SimplexContext, values):
        self.ctx = ctx
        vals = {}
        for p, v in values.items():
            vals[ctx.require(p)] = SymWeight.coerce(v)
        self.values = vals
        self.domain = tuple(sorted(vals, key=prec_key))

    def __getitem__(self, point):
        p = tuple(point)
        if p not in self.values:
            raise NotInSimplex(f"{p} not in the domain of this weight function")
        return self.values[p]

    def __contains__(self, point):
        return tuple(point) in self.values

    def is_rational(self) -> bool:
        return all(all(k == 0 for k, _ in v.entries) for v in self.values.values())

    def rational_values(self):
        return {p: v.constant_part() for p, v in self.values.items()}

    def to_json(self) -> str:
        entries = []
        for p in self.domain:
            coeffs = {str(k): str(c) for k, c in sorted(self.values[p].entries)}
            entries.append({"point": list(p), "value": coeffs})
        return json.dumps({"n": self.ctx.n, "d": self.ctx.d, "entries": entries})

    @classmethod
    def from_json(cls, text: str) -> "WeightFunction":
        from .simplex import lattice_points

        data = json.loads(text)
        ctx = lattice_points(data["n"], data["d"])
        values = {}
        for entry in data["entries"]:
            coeffs = [(int(k), Fraction(v)) for k, v in entry["value"].items()]
            values[tuple(entry["point"])] = SymWeight(coeffs)
        return cls(ctx, values)


def path_weights(ctx: SimplexContext, w) -> WeightFunction:
    """The weight function induced by the connected lattice path skipping w.

    The first point gets 0; crossing the i-th edge adds M_i times the phi
    gap.  The skipped point w carries no value: nothing downstream needs
    it, and leaving it out sidesteps the free-interval choice.
    """
    w = ctx.require(w)
    values = _path_values(ctx, (w,))
    return WeightFunction(ctx, values)


def _path_values(ctx: SimplexContext, skips):
    """Path weights along P(ctx.points minus skips); shared with realsigns."""
    skipset = set(skips)
    pts = [p for p in ctx.points if p not in skipset]
    if len(pts) < 1:
        raise NotInSimplex("path needs at least one remaining point")
    values = {pts[0]: SymWeight.const(0)}
    current = SymWeight.const(0)
    for i in range(len(pts) - 1):
        gap = ctx.phi_value(pts[i + 1]) - ctx.phi_value(pts[i])
        current = current + SymWeight.symbol(i + 1, gap)
        values[pts[i + 1]] = current
    return values


def super_increasing_weights(points) -> dict:
    """nu(v_k) = M_k along the order; the oracle weights for triangulations."""
    pts = sorted((tuple(p) for p in points), key=prec_key)
    return {p: SymWeight.symbol(i + 1) for i, p in enumerate(pts)}
