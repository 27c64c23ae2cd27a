from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tropsing.errors import NotInSimplex
from tropsing.simplex import lattice_points, prec_key
from tropsing.symweights import (
    SymWeight,
    WeightFunction,
    path_weights,
    super_increasing_weights,
    sym_sign,
)


def test_sign_constant_dominated():
    w = SymWeight.const(5) - SymWeight.symbol(2, 3)
    assert w.sign() == -1


def test_sign_cancellation():
    w = SymWeight.symbol(1) - SymWeight.symbol(3) + SymWeight.symbol(3)
    assert w.sign() == 1
    assert (w - SymWeight.symbol(1)).is_zero()


def test_sign_top_symbol_wins():
    w = SymWeight.symbol(4, -100) + SymWeight.symbol(5, Fraction(1, 7))
    assert sym_sign(w) == 1


def test_sym_sign_of_plain_rational():
    assert sym_sign(Fraction(-2, 3)) == -1
    assert sym_sign(0) == 0


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def symweights(draw):
    indices = draw(st.lists(st.integers(min_value=0, max_value=6),
                            max_size=4, unique=True))
    return SymWeight([(k, draw(coeffs)) for k in indices])


@given(symweights(), symweights())
def test_order_compatible_with_addition(a, b):
    c = SymWeight.symbol(2, Fraction(3, 2))
    if a.sign() > 0 and b.sign() > 0:
        assert (a + b).sign() > 0
    assert ((a + c) - (b + c) - (a - b)).is_zero()


@given(symweights(), st.fractions(min_value=1, max_value=9, max_denominator=5))
def test_order_compatible_with_positive_scaling(a, q):
    assert (a * q).sign() == a.sign()


@given(symweights())
def test_antisymmetry(a):
    assert (a - a).is_zero()
    assert (-a).sign() == -a.sign()


def test_path_weights_two_point_path():
    ctx = lattice_points(1, 2)
    nu = path_weights(ctx, (1, 1))
    assert nu[(2, 0)].is_zero()
    assert nu[(0, 2)] == SymWeight.symbol(1, 4)
    assert (1, 1) not in nu


def test_path_weights_degree_three():
    ctx = lattice_points(1, 3)
    nu = path_weights(ctx, (0, 3))
    assert nu[(3, 0)].is_zero()
    assert nu[(2, 1)] == SymWeight.symbol(1, 3)
    assert nu[(1, 2)] == SymWeight.symbol(1, 3) + SymWeight.symbol(2, 3)


def test_path_weights_strictly_increasing():
    for (n, d, w) in [(1, 3, (0, 3)), (2, 2, (1, 1, 0)), (2, 3, (1, 1, 1))]:
        ctx = lattice_points(n, d)
        nu = path_weights(ctx, w)
        dom = nu.domain
        for a, b in zip(dom, dom[1:]):
            assert (nu[b] - nu[a]).sign() > 0


def test_weightfunction_json_roundtrip():
    ctx = lattice_points(1, 2)
    nu = path_weights(ctx, (1, 1))
    again = WeightFunction.from_json(nu.to_json())
    assert again.domain == nu.domain
    for p in nu.domain:
        assert again[p] == nu[p]


def test_weightfunction_domain_check():
    ctx = lattice_points(1, 2)
    nu = path_weights(ctx, (1, 1))
    with pytest.raises(NotInSimplex):
        nu[(1, 1)]


def test_super_increasing_weights_sorted():
    ctx = lattice_points(2, 2)
    su = super_increasing_weights(ctx.points)
    pts = sorted(su, key=prec_key)
    for i, p in enumerate(pts):
        assert su[p] == SymWeight.symbol(i + 1)


def _enumerate_circuits(points, max_size):
    """All minimally dependent subsets of the given points."""
    from itertools import combinations

    from tropsing import exactlin as xl
    from tropsing.errors import NotACircuit

    out = []
    for size in range(2, max_size + 1):
        for sub in combinations(points, size):
            try:
                rel = xl.circuit_relation(sub)
            except NotACircuit:
                continue
            out.append((sub, rel))
    return out


@pytest.mark.parametrize("n,d", [(1, 3), (2, 2), (2, 3)])
def test_mikhalkin_condition_certificate(n, d):
    # Every circuit avoiding w has its relation value positive when the
    # relation is normalized with positive coefficient on the last point.
    ctx = lattice_points(n, d)
    for w in ctx.points:
        nu = path_weights(ctx, w)
        pts = [p for p in ctx.points if p != w]
        for sub, rel in _enumerate_circuits(pts, n + 2):
            total = SymWeight.const(0)
            for c, p in zip(rel, sub):
                total = total + nu[p] * c
            assert total.sign() > 0, (w, sub, rel)
