import random
from fractions import Fraction

import pytest

from tropsing.errors import EmptySet, OutsideHull, TooFewPoints
from tropsing.simplex import lattice_points, prec_key
from tropsing.symweights import SymWeight, WeightFunction, path_weights
from tropsing import tropdual as td


# Coefficients of the degree-3 tropical polynomial with a singularity at the
# origin (the worked example with the parallelogram in its dual subdivision).
FIG1_COEFFS = {
    (3, 0, 0): 2, (2, 1, 0): 3, (1, 2, 0): 3, (0, 3, 0): 0,
    (2, 0, 1): 3, (1, 1, 1): 3, (0, 2, 1): 1,
    (1, 0, 2): 1, (0, 1, 2): 0,
    (0, 0, 3): -3,
}
PARALLELOGRAM = ((1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 1, 0))


def fig1_weights():
    ctx = lattice_points(2, 3)
    return WeightFunction(ctx, {p: Fraction(-c) for p, c in FIG1_COEFFS.items()})


def test_flat_weights_single_cell():
    ctx = lattice_points(1, 2)
    nu = WeightFunction(ctx, {p: 0 for p in ctx.points})
    sub = td.regular_subdivision(nu)
    assert sub.cells == (((2, 0), (1, 1), (0, 2)),)


def test_fig1_subdivision_contains_parallelogram():
    sub = td.regular_subdivision(fig1_weights())
    assert frozenset(PARALLELOGRAM) in sub.cell_sets()


def test_fig1_subdivision_certificates_and_volume():
    nu = fig1_weights()
    sub = td.regular_subdivision(nu)
    total = 0
    for cell in sub.cells:
        assert td.hull_certificate(nu, cell)
        total += td.normalized_volume(cell)
    assert total == 9  # d^n = 3^2


def test_volume_primitive_segment():
    assert td.normalized_volume([(0, 0), (2, 1)]) == 1
    assert td.normalized_volume([(0, 0), (2, 0)]) == 2
    assert td.normalized_volume([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 1
    assert td.normalized_volume([(0, 0), (1, 0), (0, 1), (1, 1)]) == 2


def test_unimodular_detector():
    assert td.simplex_is_unimodular([(0, 0), (1, 0), (0, 1)])
    assert not td.simplex_is_unimodular([(0, 0), (2, 0), (0, 1)])
    assert td.simplex_is_unimodular([(4, 0, 0), (3, 1, 0), (3, 0, 1)])


def test_random_rational_subdivision_certified():
    rng = random.Random(7)
    ctx = lattice_points(2, 2)
    for _ in range(10):
        nu = WeightFunction(
            ctx, {p: Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                  for p in ctx.points})
        sub = td.regular_subdivision(nu)
        assert sum(td.normalized_volume(c) for c in sub.cells) == 4
        for cell in sub.cells:
            assert td.hull_certificate(nu, cell)


def test_symbolic_subdivision_of_path_weights():
    from tropsing import exactlin as xl

    ctx = lattice_points(2, 4)
    w = (1, 2, 1)
    nu = path_weights(ctx, w)
    sub = td.regular_subdivision(nu)
    # Away from the skipped point every cell is unimodular; the cells whose
    # hull touches w are exactly where a singular circuit can sit.
    for cell in sub.cells:
        if not xl.point_in_hull([Fraction(c) for c in w], cell):
            assert td.simplex_is_unimodular(cell)
    # Consecutive points of the path span an edge of some cell.
    pts = [p for p in ctx.points if p != w]
    for a, b in zip(pts, pts[1:]):
        assert any(a in c and b in c for c in sub.cells)


def test_legendre_flat():
    ctx = lattice_points(1, 2)
    nu = WeightFunction(ctx, {p: 0 for p in ctx.points})
    assert td.legendre_value(nu, (Fraction(1), Fraction(1))) == 0


def test_legendre_raised_midpoint_convexified():
    ctx = lattice_points(1, 2)
    nu = WeightFunction(ctx, {(2, 0): 0, (1, 1): 1, (0, 2): 0})
    assert td.legendre_value(nu, (Fraction(1), Fraction(1))) == 0


def test_legendre_fig1_parallelogram_midpoint():
    x = (Fraction(3, 2), Fraction(1), Fraction(1, 2))
    assert td.legendre_value(fig1_weights(), x) == -3


def test_legendre_outside_hull():
    ctx = lattice_points(1, 2)
    nu = WeightFunction(ctx, {p: 0 for p in ctx.points})
    with pytest.raises(OutsideHull):
        td.legendre_value(nu, (Fraction(3), Fraction(-1)))


def test_fig1_singular():
    assert td.is_singular_at_origin(fig1_weights())
    assert td.geometric_type_check(fig1_weights()) == "singular_non_maximal"


def test_flat_degree2_segment_singular_maximal():
    ctx = lattice_points(1, 2)
    nu = WeightFunction(ctx, {p: 0 for p in ctx.points})
    assert td.is_singular_at_origin(nu)
    assert td.geometric_type_check(nu) == "singular_maximal"


def test_generic_convex_not_singular():
    rng = random.Random(20240)
    ctx = lattice_points(2, 3)
    for _ in range(20):
        while True:
            values = {
                p: Fraction(sum(c * c for c in p) * 100 * 840
                            + rng.randint(0, 839), 840)
                for p in ctx.points}
            if len(set(values.values())) == len(ctx.points):
                break
        nu = WeightFunction(ctx, values)
        assert td.geometric_type_check(nu) == "not_singular"


def test_complete_path_examples():
    edges = td.complete_path([(2, 0), (1, 1), (0, 2)])
    assert [(e.tail, e.head) for e in edges] == [((2, 0), (1, 1)), ((1, 1), (0, 2))]
    edges = td.complete_path([(2, 0), (0, 2)])
    assert [(e.tail, e.head) for e in edges] == [((2, 0), (0, 2))]
    ctx = lattice_points(2, 2)
    gamma = [p for p in ctx.points if p != (1, 1, 0)]
    edges = td.complete_path(gamma)
    assert len(edges) == 4
    assert ((2, 0, 0), (0, 2, 0)) in [(e.tail, e.head) for e in edges]


def test_complete_path_too_few():
    with pytest.raises(TooFewPoints):
        td.complete_path([(2, 0)])


def test_pencil_paths_counts():
    paths = td.pencil_paths(lattice_points(1, 2))
    kinds = [p.kind for p in paths]
    assert kinds.count("connected") == 3
    assert kinds.count("disconnected") == 2
    paths = td.pencil_paths(lattice_points(2, 2))
    kinds = [p.kind for p in paths]
    assert kinds.count("connected") == 6
    assert kinds.count("disconnected") == 5


def test_pencil_paths_skip_edge():
    paths = td.pencil_paths(lattice_points(1, 2))
    gamma = next(p for p in paths if p.kind == "connected" and p.w == (1, 1))
    assert [(e.tail, e.head) for e in gamma.edges] == [((2, 0), (0, 2))]


def test_illuminated_segment():
    assert td.illuminated_set((0, 2), [(2, 0), (1, 1)]) == [(1, 1)]


def test_illuminated_singleton():
    assert td.illuminated_set((5, 0), [(0, 5)]) == [(0, 5)]


def test_illuminated_empty():
    with pytest.raises(EmptySet):
        td.illuminated_set((0, 2), [])


def _is_face_of(face, points):
    """Exact test that `face` is a face of conv(points).

    Looks for an affine functional vanishing on the face and >= 1 on the
    remaining points; one exists iff the face is a proper face (or all of
    the hull, handled separately).
    """
    from tropsing import exactlin as xl

    others = [p for p in points if p not in set(face)]
    if not others:
        return True
    n_t = len(points[0]) + 1  # affine functional: coefficients + constant
    n_s = len(others)

    def affine(p):
        return [Fraction(c) for c in p] + [Fraction(1)]

    lhs = []
    rhs = []
    for f in face:
        row = affine(f)
        lhs.append(row + [-x for x in row] + [Fraction(0)] * n_s)
        rhs.append(Fraction(0))
    for idx, o in enumerate(others):
        row = affine(o)
        slack = [Fraction(0)] * n_s
        slack[idx] = Fraction(-1)
        lhs.append(row + [-x for x in row] + slack)
        rhs.append(Fraction(1))
    res = xl.lp_maximize([Fraction(0)] * (2 * n_t + n_s), lhs, rhs)
    return res is not None


@pytest.mark.parametrize("n,d", [(2, 3), (2, 4), (3, 3)])
def test_illuminated_set_of_lower_region_is_face(n, d):
    ctx = lattice_points(n, d)
    for w in ctx.points[1:]:
        omega = [p for p in ctx.points if prec_key(p) < prec_key(w)]
        if len(omega) < 2:
            continue
        ill = td.illuminated_set(w, omega)
        assert ill, (w,)
        assert _is_face_of(tuple(ill), omega), (w, ill)


def test_illuminated_lower_region_example():
    # For w = (1, 2, 1) in the degree-4 triangle: following the recursive
    # description, the illuminated set is spanned by the illuminated point
    # of the slice through w and the slice-edge point (0, 4, 0).
    ctx = lattice_points(2, 4)
    w = (1, 2, 1)
    omega = [p for p in ctx.points if prec_key(p) < prec_key(w)]
    assert td.illuminated_set(w, omega) == [(0, 4, 0), (2, 1, 1)]
