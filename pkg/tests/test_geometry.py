import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from pvlab.geometry import brute_force_diameter, convex_hull, diameter


def test_square_hull_and_diameter():
    pts = np.array([[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5], [0.5, 0]])
    hull = convex_hull(pts)
    assert sorted(hull.tolist()) == [0, 1, 2, 3]
    d, s, t = diameter(pts)
    assert d == pytest.approx(np.sqrt(2)) and {s, t} in ({0, 2}, {1, 3})


def test_degenerate_inputs():
    assert diameter(np.array([[3.0, 4.0]]))[0] == 0
    assert diameter(np.array([[0.0, 0.0], [3.0, 4.0]]))[0] == 5
    line = np.column_stack([np.arange(10.0), 2 * np.arange(10.0)])
    assert diameter(line)[0] == pytest.approx(np.hypot(9, 18))
    with pytest.raises(ValueError):
        diameter(np.zeros((0, 2)))


def test_parallelogram_and_regular_polygons():
    para = np.array([[0, 0], [4, 0], [5, 1], [1, 1]], dtype=float)
    assert diameter(para)[0] == pytest.approx(brute_force_diameter(para))
    for k in range(3, 40):
        t = 2 * np.pi * np.arange(k) / k
        poly = np.column_stack([np.cos(t), np.sin(t)])
        assert diameter(poly)[0] == pytest.approx(brute_force_diameter(poly), abs=1e-12)


@settings(max_examples=300)
@given(arrays(np.int64, st.tuples(st.integers(1, 60), st.just(2)), elements=st.integers(-6, 6)))
def test_lattice_points_match_brute_force(pts):
    # small integer lattices are full of collinear and duplicate points
    pts = pts.astype(float)
    d, s, t = diameter(pts)
    assert d == pytest.approx(brute_force_diameter(pts), abs=1e-12)
    assert np.hypot(*(pts[s] - pts[t])) == pytest.approx(d)


@settings(max_examples=200)
@given(arrays(np.float64, st.tuples(st.integers(1, 200), st.just(2)), elements=st.floats(-1e3, 1e3)))
def test_float_points_match_brute_force(pts):
    assert diameter(pts)[0] == pytest.approx(brute_force_diameter(pts), rel=1e-12, abs=1e-12)


def test_hull_contains_all_points(rng):
    pts = rng.normal(size=(500, 2))
    h = pts[convex_hull(pts)]
    edges = np.roll(h, -1, axis=0) - h
    rel = pts[:, None, :] - h[None, :, :]
    cross = edges[None, :, 0] * rel[..., 1] - edges[None, :, 1] * rel[..., 0]
    assert (cross >= -1e-12).all()
