"""Deployment generation and serialization."""

import math

import pytest

from wsngen.deployment import (
    deploy_grid,
    deploy_nongrid,
    deploy_rectangular,
    deployment_from_json,
    deployment_to_csv,
    deployment_to_json,
    deployment_to_svg,
    points_from_csv,
)


def test_grid_seed_43_frozen_first_point():
    dep = deploy_grid(100, 100.0, 43)
    assert dep.points[0] == (46.37725900000001, 47.83498399999999)
    assert dep.node_count == 100
    assert dep.mode == "grid"


def test_nongrid_points_stay_in_area():
    dep = deploy_nongrid(250, 100.0, 7)
    assert dep.node_count == 250
    for x, y in dep.points:
        assert 0.0 <= x < 100.0
        assert 0.0 <= y < 100.0


def test_grid_truncation_on_non_multiple_of_four():
    # ceil(10/4) = 3 base points, concatenation truncated to 10
    dep = deploy_grid(10, 100.0, 0)
    assert dep.node_count == 10
    base = dep.points[:3]
    second = dep.points[3:6]
    for (x0, y0), (x1, y1) in zip(base, second):
        assert (x1, y1) == (x0 + 50.0, y0 + 50.0)


def test_grid_quadrants_live_in_their_halves():
    n = 100
    dep = deploy_grid(n, 100.0, 12)
    q = n // 4
    for x, y in dep.points[:q]:
        assert x < 50.0 and y < 50.0
    for x, y in dep.points[q:2 * q]:
        assert x >= 50.0 and y >= 50.0
    for x, y in dep.points[2 * q:3 * q]:
        assert x >= 50.0 and y < 50.0
    for x, y in dep.points[3 * q:]:
        assert x < 50.0 and y >= 50.0


def test_y_increment_variants_differ():
    a = deploy_nongrid(50, 100.0, 5, y_increment="a")
    c = deploy_nongrid(50, 100.0, 5, y_increment="c")
    assert a.xs == c.xs
    assert a.ys != c.ys
    # with increment c the Y recurrence equals the X recurrence
    assert c.xs == c.ys


def test_determinism_across_calls():
    assert deploy_nongrid(100, 100.0, 43).points == deploy_nongrid(100, 100.0, 43).points
    assert deploy_grid(100, 100.0, 43).points == deploy_grid(100, 100.0, 43).points


def test_constants_override_skips_derivation():
    dep = deploy_nongrid(10, 50.0, 999, constants=(3.0, 1.5))
    assert dep.params.a == 3.0
    assert dep.params.c == 1.5


@pytest.mark.parametrize("bad_kwargs", [
    {"node_count": 0, "area": 100.0, "seed": 0},
    {"node_count": -3, "area": 100.0, "seed": 0},
    {"node_count": 10, "area": 0.0, "seed": 0},
    {"node_count": 10, "area": -1.0, "seed": 0},
])
def test_argument_validation(bad_kwargs):
    with pytest.raises(ValueError):
        deploy_nongrid(**bad_kwargs)
    with pytest.raises(ValueError):
        deploy_grid(**bad_kwargs)


def test_bad_y_increment_rejected():
    with pytest.raises(ValueError):
        deploy_nongrid(10, 100.0, 0, y_increment="b")


def test_rectangular_scales_y():
    square = deploy_nongrid(40, 100.0, 3)
    rect = deploy_rectangular(40, 100.0, 50.0, 3)
    for (xs, ys), (xr, yr) in zip(square.points, rect.points):
        assert xr == xs
        assert yr == ys * 0.5
    with pytest.raises(ValueError):
        deploy_rectangular(40, 100.0, 0.0, 3)


def test_csv_round_trip_exact(tmp_path):
    dep = deploy_nongrid(60, 100.0, 24)
    path = tmp_path / "dep.csv"
    deployment_to_csv(dep, path)
    assert points_from_csv(path) == dep.points


def test_csv_rejects_malformed(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("node_id,x,y\n1,2.5\n")
    with pytest.raises(ValueError):
        points_from_csv(path)
    path.write_text("foo,bar,baz\n1,2.0,3.0\n")
    with pytest.raises(ValueError):
        points_from_csv(path)
    path.write_text("node_id,x,y\n")
    with pytest.raises(ValueError):
        points_from_csv(path)


def test_json_round_trip(tmp_path):
    dep = deploy_grid(100, 100.0, 43)
    path = tmp_path / "dep.json"
    deployment_to_json(dep, path)
    back = deployment_from_json(path)
    assert back.points == dep.points
    assert back.mode == "grid"
    assert back.area == 100.0
    text = deployment_to_json(dep)
    assert '"kind": "deployment"' in text


def test_svg_has_one_circle_per_node(tmp_path):
    dep = deploy_nongrid(25, 100.0, 2)
    path = tmp_path / "dep.svg"
    deployment_to_svg(dep, path)
    body = path.read_text()
    assert body.count("<circle") == 25
    assert body.startswith("<svg")


def test_base_quadrant_matches_nongrid_at_half_area():
    # the grid base block is exactly a non-grid run with modulus area/2
    seed, area, n = 14, 100.0, 100
    grid = deploy_grid(n, area, seed)
    half = deploy_nongrid(n // 4, area / 2.0, seed)
    assert grid.points[:n // 4] == half.points


def test_node_count_one():
    dep = deploy_grid(1, 100.0, 0)
    assert dep.node_count == 1
    x, y = dep.points[0]
    assert 0.0 <= x < 50.0 and 0.0 <= y < 50.0
