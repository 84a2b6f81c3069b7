import json
import random

import pytest

from trisphere import Cycle, is_good_ordering, parse_triangulation, validate_sphere
from trisphere.moves import STABLE, classify_cycle
from trisphere.shelling import BoundExceeded, thin_position
from trisphere.oracle import (
    EXPECTED_WIDTHS,
    bipyramid,
    brute_force_stable_geodesics,
    brute_force_width,
    catalog,
    double_tetrahedron,
    enumerate_good_orderings,
    flipped_sphere,
    generate,
    icosahedron,
    octahedron,
    random_good_ordering,
    stacked_sphere,
    tetrahedron,
)


def test_enumeration_counts_frozen():
    # regression values from the first exhaustive run
    assert sum(1 for _ in enumerate_good_orderings(tetrahedron())) == 24
    assert sum(1 for _ in enumerate_good_orderings(double_tetrahedron())) == 264


def test_enumeration_is_lexicographic_and_good():
    t = double_tetrahedron()
    orders = list(enumerate_good_orderings(t))
    assert orders == sorted(orders)
    assert len(set(orders)) == len(orders)
    for o in orders[:50]:
        assert is_good_ordering(t, o)


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        next(enumerate_good_orderings(bipyramid(8), bound=12))


def test_brute_force_widths_frozen():
    assert brute_force_width(tetrahedron()) == (4,)
    assert brute_force_width(double_tetrahedron()) == (4, 4)
    assert brute_force_width(octahedron()) == (5, 5)
    assert brute_force_width(bipyramid(5)) == (5, 5, 5)


def test_brute_force_stable_geodesics():
    assert brute_force_stable_geodesics(octahedron(), 6) == [
        Cycle((0, 2, 1, 3)),
        Cycle((0, 4, 1, 5)),
        Cycle((2, 4, 3, 5)),
    ]
    assert brute_force_stable_geodesics(double_tetrahedron(), 5) == [Cycle((0, 1, 2))]
    assert brute_force_stable_geodesics(tetrahedron(), 4) == []


def test_bipyramid_equator_stable():
    for k in (4, 5, 6, 7):
        t = bipyramid(k)
        assert classify_cycle(t, Cycle(range(k))).tag == STABLE


def test_generators_counts():
    assert (tetrahedron().n_vertices, tetrahedron().n_faces) == (4, 4)
    t = bipyramid(3)
    assert (t.n_vertices, t.n_faces) == (5, 6)
    assert t == double_tetrahedron()
    t = bipyramid(4)
    assert (t.n_vertices, t.n_faces) == (6, 8)
    assert (octahedron().n_vertices, octahedron().n_faces) == (6, 8)
    assert (icosahedron().n_vertices, icosahedron().n_edges, icosahedron().n_faces) == (12, 30, 20)
    with pytest.raises(ValueError):
        bipyramid(2)


def test_stacked_sphere_growth():
    t = stacked_sphere(7, 5)
    assert (t.n_vertices, t.n_faces) == (9, 14)
    from trisphere import every_3cycle_bounds

    ok, _ = every_3cycle_bounds(stacked_sphere(7, 1))
    assert not ok


def test_flipped_sphere_preserves_counts():
    t = flipped_sphere(7, 50)
    assert (t.n_vertices, t.n_edges, t.n_faces) == (6, 12, 8)


def test_generators_reproducible():
    assert stacked_sphere(42, 4) == stacked_sphere(42, 4)
    assert flipped_sphere(42, 17) == flipped_sphere(42, 17)
    assert stacked_sphere(42, 4) != stacked_sphere(43, 4)


def test_generate_dispatch():
    assert generate("octahedron") == octahedron()
    assert generate("bipyramid", k=5) == bipyramid(5)
    assert generate("stacked", seed=1, splits=2) == stacked_sphere(1, 2)
    with pytest.raises(ValueError):
        generate("cube")


def test_generated_spheres_validate_10000():
    # 5000 seeded instances of each generator all pass validation
    for seed in range(5000):
        t = stacked_sphere(seed, 1 + seed % 5)
        assert validate_sphere(t).ok, f"stacked {seed}"
    for seed in range(5000):
        t = flipped_sphere(seed, 1 + seed % 30)
        assert validate_sphere(t).ok, f"flipped {seed}"


def test_random_good_ordering():
    rng = random.Random(0)
    for t in (octahedron(), stacked_sphere(5, 3)):
        for _ in range(10):
            assert is_good_ordering(t, random_good_ordering(t, rng))


def test_catalog_composition():
    entries = catalog()
    names = [e.name for e in entries]
    assert len(entries) == 29
    assert sum(1 for n in names if n.startswith("stacked-")) == 12
    assert sum(1 for n in names if n.startswith("flipped-")) == 8
    for e in entries:
        assert validate_sphere(e.triangulation).ok, e.name
        if "width" in e.expected and e.triangulation.n_faces <= 12:
            assert brute_force_width(e.triangulation) == tuple(e.expected["width"]), e.name


def test_expected_widths_match_search():
    for name, width in EXPECTED_WIDTHS.items():
        entry = next(e for e in catalog() if e.name == name)
        assert thin_position(entry.triangulation)[1] == width, name


def test_fixture_manifest_agrees(fixtures_dir):
    manifest = json.loads((fixtures_dir / "manifest.json").read_text())
    for entry in manifest["entries"]:
        t = parse_triangulation((fixtures_dir / entry["file"]).read_text())
        assert t.n_vertices == entry["vertices"], entry["name"]
        assert t.n_edges == entry["edges"], entry["name"]
        assert t.n_faces == entry["faces"], entry["name"]
        assert validate_sphere(t).ok == entry["valid"], entry["name"]
        if "width" in entry:
            assert brute_force_width(t) == tuple(entry["width"]), entry["name"]
