import pytest

from trisphere import (
    Cycle,
    Triangulation,
    bridge_from_hamiltonian,
    check_thin_equals_bridge,
    classify_cycle,
    classify_region,
    every_3cycle_bounds,
    extract_geodesics,
    hamiltonian_cycle,
    hamiltonian_from_bridge,
    is_bridge,
    three_geodesics,
    three_stable_geodesics,
    two_sides,
    verify_region_structure,
)
from trisphere.analysis import FAN, PLANAR_LOLLIPOP, WHEEL, VerificationError
from trisphere.moves import STABLE
from trisphere.oracle import (
    bipyramid,
    brute_force_stable_geodesics,
    double_tetrahedron,
    icosahedron,
    octahedron,
    stacked_sphere,
    tetrahedron,
)
from conftest import cached_thin


def goldner_harary() -> Triangulation:
    """Stack a vertex on every face of the double tetrahedron (V=11, F=18)."""
    dt = double_tetrahedron()
    faces = []
    v = 5
    for (x, y, z) in dt.faces:
        faces += [(x, y, v), (x, z, v), (y, z, v)]
        v += 1
    return Triangulation(faces)


# -- extraction -------------------------------------------------------------


def test_extract_geodesics_tetrahedron():
    t = tetrahedron()
    rep = extract_geodesics(t, cached_thin(t)[0])
    assert len(rep.unstable) == 1 and len(rep.stable) == 0
    assert len(rep.unstable[0][0]) == 4


def test_extract_geodesics_double_tetrahedron():
    t = double_tetrahedron()
    rep = extract_geodesics(t, cached_thin(t)[0])
    assert len(rep.unstable) == 2 and len(rep.stable) == 1
    assert rep.stable[0][0] == Cycle((0, 1, 2))


def test_extract_geodesics_octahedron_minima_are_equators():
    t = octahedron()
    rep = extract_geodesics(t, cached_thin(t)[0])
    equators = {Cycle((0, 2, 1, 3)), Cycle((0, 4, 1, 5)), Cycle((2, 4, 3, 5))}
    assert {c for c, _ in rep.stable} <= equators


def test_extract_geodesics_rejects_wrong_classification():
    t = octahedron()
    # a bridge ordering is not thin for the octahedron: its peak is Hamiltonian,
    # which is never unstable here, so extraction must flag it
    order = bridge_from_hamiltonian(t, hamiltonian_cycle(t))
    with pytest.raises(VerificationError):
        extract_geodesics(t, order)


# -- 3-cycles and Hamiltonian cycles ---------------------------------------


def test_every_3cycle_bounds():
    assert every_3cycle_bounds(octahedron()) == (True, None)
    assert every_3cycle_bounds(icosahedron()) == (True, None)
    ok, witness = every_3cycle_bounds(double_tetrahedron())
    assert not ok and witness == Cycle((0, 1, 2))
    ok, witness = every_3cycle_bounds(stacked_sphere(0, 1))
    assert not ok and len(witness) == 3


def test_hamiltonian_cycle_small_solids():
    for t in (tetrahedron(), double_tetrahedron(), octahedron(), icosahedron()):
        h = hamiltonian_cycle(t)
        assert h is not None and len(h) == t.n_vertices
        for u, v in h.edges:
            assert t.contains_edge(u, v)


def test_hamiltonian_cycle_none_for_goldner_harary():
    gh = goldner_harary()
    assert hamiltonian_cycle(gh) is None
    ok, _ = every_3cycle_bounds(gh)
    assert not ok  # consistent: the facial-3-cycles condition fails too


def test_bridge_roundtrip():
    for t in (tetrahedron(), double_tetrahedron(), octahedron(), icosahedron()):
        h = hamiltonian_cycle(t)
        order = bridge_from_hamiltonian(t, h)
        assert is_bridge(t, order)
        assert hamiltonian_from_bridge(t, order) == h


def test_bridge_profiles():
    t = double_tetrahedron()
    from trisphere import profile

    order = bridge_from_hamiltonian(t, hamiltonian_cycle(t))
    assert profile(t, order) == (3, 4, 5, 4, 3)
    oc = octahedron()
    order = bridge_from_hamiltonian(oc, hamiltonian_cycle(oc))
    assert profile(oc, order) == (3, 4, 5, 6, 5, 4, 3)


def test_bridge_from_non_hamiltonian_rejected():
    with pytest.raises(ValueError, match="not Hamiltonian"):
        bridge_from_hamiltonian(octahedron(), Cycle((0, 2, 4)))


def test_hamiltonian_from_bridge_rejects_thin_ordering():
    t = octahedron()
    with pytest.raises(ValueError, match="bridge"):
        hamiltonian_from_bridge(t, cached_thin(t)[0])


# -- thin vs bridge ----------------------------------------------------------


def test_check_thin_equals_bridge():
    r = check_thin_equals_bridge(tetrahedron(), thin=cached_thin(tetrahedron()))
    assert r.tetrahedron and r.thin_width == (4,) == r.bridge_width

    r = check_thin_equals_bridge(double_tetrahedron(), thin=cached_thin(double_tetrahedron()))
    assert not r.tetrahedron and r.thin_width == (4, 4) and r.bridge_width == (5,)

    r = check_thin_equals_bridge(octahedron(), thin=cached_thin(octahedron()))
    assert not r.tetrahedron and r.bridge_width == (6,)


# -- regions ------------------------------------------------------------------


def test_classify_region_octahedron_wheel():
    t = octahedron()
    eq = Cycle((2, 4, 3, 5))
    side_a, side_b = two_sides(t, eq)
    ra, rb = classify_region(t, side_a), classify_region(t, side_b)
    assert ra.tag == WHEEL and rb.tag == WHEEL
    assert {ra.hub, rb.hub} == {0, 1}  # the antipodal pair off the equator


def test_classify_region_fan():
    t = icosahedron()
    # three consecutive faces around the degree-5 vertex 0
    region = classify_region(t, {0, 1, 2})
    assert region.tag == FAN
    assert region.distinguished == 0


def test_classify_region_lollipop():
    t = icosahedron()
    # the full star of vertex 0 plus one face hanging off its rim
    star = set(t.vertex_faces[0])
    extra = next(i for i in range(t.n_faces) if i not in star
                 and sum(1 for j in t.dual_neighbors[i] if j[0] in star) == 1)
    region = classify_region(t, star | {extra})
    assert region.tag == PLANAR_LOLLIPOP
    assert region.hub == 0


def test_classify_region_rejects_non_disk():
    t = octahedron()
    # faces (0,2,4) and (1,3,5) are disjoint: dual-disconnected, not a disk
    with pytest.raises(ValueError, match="not a disk"):
        classify_region(t, {0, 7})


def test_verify_region_structure_double_tetrahedron():
    t = double_tetrahedron()
    checks = verify_region_structure(t, cached_thin(t)[0])
    # single minimum adjacent to the empty geodesic on both sides: two wheels
    assert len(checks) == 2
    assert all(c.region is not None and c.region.tag == WHEEL for c in checks)
    assert all(len(c.faces) == 3 for c in checks)  # two apex stars with 3 spokes


def test_verify_region_structure_octahedron_and_icosahedron():
    for t in (octahedron(), icosahedron()):
        checks = verify_region_structure(t, cached_thin(t)[0])
        assert checks and all(c.ok for c in checks)


# -- three geodesics ----------------------------------------------------------


def test_three_geodesics_tetrahedron():
    rep = three_geodesics(tetrahedron())
    assert len(rep.unstable) == 3 and not rep.stable
    assert all(len(c) == 4 for c, _ in rep.unstable)


def test_three_geodesics_general():
    for t in (double_tetrahedron(), octahedron(), bipyramid(5), icosahedron()):
        rep = three_geodesics(t, thin=cached_thin(t))
        distinct = {c for c, _ in rep.stable} | {c for c, _ in rep.unstable}
        assert len(distinct) >= 3
        assert len(rep.unstable) >= 2 and len(rep.stable) >= 1


def test_three_stable_geodesics_exceptional():
    assert three_stable_geodesics(tetrahedron()).exceptional == "tetrahedron"
    assert three_stable_geodesics(double_tetrahedron()).exceptional == "double-tetrahedron"


def test_three_stable_geodesics_octahedron_equators():
    rep = three_stable_geodesics(octahedron(), thin=cached_thin(octahedron()))
    assert rep.exceptional is None
    got = {c for c, _ in rep.cycles}
    assert got == {Cycle((0, 2, 1, 3)), Cycle((0, 4, 1, 5)), Cycle((2, 4, 3, 5))}


def test_three_stable_geodesics_brute_force_superset():
    for t in (octahedron(), bipyramid(5), bipyramid(6)):
        rep = three_stable_geodesics(t, thin=cached_thin(t))
        assert rep.exceptional is None
        all_stable = set(brute_force_stable_geodesics(t, t.n_vertices))
        assert {c for c, _ in rep.cycles} <= all_stable


def test_three_stable_geodesics_icosahedron():
    rep = three_stable_geodesics(icosahedron(), thin=cached_thin(icosahedron()))
    assert rep.exceptional is None
    assert len({c for c, _ in rep.cycles}) >= 3
    for c, _ in rep.cycles:
        assert classify_cycle(icosahedron(), c).tag == STABLE


def test_three_stable_geodesics_all_reverified():
    for t in (octahedron(), bipyramid(5), bipyramid(7), stacked_sphere(2, 3)):
        rep = three_stable_geodesics(t, thin=cached_thin(t))
        for c, _ in rep.cycles:
            assert classify_cycle(t, c).tag == STABLE
