import pytest

from trisphere import (
    Cycle,
    Triangulation,
    TriangulationError,
    embedded_cycle,
    enumerate_cycles,
    parse_triangulation,
    serialize_triangulation,
    two_sides,
    validate_sphere,
    vertex_link,
)
from trisphere.triangulation import normalize
from trisphere.oracle import double_tetrahedron, icosahedron, octahedron, stacked_sphere, tetrahedron

TETRA_TEXT = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n"


def test_parse_tetrahedron():
    t = parse_triangulation(TETRA_TEXT)
    assert (t.n_vertices, t.n_edges, t.n_faces) == (4, 6, 4)


def test_parse_octahedron_counts():
    t = parse_triangulation(serialize_triangulation(octahedron()))
    assert (t.n_vertices, t.n_edges, t.n_faces) == (6, 12, 8)
    assert t.euler_characteristic == 2


def test_parse_skips_comments_and_blanks():
    t = parse_triangulation("# a comment\n\n" + TETRA_TEXT + "\n# trailing\n")
    assert t.n_faces == 4


def test_parse_renumbers_first_appearance():
    t = parse_triangulation("7 9 11\n7 9 2\n7 11 2\n9 11 2\n")
    assert t.faces[0] == (0, 1, 2)
    assert t.n_vertices == 4


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("0 1 1\n", "repeated vertex"),
        ("0 1\n", "expected three"),
        ("0 1 2 3\n", "expected three"),
        ("0 1 x\n", "non-integer"),
        ("0 1 -2\n", "negative"),
        (TETRA_TEXT + "2 1 0\n", "duplicate face"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(TriangulationError, match=fragment):
        parse_triangulation(text)


def test_parse_serialize_identity_on_normalized():
    for t in (tetrahedron(), double_tetrahedron(), octahedron(), icosahedron(),
              stacked_sphere(3, 4)):
        n = normalize(t)
        assert parse_triangulation(serialize_triangulation(n)) == n
        assert normalize(n) == n
        # normalization preserves size (it only relabels and reorders)
        assert (n.n_vertices, n.n_edges, n.n_faces) == (t.n_vertices, t.n_edges, t.n_faces)


def test_validate_tetrahedron_ok():
    assert validate_sphere(tetrahedron()).ok


def test_validate_two_disjoint_tetrahedra():
    text = TETRA_TEXT + "4 5 6\n4 5 7\n4 6 7\n5 6 7\n"
    rep = validate_sphere(parse_triangulation(text))
    assert not rep.ok
    names = {f.invariant for f in rep.failures}
    assert "euler characteristic" in names
    assert "dual connectivity" in names


def test_validate_missing_face():
    rep = validate_sphere(parse_triangulation("0 1 2\n0 1 3\n0 2 3\n"))
    assert not rep.ok
    names = {f.invariant for f in rep.failures}
    assert "edge incidence" in names
    assert "minimum size" in names


def test_validate_torus_fixture(fixtures_dir):
    rep = validate_sphere(parse_triangulation((fixtures_dir / "torus.tri").read_text()))
    assert not rep.ok
    assert any(f.invariant == "euler characteristic" for f in rep.failures)


def test_vertex_links():
    assert len(vertex_link(icosahedron(), 3)) == 5
    assert len(vertex_link(octahedron(), 2)) == 4
    # apex of the double tetrahedron sees exactly the equator
    assert vertex_link(double_tetrahedron(), 3) == Cycle((0, 1, 2))
    with pytest.raises(ValueError, match="unknown vertex"):
        vertex_link(tetrahedron(), 9)


def test_link_length_equals_degree():
    t = stacked_sphere(11, 4)
    for v in range(t.n_vertices):
        assert len(vertex_link(t, v)) == len(t.neighbors[v])


def test_cycle_canonical_form():
    assert Cycle((2, 1, 3)) == Cycle((1, 3, 2)) == Cycle((3, 1, 2))
    assert Cycle((0, 1, 2, 3)).vertices == (0, 1, 2, 3)
    assert Cycle((0, 3, 2, 1)).vertices == (0, 1, 2, 3)  # reflection
    with pytest.raises(ValueError):
        Cycle((0, 1))
    with pytest.raises(ValueError):
        Cycle((0, 1, 1))


def test_embedded_cycle_rejects_non_edges():
    # 0 and 3 are the apexes of the double tetrahedron's... 3 and 4 are apexes
    with pytest.raises(ValueError, match="non-edge"):
        embedded_cycle(double_tetrahedron(), (3, 4, 0))


def test_two_sides_triangle_boundary():
    t = tetrahedron()
    a, b = two_sides(t, Cycle((0, 1, 2)))
    assert sorted(map(len, (a.faces, b.faces))) == [1, 3]
    assert a.faces == frozenset({0})  # region with the lowest face index first


def test_two_sides_four_cycle():
    t = tetrahedron()
    a, b = two_sides(t, Cycle((0, 1, 3, 2)))  # edges 01, 13, 32, 20
    assert len(a.faces) == len(b.faces) == 2


def test_two_sides_octahedron_equator():
    t = octahedron()
    eq = Cycle((2, 4, 3, 5))
    a, b = two_sides(t, eq)
    assert len(a.faces) == len(b.faces) == 4


def test_enumerate_cycles_tetrahedron():
    t = tetrahedron()
    tri = enumerate_cycles(t, 3)
    assert tri == [Cycle((0, 1, 2)), Cycle((0, 1, 3)), Cycle((0, 2, 3)), Cycle((1, 2, 3))]
    all4 = enumerate_cycles(t, 4)
    assert len(all4) == 7  # 4 facial triangles + the 3 distinct 4-cycles of K4
    assert sum(1 for c in all4 if len(c) == 4) == 3


def test_enumerate_cycles_double_tetrahedron():
    got = enumerate_cycles(double_tetrahedron(), 3)
    # 6 facial 3-cycles plus the equator
    assert len(got) == 7
    assert Cycle((0, 1, 2)) in got


def test_enumerate_cycles_matches_permutation_oracle():
    import itertools

    t = octahedron()
    expected = set()
    verts = range(t.n_vertices)
    for k in (3, 4, 5):
        for sub in itertools.combinations(verts, k):
            for perm in itertools.permutations(sub[1:]):
                seq = (sub[0],) + perm
                if all(t.contains_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                    expected.add(Cycle(seq))
    assert set(enumerate_cycles(t, 5)) == expected


def test_enumerate_cycles_canonical_closed():
    for c in enumerate_cycles(octahedron(), 6):
        assert Cycle(c.vertices) == c


def test_triangulation_requires_dense_ids():
    with pytest.raises(TriangulationError, match="dense"):
        Triangulation([(0, 1, 5), (0, 1, 3), (0, 3, 5), (1, 3, 5)])
