"""Triangulated 2-spheres as immutable simplicial complexes.

A :class:`Triangulation` is a list of unordered vertex triples with dense
vertex ids.  Edge/face incidences, vertex stars and the dual graph are
derived lazily and cached; instances are immutable after construction and
safe to share across threads.  Curves in the 1-skeleton are
:class:`Cycle` values stored in a canonical form (invariant under rotation
and reflection) so they can be hashed, ordered and deduplicated.

Construction is deliberately lenient: anything that parses as a set of
triangles builds, and :func:`validate_sphere` reports which sphere
invariants fail instead of raising.
"""

from __future__ import annotations

import functools
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]
Face = tuple[int, int, int]


class TriangulationError(ValueError):
    """Raised for malformed face-list input."""


def edge_key(u: int, v: int) -> Edge:
    """Undirected edge as an ordered pair."""
    return (u, v) if u < v else (v, u)


def face_key(a: int, b: int, c: int) -> Face:
    t = sorted((a, b, c))
    return (t[0], t[1], t[2])


class Triangulation:
    """Immutable simplicial surface given by its triangles.

    Face order is preserved from the input and is the face-index space used
    everywhere else (orderings, dual graph, regions).  Vertex ids must be
    dense in ``[0, V)``; :func:`parse_triangulation` renumbers raw input.
    """

    def __init__(self, faces: Iterable[Sequence[int]]):
        normalized: list[Face] = []
        seen: set[Face] = set()
        for face in faces:
            if len(face) != 3:
                raise TriangulationError(f"face {tuple(face)} does not have three vertices")
            a, b, c = (int(x) for x in face)
            if a < 0 or b < 0 or c < 0:
                raise TriangulationError(f"face {(a, b, c)} has a negative vertex id")
            if a == b or a == c or b == c:
                raise TriangulationError(f"face {(a, b, c)} repeats a vertex")
            key = face_key(a, b, c)
            if key in seen:
                raise TriangulationError(f"duplicate face {key}")
            seen.add(key)
            normalized.append(key)
        self.faces: tuple[Face, ...] = tuple(normalized)
        used = sorted({v for f in self.faces for v in f})
        if used and used != list(range(len(used))):
            raise TriangulationError("vertex ids must be dense in [0, V)")
        self.n_vertices: int = len(used)

    # -- basic counts -------------------------------------------------

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @functools.cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edge_faces))

    @property
    def n_edges(self) -> int:
        return len(self.edge_faces)

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    # -- derived incidence structures ---------------------------------

    @functools.cached_property
    def edge_faces(self) -> dict[Edge, tuple[int, ...]]:
        """Edge -> indices of incident faces (2 for a closed surface)."""
        inc: dict[Edge, list[int]] = defaultdict(list)
        for i, (a, b, c) in enumerate(self.faces):
            inc[(a, b)].append(i)
            inc[(a, c)].append(i)
            inc[(b, c)].append(i)
        return {e: tuple(fs) for e, fs in inc.items()}

    @functools.cached_property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        """Vertex -> indices of incident faces."""
        star: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for i, f in enumerate(self.faces):
            for v in f:
                star[v].append(i)
        return tuple(tuple(s) for s in star)

    @functools.cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Vertex -> sorted adjacent vertices."""
        adj: list[set[int]] = [set() for _ in range(self.n_vertices)]
        for u, v in self.edge_faces:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(tuple(sorted(s)) for s in adj)

    @functools.cached_property
    def face_set(self) -> frozenset[Face]:
        return frozenset(self.faces)

    @functools.cached_property
    def _face_edges(self) -> tuple[tuple[Edge, Edge, Edge], ...]:
        out = []
        for a, b, c in self.faces:
            out.append(((b, c), (a, c), (a, b)))  # edge i is opposite vertex i
        return tuple(out)

    def face_edges(self, i: int) -> tuple[Edge, Edge, Edge]:
        """The three edges of face ``i``; edge ``j`` is opposite vertex ``j``."""
        return self._face_edges[i]

    @functools.cached_property
    def dual_neighbors(self) -> tuple[tuple[tuple[int, Edge], ...], ...]:
        """Face -> ((adjacent face, shared edge), ...) over 2-face edges."""
        out: list[list[tuple[int, Edge]]] = [[] for _ in self.faces]
        for e, fs in self.edge_faces.items():
            if len(fs) == 2:
                out[fs[0]].append((fs[1], e))
                out[fs[1]].append((fs[0], e))
        return tuple(tuple(sorted(n)) for n in out)

    def contains_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_faces

    # -- identity ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Triangulation) and self.faces == other.faces

    def __hash__(self) -> int:
        return hash(self.faces)

    def __repr__(self) -> str:
        return f"Triangulation(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces})"


# ---------------------------------------------------------------------------
# .tri parsing and serialization
# ---------------------------------------------------------------------------


def parse_triangulation(text: str) -> Triangulation:
    """Parse a ``.tri`` face-list document.

    Lines are ``#`` comments, blank lines, or exactly three whitespace
    separated nonnegative integers.  Vertex ids are renumbered densely in
    first-appearance order; the face order of the document is preserved.
    """
    remap: dict[int, int] = {}
    faces: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise TriangulationError(f"line {lineno}: expected three vertex ids, got {line!r}")
        try:
            ids = [int(p) for p in parts]
        except ValueError:
            raise TriangulationError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if any(v < 0 for v in ids):
            raise TriangulationError(f"line {lineno}: negative vertex id in {line!r}")
        if len(set(ids)) != 3:
            raise TriangulationError(f"line {lineno}: repeated vertex in face {tuple(ids)}")
        for v in ids:
            if v not in remap:
                remap[v] = len(remap)
        faces.append((remap[ids[0]], remap[ids[1]], remap[ids[2]]))
    return Triangulation(faces)


def serialize_triangulation(t: Triangulation) -> str:
    """Write faces sorted by vertex triple, one per line."""
    return "".join(f"{a} {b} {c}\n" for a, b, c in sorted(t.faces))


def normalize(t: Triangulation) -> Triangulation:
    """The fixed point of parse-after-serialize.

    Serialization sorts faces while parsing renumbers vertices by first
    appearance, so one round trip can change the labeling again; iterating
    settles (each round lexicographically reduces the serialized form).  On
    the result, ``parse_triangulation(serialize_triangulation(t)) == t``.
    """
    for _ in range(64):
        nxt = parse_triangulation(serialize_triangulation(t))
        if nxt == t:
            return t
        t = nxt
    raise AssertionError("normalization did not reach a fixed point")


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Failure:
    invariant: str
    witness: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[Failure, ...]

    def __bool__(self) -> bool:
        return self.ok


def validate_sphere(t: Triangulation) -> ValidationReport:
    """Check the simplicial 2-sphere invariants, reporting every failure.

    Checks: F >= 4, Euler characteristic 2, every edge in exactly two
    faces, every vertex link a single embedded cycle, connected dual graph.
    Failures are reported with a witness rather than raised.
    """
    failures: list[Failure] = []

    if t.n_faces < 4:
        failures.append(Failure("minimum size", f"only {t.n_faces} faces (need at least 4)"))

    chi = t.euler_characteristic
    if chi != 2:
        failures.append(
            Failure(
                "euler characteristic",
                f"V - E + F = {t.n_vertices} - {t.n_edges} + {t.n_faces} = {chi}, expected 2",
            )
        )

    bad_edges = [(e, len(fs)) for e, fs in sorted(t.edge_faces.items()) if len(fs) != 2]
    if bad_edges:
        e, k = bad_edges[0]
        extra = f" (+{len(bad_edges) - 1} more)" if len(bad_edges) > 1 else ""
        failures.append(Failure("edge incidence", f"edge {e} lies in {k} faces{extra}"))

    for v in range(t.n_vertices):
        if not _link_is_single_cycle(t, v):
            failures.append(Failure("vertex link", f"link of vertex {v} is not a single cycle"))
            break

    if t.n_faces and not _dual_connected(t):
        failures.append(Failure("dual connectivity", "dual graph is disconnected"))

    return ValidationReport(ok=not failures, failures=tuple(failures))


def _link_is_single_cycle(t: Triangulation, v: int) -> bool:
    star = t.vertex_faces[v]
    if not star:
        return False
    deg: dict[int, int] = defaultdict(int)
    adj: dict[int, list[int]] = defaultdict(list)
    for fi in star:
        a, b = (x for x in t.faces[fi] if x != v)
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    if any(d != 2 for d in deg.values()):
        return False
    start = min(adj)
    prev, cur = None, start
    length = 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        length += 1
        if cur == start:
            break
        if length > len(adj):
            return False
    return length == len(adj) == len(star)


def _dual_connected(t: Triangulation) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for g, _ in t.dual_neighbors[f]:
            if g not in seen:
                seen.add(g)
                queue.append(g)
    return len(seen) == t.n_faces


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------


def _canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    rev = (rot[0],) + tuple(reversed(rot[1:]))
    return min(rot, rev)


@functools.total_ordering
class Cycle:
    """An embedded cycle in the 1-skeleton, in canonical form.

    The stored vertex sequence is the lexicographically least among all
    rotations of the input and of its reversal, so equal curves compare and
    hash equal regardless of traversal.  The constructor checks only shape
    (length >= 3, distinct vertices); use :func:`embedded_cycle` to also
    check that consecutive vertices are edges of a triangulation.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[int]):
        seq = tuple(int(v) for v in vertices)
        if len(seq) < 3:
            raise ValueError(f"cycle must have at least 3 vertices, got {seq}")
        if len(set(seq)) != len(seq):
            raise ValueError(f"cycle repeats a vertex: {seq}")
        object.__setattr__(self, "vertices", _canonical(seq))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Cycle is immutable")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cycle) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __lt__(self, other: "Cycle") -> bool:
        return (len(self.vertices), self.vertices) < (len(other.vertices), other.vertices)

    def __repr__(self) -> str:
        return "Cycle(" + "-".join(map(str, self.vertices)) + ")"


def embedded_cycle(t: Triangulation, vertices: Sequence[int]) -> Cycle:
    """Build a Cycle, checking every consecutive pair is an edge of ``t``."""
    c = Cycle(vertices)
    for e in c.edges:
        if e not in t.edge_faces:
            raise ValueError(f"cycle uses a non-edge {e}")
    return c


@dataclass(frozen=True)
class DiskRegion:
    """One side of a cycle: a dual-connected set of faces with its boundary."""

    faces: frozenset[int]
    boundary: Cycle


def vertex_link(t: Triangulation, v: int) -> Cycle:
    """The cycle of neighbors of ``v`` in rotational order around ``v``.

    Requires a valid sphere (single-cycle links).
    """
    if not 0 <= v < t.n_vertices:
        raise ValueError(f"unknown vertex id {v}")
    adj: dict[int, list[int]] = defaultdict(list)
    for fi in t.vertex_faces[v]:
        a, b = (x for x in t.faces[fi] if x != v)
        adj[a].append(b)
        adj[b].append(a)
    start = min(adj)
    walk = [start]
    prev, cur = None, start
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == start:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    if len(walk) != len(adj):
        raise ValueError(f"link of vertex {v} is not a single cycle")
    return Cycle(walk)


def two_sides(t: Triangulation, c: Cycle) -> tuple[DiskRegion, DiskRegion]:
    """Split the sphere along ``c`` into its two disk regions.

    Faces are partitioned by cutting the dual graph along the cycle's
    edges; the region containing the lowest face index comes first.
    """
    cyc_edges = set(c.edges)
    for e in cyc_edges:
        if e not in t.edge_faces:
            raise ValueError(f"cycle uses a non-edge {e}")
    comp = [-1] * t.n_faces
    n_comp = 0
    for root in range(t.n_faces):
        if comp[root] != -1:
            continue
        comp[root] = n_comp
        queue = deque([root])
        while queue:
            f = queue.popleft()
            for g, e in t.dual_neighbors[f]:
                if e not in cyc_edges and comp[g] == -1:
                    comp[g] = n_comp
                    queue.append(g)
        n_comp += 1
    if n_comp != 2:
        raise ValueError(f"cycle does not split the sphere into two regions (got {n_comp})")
    first = frozenset(i for i, k in enumerate(comp) if k == comp[0])
    second = frozenset(i for i, k in enumerate(comp) if k != comp[0])
    return DiskRegion(first, c), DiskRegion(second, c)


def enumerate_cycles(t: Triangulation, max_len: int) -> list[Cycle]:
    """All embedded cycles of length <= ``max_len``, canonical and sorted.

    Each cycle is generated once: paths start at their minimum vertex and
    the traversal direction is fixed by requiring the second vertex to be
    smaller than the last.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    nbr = t.neighbors
    out: list[Cycle] = []
    path: list[int] = []
    on_path: set[int] = set()

    def extend(root: int) -> None:
        u = path[-1]
        for w in nbr[u]:
            if w == root:
                if len(path) >= 3 and path[1] < path[-1]:
                    out.append(Cycle(path))
                continue
            if w > root and w not in on_path and len(path) < max_len:
                path.append(w)
                on_path.add(w)
                extend(root)
                path.pop()
                on_path.remove(w)

    for root in range(t.n_vertices):
        path[:] = [root]
        on_path = {root}
        extend(root)
    return sorted(out)
