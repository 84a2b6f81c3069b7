"""Local moves on embedded cycles and geodesic classification.

A triangle meeting a cycle in exactly two (necessarily adjacent) edges
gives a shortening move: the two edges are replaced by the triangle's
third edge.  A triangle meeting the cycle in exactly one edge, whose third
vertex is off the cycle, gives a lengthening move: the edge is replaced by
the other two.  Both preserve embeddedness and change the length by one.

A cycle with no shortening moves that is not a face boundary is a stable
geodesic.  A cycle with shortening moves on both of its sides, such that
every opposite-side pair of shortening triangles shares a cycle edge (so
the two moves cannot be performed simultaneously), is an unstable
geodesic.

All functions are pure over immutable inputs and safe to call
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .triangulation import Cycle, Edge, Triangulation, edge_key, two_sides

SHORTENING = "shortening"
LENGTHENING = "lengthening"

TRIANGLE_BOUNDARY = "triangle-boundary"
STABLE = "stable-geodesic"
UNSTABLE = "unstable-geodesic"
NEITHER = "neither"


@dataclass(frozen=True)
class LocalMove:
    """A legal move across one face, tagged with the side holding the face."""

    kind: str
    face: int
    side: int
    replaced_edges: tuple[Edge, ...]
    inserted_edges: tuple[Edge, ...]


@dataclass(frozen=True)
class CycleClass:
    """Classification of a cycle with its witnessing shortening moves.

    ``blocking_edges`` is set for unstable geodesics only: one entry
    ``(face_1, face_2, shared_edge)`` per cross-side pair of shortening
    triangles, the shared edge lying on the cycle.
    """

    tag: str
    shortenings: tuple[LocalMove, ...] = ()
    blocking_edges: tuple[tuple[int, int, Edge], ...] | None = None


def local_moves(t: Triangulation, c: Cycle) -> list[LocalMove]:
    """All legal moves on ``c``, in face-index order.

    A face sharing two edges with a 3-cycle would be the cycle itself, so
    shortenings of 3-cycles are impossible by construction; a lengthening
    whose new vertex already lies on the cycle is excluded.
    """
    cyc_edges = set(c.edges)
    for e in cyc_edges:
        if e not in t.edge_faces:
            raise ValueError(f"cycle uses a non-edge {e}")
    region_a, region_b = two_sides(t, c)
    on_cycle = set(c.vertices)
    moves: list[LocalMove] = []
    for fi in range(t.n_faces):
        fe = t.face_edges(fi)
        shared = [j for j in range(3) if fe[j] in cyc_edges]
        side = 0 if fi in region_a.faces else 1
        if len(shared) == 2:
            third = ({0, 1, 2} - set(shared)).pop()
            moves.append(
                LocalMove(
                    kind=SHORTENING,
                    face=fi,
                    side=side,
                    replaced_edges=(fe[shared[0]], fe[shared[1]]),
                    inserted_edges=(fe[third],),
                )
            )
        elif len(shared) == 1:
            j = shared[0]
            opp = t.faces[fi][j]  # vertex j is opposite edge j
            if opp not in on_cycle:
                others = tuple(fe[k] for k in range(3) if k != j)
                moves.append(
                    LocalMove(
                        kind=LENGTHENING,
                        face=fi,
                        side=side,
                        replaced_edges=(fe[j],),
                        inserted_edges=others,
                    )
                )
    return moves


def apply_move(t: Triangulation, c: Cycle, m: LocalMove) -> Cycle:
    """Apply a move produced by :func:`local_moves` for this cycle."""
    if m not in local_moves(t, c):
        raise ValueError(f"move {m} is not legal for {c}")
    vs = list(c.vertices)
    k = len(vs)
    if m.kind == SHORTENING:
        (e1, e2) = m.replaced_edges
        mid = (set(e1) & set(e2)).pop()
        vs.remove(mid)
        return Cycle(vs)
    a, b = m.replaced_edges[0]
    opp = next(v for v in t.faces[m.face] if v not in (a, b))
    for i in range(k):
        u, v = vs[i], vs[(i + 1) % k]
        if edge_key(u, v) == (a, b):
            vs.insert(i + 1, opp)
            return Cycle(vs)
    raise AssertionError("replaced edge not found on cycle")


def inverse_move(t: Triangulation, after: Cycle, m: LocalMove) -> LocalMove:
    """The move across the same face that undoes ``m`` on the moved cycle."""
    want = LENGTHENING if m.kind == SHORTENING else SHORTENING
    for cand in local_moves(t, after):
        if cand.face == m.face and cand.kind == want:
            return cand
    raise ValueError(f"no inverse of {m} on {after}")


def classify_cycle(t: Triangulation, c: Cycle) -> CycleClass:
    """Classify ``c`` as triangle boundary, stable, unstable or neither.

    Triangle boundaries are recognized first.  Stable: no shortening moves.
    Unstable: shortening moves on both sides and every cross-side pair of
    shortening triangles meets in an edge of the cycle.  Anything else
    (including shortenings on one side only) is neither.  Lengthening moves
    play no role in the classification.
    """
    if len(c) == 3 and tuple(sorted(c.vertices)) in t.face_set:
        return CycleClass(tag=TRIANGLE_BOUNDARY)
    shorts = tuple(m for m in local_moves(t, c) if m.kind == SHORTENING)
    if not shorts:
        return CycleClass(tag=STABLE)
    side0 = [m for m in shorts if m.side == 0]
    side1 = [m for m in shorts if m.side == 1]
    if not side0 or not side1:
        return CycleClass(tag=NEITHER, shortenings=shorts)
    cyc_edges = set(c.edges)
    pairs: list[tuple[int, int, Edge]] = []
    for m0 in side0:
        for m1 in side1:
            common = set(t.faces[m0.face]) & set(t.faces[m1.face])
            if len(common) != 2:
                return CycleClass(tag=NEITHER, shortenings=shorts)
            e = edge_key(*common)
            if e not in cyc_edges:
                return CycleClass(tag=NEITHER, shortenings=shorts)
            pairs.append((m0.face, m1.face, e))
    return CycleClass(tag=UNSTABLE, shortenings=shorts, blocking_edges=tuple(pairs))


def greedy_shorten(t: Triangulation, c: Cycle) -> tuple[Cycle, CycleClass]:
    """Apply shortening moves until none remain; ties break on lowest
    (face index, side).  Terminates in at most ``len(c) - 3`` steps and the
    terminal cycle is a triangle boundary or a stable geodesic.
    """
    cur = c
    while True:
        shorts = [m for m in local_moves(t, cur) if m.kind == SHORTENING]
        if not shorts:
            break
        move = min(shorts, key=lambda m: (m.face, m.side))
        cur = apply_move(t, cur, move)
    return cur, classify_cycle(t, cur)
