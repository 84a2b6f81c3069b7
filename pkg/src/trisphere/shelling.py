"""Good orderings, boundary profiles, width, and thin-position search.

An ordering of the faces is *good* when every proper prefix union is a
disk.  Operationally: the first face is arbitrary, and each next face
either attaches along exactly one boundary edge with a genuinely new third
vertex (boundary grows by one) or along exactly two adjacent boundary
edges (boundary shrinks by one); the last face closes the sphere along all
three of its edges.  The *profile* is the boundary length after each of
the first n-1 faces; it starts and ends at 3 and steps by exactly one.

The *width* of an ordering is the descending list of the profile's local
maxima; widths compare lexicographically with a proper prefix counting as
smaller, and *thin position* is an ordering of globally minimal width.

Two search strategies are provided.  ``exhaustive`` walks every good
ordering in face-index lexicographic order (small instances only).
``branch-and-bound`` explores shortest-boundary children first, prunes by
a sound width lower bound against the incumbent, and memoizes dominated
(prefix disk, direction, locked maxima) states; it returns the same width
as the exhaustive search and handles instances well past the exhaustive
bound.  Searches share the triangulation read-only; all returned values
are immutable.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .triangulation import Cycle, Edge, Triangulation, validate_sphere

Ordering = tuple[int, ...]
Width = tuple[int, ...]

DEFAULT_BOUND = 12


class BoundExceeded(RuntimeError):
    """An exhaustive operation would exceed the configured face bound."""


class NotGoodOrdering(ValueError):
    """An operation requiring a good ordering received one that is not."""

    def __init__(self, position: int, reason: str):
        super().__init__(f"not a good ordering at position {position}: {reason}")
        self.position = position
        self.reason = reason


@dataclass(frozen=True)
class GoodnessReport:
    ok: bool
    position: int | None = None  # 1-based position of the first violation
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ExtremaReport:
    """Interior local extrema of a profile, as 1-based prefix sizes."""

    maxima: tuple[int, ...]
    minima: tuple[int, ...]


# ---------------------------------------------------------------------------
# replaying an ordering
# ---------------------------------------------------------------------------


def _replay(
    t: Triangulation, order: Sequence[int], collect_boundaries: bool = False
) -> tuple[list[int], list[frozenset[Edge]] | None, tuple[int, str] | None]:
    """Simulate an ordering; returns (profile, boundary edge sets, violation)."""
    n = t.n_faces
    if sorted(order) != list(range(n)):
        raise ValueError("ordering is not a permutation of all face indices")
    boundary: set[Edge] = set()
    verts: set[int] = set()
    prof: list[int] = []
    bsets: list[frozenset[Edge]] | None = [] if collect_boundaries else None
    for k, fi in enumerate(order, 1):
        fe = t.face_edges(fi)
        if k == 1:
            verts.update(t.faces[fi])
        else:
            shared = [j for j in range(3) if fe[j] in boundary]
            if len(shared) == 0:
                return prof, bsets, (k, "face shares no boundary edge with the prefix")
            if len(shared) == 1:
                opp = t.faces[fi][shared[0]]
                if opp in verts:
                    return prof, bsets, (k, f"third vertex {opp} already lies in the prefix")
                verts.add(opp)
            elif len(shared) == 3 and k < n:
                return prof, bsets, (k, "face attaches along all three edges before the last step")
        boundary.symmetric_difference_update(fe)
        if k < n:
            prof.append(len(boundary))
            if bsets is not None:
                bsets.append(frozenset(boundary))
    if boundary:
        return prof, bsets, (n, "boundary nonempty after the final face")
    return prof, bsets, None


def is_good_ordering(t: Triangulation, order: Sequence[int]) -> GoodnessReport:
    """Check the disk condition for every prefix; reports the first violation."""
    _, _, violation = _replay(t, order)
    if violation is None:
        return GoodnessReport(ok=True)
    return GoodnessReport(ok=False, position=violation[0], reason=violation[1])


def profile(t: Triangulation, order: Sequence[int]) -> tuple[int, ...]:
    """Boundary lengths after each of the first n-1 faces of a good ordering."""
    prof, _, violation = _replay(t, order)
    if violation is not None:
        raise NotGoodOrdering(*violation)
    return tuple(prof)


def _cycle_from_edges(edges: Iterable[Edge]) -> Cycle:
    adj: dict[int, list[int]] = defaultdict(list)
    count = 0
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    start = min(adj)
    walk = [start]
    prev, cur = None, start
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == start:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    assert len(walk) == count, "boundary edges do not form a single cycle"
    return Cycle(walk)


def prefix_boundaries(t: Triangulation, order: Sequence[int]) -> tuple[Cycle, ...]:
    """The boundary cycle of every proper prefix of a good ordering."""
    _, bsets, violation = _replay(t, order, collect_boundaries=True)
    if violation is not None:
        raise NotGoodOrdering(*violation)
    assert bsets is not None
    return tuple(_cycle_from_edges(b) for b in bsets)


# ---------------------------------------------------------------------------
# profiles, extrema, widths
# ---------------------------------------------------------------------------


def local_extrema(prof: Sequence[int]) -> ExtremaReport:
    """Strict local extrema at interior positions only.

    A position needs both neighbors for the strict tests, so the endpoints
    (which always sit at 3) are never extrema.
    """
    maxima: list[int] = []
    minima: list[int] = []
    for j in range(1, len(prof) - 1):
        if prof[j - 1] < prof[j] > prof[j + 1]:
            maxima.append(j + 1)
        elif prof[j - 1] > prof[j] < prof[j + 1]:
            minima.append(j + 1)
    return ExtremaReport(tuple(maxima), tuple(minima))


def width_from_profile(prof: Sequence[int]) -> Width:
    """Profile values at the local maxima, sorted descending."""
    ext = local_extrema(prof)
    return tuple(sorted((prof[k - 1] for k in ext.maxima), reverse=True))


def width_of_ordering(t: Triangulation, order: Sequence[int]) -> Width:
    return width_from_profile(profile(t, order))


def compare_width(a: Sequence[int], b: Sequence[int]) -> int:
    """-1/0/1 under descending-lexicographic order; a proper prefix is smaller.

    Python tuple comparison implements exactly this rule for the
    descending-sorted width lists, e.g. ``(4, 4) < (5,)`` and
    ``(5, 4) > (5,)``.
    """
    ta, tb = tuple(a), tuple(b)
    if ta < tb:
        return -1
    if ta > tb:
        return 1
    return 0


def is_bridge(t: Triangulation, order: Sequence[int]) -> bool:
    """True iff the profile has a single local maximum and no local minima."""
    ext = local_extrema(profile(t, order))
    return len(ext.maxima) == 1 and not ext.minima


# ---------------------------------------------------------------------------
# delaying a face to the end
# ---------------------------------------------------------------------------


def reorder_delay(t: Triangulation, order: Sequence[int], position: int) -> Ordering:
    """Move the face at ``position`` (1-based) to the end of the ordering.

    Legal when the face was attached along a single edge and stays a
    boundary-shortening leaf of every later prefix, which forces the two
    faces across its other edges to occupy the final two positions.  The
    delayed ordering is then good and its width never exceeds the original
    (each displaced local maximum drops by one, at the cost of one trailing
    maximum of value 4).  Delaying the last face is the identity.
    """
    n = t.n_faces
    order = tuple(order)
    if sorted(order) != list(range(n)):
        raise ValueError("ordering is not a permutation of all face indices")
    if not 1 <= position <= n:
        raise ValueError(f"position must be in [1, {n}], got {position}")
    if position == n:
        return order
    fi = order[position - 1]
    before = set(order[: position - 1])

    def across(e: Edge) -> int:
        fs = t.edge_faces[e]
        return fs[0] if fs[1] == fi else fs[1]

    neighbors = [across(e) for e in t.face_edges(fi)]
    attached = [g for g in neighbors if g in before]
    if len(attached) != 1:
        raise ValueError(
            f"face {fi} at position {position} was not attached along a single edge; "
            "it gives no shortening move of its prefix boundary"
        )
    tail = {order[-1], order[-2]}
    outer = [g for g in neighbors if g not in attached]
    if any(g not in tail for g in outer):
        raise ValueError(
            f"face {fi} at position {position} is buried before the end of the ordering; "
            "delaying it would break the disk condition"
        )
    delayed = order[: position - 1] + order[position:] + (fi,)
    rep = is_good_ordering(t, delayed)
    assert rep.ok, f"delayed ordering unexpectedly not good: {rep}"
    return delayed


# ---------------------------------------------------------------------------
# thin position search
# ---------------------------------------------------------------------------


def _kernel(t: Triangulation):
    """Bitmask tables: per-face edge ids, edge mask, opposite vertices, vertex mask."""
    eindex = {e: i for i, e in enumerate(t.edges)}
    face_eids = []
    face_emask = []
    for fi in range(t.n_faces):
        eids = tuple(eindex[e] for e in t.face_edges(fi))
        face_eids.append(eids)
        face_emask.append((1 << eids[0]) | (1 << eids[1]) | (1 << eids[2]))
    face_opp = list(t.faces)  # vertex j is opposite edge j
    face_vmask = [(1 << a) | (1 << b) | (1 << c) for a, b, c in t.faces]
    return face_eids, face_emask, face_opp, face_vmask


def _lock(locked: Width, value: int) -> Width:
    """Insert a maximum into a descending width tuple."""
    for i, x in enumerate(locked):
        if value > x:
            return locked[:i] + (value,) + locked[i:]
    return locked + (value,)


def _search_exhaustive(t: Triangulation) -> tuple[Ordering, Width]:
    """Minimal width over all good orderings, lexicographically first winner.

    Orderings whose first face index exceeds their last are skipped: the
    reverse of a good ordering is good with the same width, and the
    lexicographically least optimal ordering always has first < last.
    """
    n = t.n_faces
    face_eids, face_emask, face_opp, face_vmask = _kernel(t)
    best_w: Width | None = None
    best_o: Ordering | None = None
    order = [0] * n

    def rec(count, placed, bmask, vmask, p, locked, dir_up):
        nonlocal best_w, best_o
        if count == n - 1:
            last = (((1 << n) - 1) ^ placed).bit_length() - 1
            if order[0] > last:
                return
            if best_w is None or locked < best_w:
                order[n - 1] = last
                best_w = locked
                best_o = tuple(order)
            return
        nl = _lock(locked, p) if dir_up else locked
        for f in range(n):
            if placed >> f & 1:
                continue
            e0, e1, e2 = face_eids[f]
            s = (bmask >> e0 & 1) + (bmask >> e1 & 1) + (bmask >> e2 & 1)
            if s == 1:
                j = 0 if bmask >> e0 & 1 else (1 if bmask >> e1 & 1 else 2)
                opp = face_opp[f][j]
                if vmask >> opp & 1:
                    continue
                order[count] = f
                rec(count + 1, placed | 1 << f, bmask ^ face_emask[f],
                    vmask | 1 << opp, p + 1, locked, True)
            elif s == 2:
                order[count] = f
                rec(count + 1, placed | 1 << f, bmask ^ face_emask[f],
                    vmask, p - 1, nl, False)

    for f0 in range(n):
        order[0] = f0
        rec(1, 1 << f0, face_emask[f0], face_vmask[f0], 3, (), False)
    assert best_w is not None and best_o is not None
    return best_o, best_w


def _greedy_from(n, face_eids, face_emask, face_opp, face_vmask, f0) -> tuple[Width, Ordering]:
    """One cheap completion preferring boundary-shrinking moves; seeds the incumbent."""
    order = [f0]
    placed = 1 << f0
    bmask = face_emask[f0]
    vmask = face_vmask[f0]
    p = 3
    locked: Width = ()
    dir_up = False
    while len(order) < n - 1:
        best = None  # (p_new, f, opp or -1)
        for f in range(n):
            if placed >> f & 1:
                continue
            e0, e1, e2 = face_eids[f]
            s = (bmask >> e0 & 1) + (bmask >> e1 & 1) + (bmask >> e2 & 1)
            if s == 2:
                cand = (p - 1, f, -1)
            elif s == 1:
                j = 0 if bmask >> e0 & 1 else (1 if bmask >> e1 & 1 else 2)
                opp = face_opp[f][j]
                if vmask >> opp & 1:
                    continue
                cand = (p + 1, f, opp)
            else:
                continue
            if best is None or cand[:2] < best[:2]:
                best = cand
        assert best is not None, "good prefix with no legal extension"
        pn, f, opp = best
        if pn < p and dir_up:
            locked = _lock(locked, p)
        dir_up = pn > p
        placed |= 1 << f
        bmask ^= face_emask[f]
        if opp >= 0:
            vmask |= 1 << opp
        p = pn
        order.append(f)
    order.append((((1 << n) - 1) ^ placed).bit_length() - 1)
    return locked, tuple(order)


def _search_branch_and_bound(t: Triangulation) -> tuple[Ordering, Width]:
    """Exact thin position via incumbent-pruned search.

    Pruning is sound because completing an ordering can only append values
    to the set of locked maxima (and top off the current ascent at >= the
    running boundary length), which never makes the width list smaller.
    Visited (prefix disk, direction, locked maxima) states that dominate a
    new state make re-exploration pointless and are skipped.
    """
    n = t.n_faces
    face_eids, face_emask, face_opp, face_vmask = _kernel(t)
    full_v = (1 << t.n_vertices) - 1

    best_w: Width | None = None
    best_o: Ordering | None = None
    for f0 in range(n):
        w, o = _greedy_from(n, face_eids, face_emask, face_opp, face_vmask, f0)
        if best_w is None or w < best_w:
            best_w, best_o = w, o
    assert best_w is not None

    memo: dict[int, list[Width]] = {}
    order = [0] * n

    def rec(count, placed, bmask, vmask, p, locked, dir_up):
        nonlocal best_w, best_o
        if dir_up:
            bound = _lock(locked, p)
        elif vmask != full_v:
            bound = _lock(locked, 4)  # some future ascent must top out at >= 4
        else:
            bound = locked
        if bound >= best_w:
            return
        if count == n - 1:
            if locked < best_w:
                order[n - 1] = (((1 << n) - 1) ^ placed).bit_length() - 1
                best_w = locked
                best_o = tuple(order)
            return
        key = placed * 2 + dir_up
        front = memo.get(key)
        if front is None:
            memo[key] = [locked]
        else:
            nl = len(locked)
            for w in front:
                if len(w) <= nl and all(w[i] <= locked[i] for i in range(len(w))):
                    return
            front[:] = [
                w for w in front
                if not (nl <= len(w) and all(locked[i] <= w[i] for i in range(nl)))
            ]
            front.append(locked)

        downs = []
        ups = []
        for f in range(n):
            if placed >> f & 1:
                continue
            e0, e1, e2 = face_eids[f]
            s = (bmask >> e0 & 1) + (bmask >> e1 & 1) + (bmask >> e2 & 1)
            if s == 2:
                downs.append(f)
            elif s == 1:
                j = 0 if bmask >> e0 & 1 else (1 if bmask >> e1 & 1 else 2)
                opp = face_opp[f][j]
                if not vmask >> opp & 1:
                    ups.append((f, opp))
        nl_locked = _lock(locked, p) if dir_up else locked
        for f in downs:
            order[count] = f
            rec(count + 1, placed | 1 << f, bmask ^ face_emask[f],
                vmask, p - 1, nl_locked, False)
        for f, opp in ups:
            order[count] = f
            rec(count + 1, placed | 1 << f, bmask ^ face_emask[f],
                vmask | 1 << opp, p + 1, locked, True)

    for f0 in range(n):
        order[0] = f0
        rec(1, 1 << f0, face_emask[f0], face_vmask[f0], 3, (), False)
    assert best_o is not None
    return best_o, best_w


def thin_position(
    t: Triangulation,
    strategy: str = "branch-and-bound",
    bound: int = DEFAULT_BOUND,
) -> tuple[Ordering, Width]:
    """A good ordering of globally minimal width, with that width.

    ``exhaustive`` requires ``t.n_faces <= bound`` and returns the
    lexicographically least optimal ordering; ``branch-and-bound`` is exact
    with no bound and deterministic for a fixed input.  The returned
    ordering is re-verified through the plain replay path before returning.
    """
    rep = validate_sphere(t)
    if not rep.ok:
        raise ValueError(
            "not a valid triangulated sphere: " + "; ".join(f.witness for f in rep.failures)
        )
    if strategy == "exhaustive":
        if t.n_faces > bound:
            raise BoundExceeded(f"exhaustive search needs F <= {bound}, got F = {t.n_faces}")
        order, width = _search_exhaustive(t)
    elif strategy == "branch-and-bound":
        order, width = _search_branch_and_bound(t)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    replay_width = width_of_ordering(t, order)
    assert replay_width == width, f"search width {width} disagrees with replay {replay_width}"
    return order, width
