"""Checking colorings against the rainbow-2-connection property.

A path is rainbow when its edges all have distinct colors.  The headline
check, :func:`is_rainbow_two_connected`, confirms that every vertex pair is
joined by two rainbow paths sharing only their endpoints.  The checks are
exhaustive path enumerations, so a :class:`~rc2.reports.SizeGuard` refuses
inputs that would blow up; a refused check comes back as a skipped report,
never as a silent pass.

:func:`check_induction_invariants` replays a traced construction level by
level and confirms the stronger inductive properties (tags A1-A5, B1, B2 in
:mod:`rc2.reports`) that justify recycling a color at each ear attachment.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Mapping, Sequence

from .coloring import ColoringResult, EdgeColoring, UniqueColorMap
from .errors import InvalidInput, InvalidSpec, TraceMissing
from .graphs import Graph, VertexSet, edge
from .reports import (
    DEFAULT_GUARD,
    SizeGuard,
    VerificationReport,
    Violation,
    failing,
    passing,
    skipped,
)


def enumerate_rainbow_paths(
    g: Graph,
    coloring: EdgeColoring,
    u: int,
    v: int,
    forbidden_vertices: VertexSet = frozenset(),
    forbidden_colors: frozenset[int] = frozenset(),
) -> Iterator[tuple[int, ...]]:
    """All rainbow u-v paths, in lexicographic vertex order.

    Edges missing from the coloring are unusable.  ``forbidden_vertices``
    bans vertices outright (do not ban the endpoints), ``forbidden_colors``
    bans colors.
    """
    if u == v:
        raise InvalidInput("path endpoints must differ")
    adj = g.adjacency()
    assign = coloring.assignment
    path = [u]
    visited = {u}
    used_colors: set[int] = set()

    def walk(cur: int) -> Iterator[tuple[int, ...]]:
        for nxt in adj[cur]:
            if nxt in forbidden_vertices or nxt in visited:
                continue
            color = assign.get(edge(cur, nxt))
            if color is None or color in used_colors or color in forbidden_colors:
                continue
            if nxt == v:
                yield tuple(path) + (v,)
                continue
            visited.add(nxt)
            path.append(nxt)
            used_colors.add(color)
            yield from walk(nxt)
            used_colors.discard(color)
            path.pop()
            visited.discard(nxt)

    yield from walk(u)


def has_two_internally_disjoint_rainbow_paths(
    g: Graph, coloring: EdgeColoring, u: int, v: int
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """First pair of rainbow u-v paths that share only their endpoints."""
    seen: list[tuple[int, ...]] = []
    for p in enumerate_rainbow_paths(g, coloring, u, v):
        interior = set(p[1:-1])
        for q in seen:
            if not (interior & set(q[1:-1])):
                return True, (q, p)
        seen.append(p)
    return False, None


def is_rainbow_two_connected(
    g: Graph, coloring: EdgeColoring, guard: SizeGuard = DEFAULT_GUARD
) -> VerificationReport:
    """Exhaustively verify the headline property over all vertex pairs."""
    if set(coloring.assignment) != g.edges:
        raise InvalidInput("coloring must cover exactly the graph's edges")
    if not guard.allows(g.vertex_count, g.edge_count):
        return skipped(
            "A1",
            f"graph with {g.vertex_count} vertices / {g.edge_count} edges "
            f"exceeds the size guard ({guard.max_vertices}, {guard.max_edges})",
        )
    count = 0
    for u, v in combinations(range(g.vertex_count), 2):
        ok, _ = has_two_internally_disjoint_rainbow_paths(g, coloring, u, v)
        if not ok:
            return failing(
                "A1",
                [Violation("A1", (u, v), "no two internally disjoint rainbow paths")],
            )
        count += 1
    return passing("A1", [("pairs_checked", count)])


def check_fan(
    g: Graph, coloring: EdgeColoring, center: int, t1: int, t2: int
) -> tuple[bool, tuple | None]:
    """Two rainbow paths from ``center`` to t1 and t2 sharing only the center."""
    if len({center, t1, t2}) != 3:
        raise InvalidInput("fan check needs three distinct vertices")
    for p in enumerate_rainbow_paths(g, coloring, center, t1):
        pset = set(p)
        for q in enumerate_rainbow_paths(g, coloring, center, t2):
            if pset & set(q) == {center}:
                return True, (p, q)
    return False, None


def check_linkage(
    g: Graph, coloring: EdgeColoring, quad: Sequence[int]
) -> tuple[bool, tuple | None]:
    """Some pairing of four vertices joined by fully disjoint rainbow paths.

    The three ways to split the four vertices into two pairs are tried in
    order; the first split admitting vertex-disjoint rainbow paths wins.
    """
    a, b, c, d = sorted(quad)
    if len({a, b, c, d}) != 4:
        raise InvalidInput("linkage check needs four distinct vertices")
    for pair1, pair2 in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
        for p in enumerate_rainbow_paths(g, coloring, *pair1):
            pset = set(p)
            for q in enumerate_rainbow_paths(g, coloring, *pair2):
                if not (pset & set(q)):
                    return True, (pair1, pair2, p, q)
    return False, None


def _color_map_violations(
    coloring: EdgeColoring, mapping: Mapping[int, int], prefix: tuple = ()
) -> list[Violation]:
    out: list[Violation] = []
    first_owner: dict[int, int] = {}
    for v, c in sorted(mapping.items()):
        if c in first_owner:
            out.append(
                Violation("A4", prefix + (first_owner[c], v), f"vertices share color {c}")
            )
        else:
            first_owner[c] = v
    by_color: dict[int, list] = {}
    for e, c in coloring.assignment.items():
        by_color.setdefault(c, []).append(e)
    for v, c in sorted(mapping.items()):
        hits = sorted(by_color.get(c, []))
        if len(hits) != 1:
            out.append(
                Violation("A5", prefix + (v, c), f"color {c} sits on {len(hits)} edges, not one")
            )
        elif v not in hits[0]:
            out.append(
                Violation("A5", prefix + (v, c), f"color {c} sits on {hits[0]}, not incident to {v}")
            )
    return out


def check_unique_color_map(
    coloring: EdgeColoring, mapping: UniqueColorMap | Mapping[int, int]
) -> VerificationReport:
    """Injectivity plus single-use incidence of a vertex color map."""
    raw = mapping.mapping if isinstance(mapping, UniqueColorMap) else dict(mapping)
    violations = _color_map_violations(coloring, raw)
    if violations:
        return failing("A4/A5", violations)
    return passing("A4/A5", [("entries", len(raw))])


# ---------------------------------------------------------------------------
# induction replay


def _pair_key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _all_pair_paths(sub: Graph, coloring: EdgeColoring, verts: list[int]):
    """All rainbow paths per vertex pair: (vertex set, color set, path)."""
    cache: dict[tuple[int, int], list[tuple[frozenset, frozenset, tuple]]] = {}
    for u, v in combinations(verts, 2):
        entries = []
        for p in enumerate_rainbow_paths(sub, coloring, u, v):
            colors = frozenset(coloring.color_of(a, b) for a, b in zip(p, p[1:]))
            entries.append((frozenset(p), colors, p))
        entries.sort(key=lambda t: (len(t[2]), t[2]))
        cache[(u, v)] = entries
    return cache


def check_induction_invariants(
    result: ColoringResult, g: Graph, guard: SizeGuard = DEFAULT_GUARD
) -> VerificationReport:
    """Replay a traced ear-by-ear coloring and verify every level.

    Checks per level: A1 (disjoint rainbow pairs), A2 (rainbow fans), A3
    (pairable quadruples), A4/A5 (the vertex color map contract).  For each
    attachment also B1 (a prior-level rainbow path between the ear's
    endpoints avoiding the recycled color) and B2 (the recycled color sat on
    exactly one prior-level edge, at the ear's smaller endpoint).  Stops at
    the first violation.
    """
    if result.trace is None:
        raise TraceMissing("color the graph with tracing enabled first")
    if not guard.allows(g.vertex_count, g.edge_count):
        return skipped(
            "induction",
            f"graph with {g.vertex_count} vertices / {g.edge_count} edges "
            f"exceeds the size guard ({guard.max_vertices}, {guard.max_edges})",
        )

    prev_cache = None
    prev_step = None
    levels_checked = 0
    for idx, step in enumerate(result.trace):
        sub = Graph(g.vertex_count, step.edges)
        verts = sorted(step.vertices)
        cache = _all_pair_paths(sub, step.coloring, verts)

        if idx > 0:
            ear = step.ear
            assert ear is not None and prev_cache is not None and prev_step is not None
            v1, vq = (ear.first, ear.last) if ear.first < ear.last else (ear.last, ear.first)
            recycled = step.recycled_color
            entries = prev_cache.get(_pair_key(v1, vq), [])
            if not any(recycled not in colors for _, colors, _ in entries):
                return failing(
                    "induction",
                    [
                        Violation(
                            "B1",
                            (idx, v1, vq, recycled),
                            "no prior-level rainbow path between ear endpoints avoids the recycled color",
                        )
                    ],
                )
            hits = [e for e in sorted(prev_step.edges) if prev_step.coloring.assignment[e] == recycled]
            if len(hits) != 1 or v1 not in hits[0]:
                return failing(
                    "induction",
                    [
                        Violation(
                            "B2",
                            (idx, v1, recycled),
                            f"recycled color {recycled} sits on {hits}, expected one edge at {v1}",
                        )
                    ],
                )

        for (u, v), entries in sorted(cache.items()):
            both = frozenset((u, v))
            ok = any(
                entries[i][0] & entries[j][0] == both
                for i in range(len(entries))
                for j in range(i + 1, len(entries))
            )
            if not ok:
                return failing(
                    "induction",
                    [Violation("A1", (idx, u, v), "no two internally disjoint rainbow paths")],
                )

        for center in verts:
            others = [x for x in verts if x != center]
            for t1, t2 in combinations(others, 2):
                e1 = cache[_pair_key(center, t1)]
                e2 = cache[_pair_key(center, t2)]
                ok = any(
                    p1 & p2 == frozenset((center,))
                    for p1, _, _ in e1
                    for p2, _, _ in e2
                )
                if not ok:
                    return failing(
                        "induction",
                        [Violation("A2", (idx, center, t1, t2), "no rainbow fan")],
                    )

        for quad in combinations(verts, 4):
            a, b, c, d = quad
            ok = False
            for pair1, pair2 in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
                if any(
                    not (p1 & p2)
                    for p1, _, _ in cache[pair1]
                    for p2, _, _ in cache[pair2]
                ):
                    ok = True
                    break
            if not ok:
                return failing(
                    "induction",
                    [Violation("A3", (idx,) + quad, "no pairing with disjoint rainbow paths")],
                )

        map_violations = _color_map_violations(step.coloring, step.color_map.mapping, (idx,))
        if map_violations:
            return failing("induction", map_violations[:1])

        prev_cache = cache
        prev_step = step
        levels_checked += 1

    return passing("induction", [("levels_checked", levels_checked)])


# ---------------------------------------------------------------------------
# exhaustive feasibility index for the brute-force oracle


class RainbowIndex:
    """Precomputed simple paths for testing many colorings of one graph.

    Simple paths and their internally disjoint pairings depend only on the
    graph, so they are enumerated once; each candidate coloring then only
    pays for rainbow tests, memoized per path.  Intended for tiny graphs --
    construction refuses anything past 10 vertices or 28 edges.
    """

    def __init__(self, g: Graph, max_vertices: int = 10, max_edges: int = 28):
        if g.vertex_count > max_vertices or g.edge_count > max_edges:
            raise InvalidSpec(
                f"graph with {g.vertex_count} vertices / {g.edge_count} edges "
                "is too large to index exhaustively"
            )
        self.graph = g
        self.edge_list = sorted(g.edges)
        eid = {e: i for i, e in enumerate(self.edge_list)}
        adj = g.adjacency()

        self.path_edges: list[tuple[int, ...]] = []
        path_internal: list[frozenset] = []
        pair_gids: dict[tuple[int, int], list[int]] = {}

        for u, v in combinations(range(g.vertex_count), 2):
            gids: list[int] = []
            path = [u]
            visited = {u}

            def walk(cur: int) -> None:
                for nxt in adj[cur]:
                    if nxt == v:
                        seq = path + [v]
                        self.path_edges.append(
                            tuple(eid[edge(a, b)] for a, b in zip(seq, seq[1:]))
                        )
                        path_internal.append(frozenset(seq[1:-1]))
                        gids.append(len(self.path_edges) - 1)
                        continue
                    if nxt in visited:
                        continue
                    visited.add(nxt)
                    path.append(nxt)
                    walk(nxt)
                    path.pop()
                    visited.discard(nxt)

            walk(u)
            pair_gids[(u, v)] = gids

        self.disjoint_pairs: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for pair, gids in pair_gids.items():
            self.disjoint_pairs[pair] = [
                (i, j)
                for a, i in enumerate(gids)
                for j in gids[a + 1 :]
                if not (path_internal[i] & path_internal[j])
            ]
        # Check stingiest pairs first: fewer options means faster failures.
        self.pair_order = sorted(self.disjoint_pairs, key=lambda p: (len(self.disjoint_pairs[p]), p))

    def feasible(self, colors: Sequence[int]) -> bool:
        """Does this edge coloring (indexed like ``edge_list``) make the
        graph rainbow-2-connected?"""
        memo: list[int] = [-1] * len(self.path_edges)

        def rainbow(gid: int) -> bool:
            if memo[gid] < 0:
                eids = self.path_edges[gid]
                cs = {colors[e] for e in eids}
                memo[gid] = 1 if len(cs) == len(eids) else 0
            return memo[gid] == 1

        for pair in self.pair_order:
            if not any(rainbow(i) and rainbow(j) for i, j in self.disjoint_pairs[pair]):
                return False
        return True
