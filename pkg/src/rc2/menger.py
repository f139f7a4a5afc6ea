"""Finding two internally disjoint paths from a vertex into a subgraph.

Given a 2-connected graph and a vertex v0 outside an anchor set, a "fan"
is a pair of paths from v0 to two distinct anchor vertices that share only
v0 and touch the anchor set only at their endpoints.  In a 2-connected
graph such a fan always exists when the anchor set has at least two
vertices; we find one with a small max-flow computation so that the whole
construction stays deterministic.
"""

from __future__ import annotations

from collections import deque

from .errors import NoFan, PreconditionViolated
from .graphs import Graph, Path, VertexSet


def two_fan_to_subgraph(g: Graph, anchors: VertexSet, v0: int) -> tuple[Path, Path]:
    """Two paths from v0 to distinct anchor vertices, disjoint except at v0.

    Internal path vertices avoid ``anchors`` entirely.  The returned pair is
    sorted by terminal anchor id.  Raises NoFan when no such pair exists and
    PreconditionViolated on malformed arguments.
    """
    if v0 in anchors:
        raise PreconditionViolated(f"fan source {v0} lies in the anchor set")
    if len(anchors) < 2:
        raise PreconditionViolated("need at least two anchor vertices")
    if not (0 <= v0 < g.vertex_count):
        raise PreconditionViolated(f"vertex {v0} out of range")

    # Vertex-split flow network: vertex v becomes nodes 2v (in) and 2v+1
    # (out), with a unit-capacity arc between them so each vertex is used by
    # at most one path.  Anchor in-nodes feed a shared sink; anchors have no
    # out-arcs, so paths stop on first contact with the anchor set.
    n = g.vertex_count
    sink = 2 * n
    source = 2 * v0 + 1
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, set[int]] = {}
    forward: list[tuple[int, int]] = []

    def add_arc(a: int, b: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + 1
        cap.setdefault((b, a), 0)
        forward.append((a, b))
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    for v in range(n):
        if v in anchors:
            add_arc(2 * v, sink)
        elif v != v0:
            add_arc(2 * v, 2 * v + 1)
    for u, v in sorted(g.edges):
        for x, y in ((u, v), (v, u)):
            if x in anchors or y == v0:
                continue
            add_arc(2 * x + 1, 2 * y)

    sorted_adj = {a: sorted(bs) for a, bs in adj.items()}

    def augment() -> bool:
        prev: dict[int, int] = {source: source}
        queue = deque([source])
        while queue:
            a = queue.popleft()
            if a == sink:
                break
            for b in sorted_adj.get(a, ()):
                if b not in prev and cap.get((a, b), 0) > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return False
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        return True

    flow = 0
    while flow < 2 and augment():
        flow += 1
    if flow < 2:
        raise NoFan(f"no two disjoint paths from {v0} into the anchor set")

    # Trace the two unit flows.  An original arc carries flow equal to its
    # reverse residual capacity; following the smallest usable successor
    # keeps the output deterministic.
    used: dict[tuple[int, int], int] = {
        (a, b): cap[(b, a)] for (a, b) in forward if cap[(b, a)] > 0
    }

    def trace() -> Path:
        verts = [v0]
        node = source
        while True:
            nxt = min(b for b in sorted_adj.get(node, ()) if used.get((node, b), 0) > 0)
            used[(node, nxt)] -= 1
            if nxt == sink:
                return Path(tuple(verts))
            if nxt % 2 == 0:
                verts.append(nxt // 2)
            node = nxt

    paths = [trace(), trace()]
    paths.sort(key=lambda p: p.last)
    return paths[0], paths[1]
