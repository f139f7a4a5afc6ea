"""Core graph types, parsing, serialization, and connectivity primitives.

Vertices are dense integer ids ``0..n-1``.  Edges are unordered pairs stored
as ``(min, max)`` tuples.  Parsed files may name vertices; names live in an
optional side table and everything downstream works on the integer ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidInput, NotACycle, NotApplicable

Edge = tuple[int, int]
VertexSet = frozenset[int]


def edge(u: int, v: int) -> Edge:
    """The normalized form of an undirected edge."""
    return (u, v) if u < v else (v, u)


def canonical_json(obj) -> str:
    """Deterministic JSON rendering used for every serialized artifact."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = None

    @staticmethod
    def from_edges(
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: tuple[str, ...] | None = None,
    ) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidInput(f"edge ({u}, {v}) out of range for n={vertex_count}")
            norm.add(edge(u, v))
        return Graph(vertex_count, frozenset(norm), labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def adjacency(self) -> dict[int, list[int]]:
        """Adjacency lists, sorted ascending for deterministic traversal."""
        adj: dict[int, list[int]] = {v: [] for v in range(self.vertex_count)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def covered_vertices(self) -> VertexSet:
        """Vertices incident to at least one edge."""
        return frozenset(v for e in self.edges for v in e)

    def to_json_obj(self) -> dict:
        return {"n": self.vertex_count, "edges": [list(e) for e in sorted(self.edges)]}


@dataclass(frozen=True)
class Path:
    """A sequence of distinct vertices.  Closed cycles are stored without
    repeating the first vertex; the wrap-around edge is implicit."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise InvalidInput("empty path")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidInput(f"repeated vertex in path {self.vertices}")

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def edges(self) -> list[Edge]:
        return [edge(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def reversed_(self) -> "Path":
        return Path(tuple(reversed(self.vertices)))

    def __len__(self) -> int:
        return len(self.vertices)


# ---------------------------------------------------------------------------
# parsing and serialization


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines into a graph.

    Blank lines and lines starting with ``#`` are skipped.  When every token
    is a non-negative integer the tokens are used as vertex ids directly and
    the vertex count is one past the largest id.  Otherwise the whole file is
    treated as named vertices: ids are assigned by first appearance and the
    names are kept in ``Graph.labels``.  Self-loops and duplicate edges are
    rejected with the offending line number.
    """
    rows: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InvalidInput(f"expected two vertex tokens, got {len(tokens)}", line=lineno)
        rows.append((lineno, tokens[0], tokens[1]))

    numeric = all(t.isdigit() for _, a, b in rows for t in (a, b))
    labels: tuple[str, ...] | None = None
    pairs: list[tuple[int, int, int]] = []
    if numeric:
        for lineno, a, b in rows:
            pairs.append((lineno, int(a), int(b)))
        n = max((max(u, v) for _, u, v in pairs), default=-1) + 1
    else:
        ids: dict[str, int] = {}
        for lineno, a, b in rows:
            for t in (a, b):
                if t not in ids:
                    ids[t] = len(ids)
            pairs.append((lineno, ids[a], ids[b]))
        n = len(ids)
        labels = tuple(sorted(ids, key=ids.get))

    seen: set[Edge] = set()
    for lineno, u, v in pairs:
        if u == v:
            raise InvalidInput("self-loop", line=lineno)
        e = edge(u, v)
        if e in seen:
            raise InvalidInput(f"duplicate edge {e}", line=lineno)
        seen.add(e)
    return Graph(n, frozenset(seen), labels)


def edge_list_text(g: Graph) -> str:
    """Render a graph back to ``u v`` lines, sorted, one edge per line."""
    return "".join(f"{u} {v}\n" for u, v in sorted(g.edges))


def graph_to_json(g: Graph) -> str:
    return canonical_json(g.to_json_obj())


def graph_from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise InvalidInput('graph JSON needs keys "n" and "edges"')
    n = obj["n"]
    raw = obj["edges"]
    if not isinstance(n, int) or n < 0 or not isinstance(raw, list):
        raise InvalidInput("graph JSON has malformed fields")
    seen: set[Edge] = set()
    for item in raw:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise InvalidInput(f"bad edge entry {item!r}")
        u, v = item
        if u == v:
            raise InvalidInput(f"self-loop at vertex {u}")
        e = edge(u, v)
        if e in seen:
            raise InvalidInput(f"duplicate edge {e}")
        seen.add(e)
    return Graph.from_edges(n, seen)


# ---------------------------------------------------------------------------
# connectivity


def _adjacency_of(edges: Iterable[Edge]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for nbrs in adj.values():
        nbrs.sort()
    return adj


def _is_connected(vertices: Sequence[int], adj: Mapping[int, Sequence[int]]) -> bool:
    verts = set(vertices)
    if not verts:
        return True
    start = min(verts)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y in verts and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


def _articulation_points(vertices: Sequence[int], adj: Mapping[int, Sequence[int]]) -> set[int]:
    """Cut vertices via iterative lowpoint search."""
    verts = sorted(set(vertices))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cut: set[int] = set()
    timer = 0
    for root in verts:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(adj.get(root, ())))]
        root_children = 0
        while stack:
            v, parent, nbrs = stack[-1]
            advanced = False
            for w in nbrs:
                if w not in disc:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(adj.get(w, ()))))
                    advanced = True
                    break
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return cut


def is_two_connected_sub(vertices: Iterable[int], edges: Iterable[Edge]) -> bool:
    """2-connectivity of an explicit (vertex set, edge set) subgraph."""
    verts = sorted(set(vertices))
    if len(verts) < 3:
        return False
    adj = _adjacency_of(edges)
    if not _is_connected(verts, adj):
        return False
    return not _articulation_points(verts, adj)


def is_two_connected(g: Graph) -> bool:
    """True when g has at least 3 vertices, is connected, and has no cut vertex."""
    return is_two_connected_sub(range(g.vertex_count), g.edges)


def articulation_points(g: Graph) -> set[int]:
    return _articulation_points(range(g.vertex_count), g.adjacency())


def degree_two_set(g: Graph) -> VertexSet:
    return frozenset(v for v, d in enumerate(g.degrees()) if d == 2)


def is_cycle_graph(g: Graph) -> bool:
    """True when g is exactly one simple cycle covering all its vertices."""
    if g.vertex_count < 3 or g.edge_count != g.vertex_count:
        return False
    if any(d != 2 for d in g.degrees()):
        return False
    return _is_connected(range(g.vertex_count), g.adjacency())


def cycle_order(g: Graph) -> tuple[int, ...]:
    """The cyclic vertex order of a cycle graph, starting at vertex 0 and
    moving toward its smaller neighbor."""
    if not is_cycle_graph(g):
        raise NotACycle("cycle_order needs a cycle graph")
    adj = g.adjacency()
    order = [0]
    prev = -1
    cur = 0
    for _ in range(g.vertex_count - 1):
        nxt = min(w for w in adj[cur] if w != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def normalize_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Canonical rotation and orientation of a closed vertex sequence."""
    seq = tuple(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def cycle_edges(seq: Sequence[int]) -> list[Edge]:
    """Edges of a closed vertex sequence, including the wrap-around edge."""
    out = [edge(a, b) for a, b in zip(seq, seq[1:])]
    out.append(edge(seq[-1], seq[0]))
    return out


def find_cycle(g: Graph) -> tuple[int, ...]:
    """Some cycle of g in canonical form, found by DFS (deterministic)."""
    adj = g.adjacency()
    visited: set[int] = set()
    for root in range(g.vertex_count):
        if root in visited:
            continue
        visited.add(root)
        parent = {root: -1}
        pos = {root: 0}
        chain = [root]
        stack: list[tuple[int, Iterator[int]]] = [(root, iter(adj[root]))]
        while stack:
            v, nbrs = stack[-1]
            advanced = False
            for w in nbrs:
                if w not in visited:
                    visited.add(w)
                    parent[w] = v
                    pos[w] = len(chain)
                    chain.append(w)
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
                if w != parent[v] and w in pos:
                    return normalize_cycle(chain[pos[w]:])
            if advanced:
                continue
            stack.pop()
            del pos[v]
            chain.pop()
    raise NotApplicable("graph has no cycle")


def arcs_between(cycle: Sequence[int], a: int, b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two arcs of a closed vertex sequence between distinct vertices a
    and b, each returned as a path from a to b (endpoints included)."""
    if a == b:
        raise InvalidInput("arc endpoints must differ")
    n = len(cycle)
    ia, ib = cycle.index(a), cycle.index(b)
    fwd = tuple(cycle[(ia + t) % n] for t in range(((ib - ia) % n) + 1))
    bwd = tuple(cycle[(ia - t) % n] for t in range(((ia - ib) % n) + 1))
    return fwd, bwd
