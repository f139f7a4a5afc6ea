"""Edge colorings that make every vertex pair rainbow-2-connected.

The entry point is :func:`color_rc2`.  Cycles get all-distinct colors (n of
them, which is optimal).  Everything else is first thinned to a minimally
2-connected spanning subgraph and colored with at most n-1 colors, either by
a direct scheme when the thinned graph is a Hamiltonian cycle (the original
then has a chord) or by induction over an ear decomposition.  Edges outside
the thinned subgraph reuse color 0: extra edges only add paths, so the
verified pairs survive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    ChordInvalid,
    EndpointNotEligible,
    InvalidInput,
    LabelingImpossible,
    LabelingInvalid,
    NoInteriorDegreeTwo,
    NotACycle,
    NotApplicable,
    NotHamiltonianCycle,
    NotTwoConnected,
)
from .ears import (
    BaseLabeling,
    EarDecomposition,
    build_ear_decomposition,
    check_ear_conditions,
    select_base_labeling,
)
from .graphs import (
    Edge,
    Graph,
    Path,
    VertexSet,
    cycle_edges,
    cycle_order,
    degree_two_set,
    edge,
    is_cycle_graph,
    is_two_connected,
)
from .minimalize import spanning_minimally_two_connected


@dataclass
class EdgeColoring:
    """An edge -> color assignment with colors packed as 0..k-1."""

    assignment: dict[Edge, int]
    color_count: int

    @staticmethod
    def from_assignment(assignment: Mapping[Edge, int]) -> "EdgeColoring":
        colors = set(assignment.values())
        if colors and colors != set(range(max(colors) + 1)):
            raise InvalidInput("color ids must be contiguous from 0")
        return EdgeColoring(dict(assignment), len(colors))

    def color_of(self, u: int, v: int) -> int:
        return self.assignment[edge(u, v)]

    def used_colors(self) -> set[int]:
        return set(self.assignment.values())

    def restricted_to(self, edges: Iterable[Edge]) -> "EdgeColoring":
        sub = {e: self.assignment[e] for e in edges}
        return EdgeColoring(sub, self.color_count)


@dataclass
class UniqueColorMap:
    """An injective vertex -> color map.

    The contract maintained by the construction: each mapped color appears on
    exactly one edge of the current subgraph, and that edge touches the
    vertex.  This is what lets an ear extension recycle the color of its
    smaller endpoint safely.
    """

    mapping: dict[int, int]

    def __post_init__(self):
        vals = list(self.mapping.values())
        if len(set(vals)) != len(vals):
            raise InvalidInput("vertex color map must be injective")

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def __contains__(self, v: int) -> bool:
        return v in self.mapping

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.mapping.items())

    def colors(self) -> set[int]:
        return set(self.mapping.values())

    def to_json_obj(self) -> dict:
        return {str(v): c for v, c in sorted(self.mapping.items())}


@dataclass(frozen=True)
class TraceStep:
    """One level of the inductive construction, for invariant checking."""

    vertices: VertexSet
    edges: frozenset[Edge]
    coloring: EdgeColoring
    color_map: UniqueColorMap
    ear: Path | None
    recycled_color: int | None
    color_names: dict[int, str] = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "edges": [list(e) for e in sorted(self.edges)],
            "coloring": [[u, v, self.coloring.assignment[(u, v)]] for u, v in sorted(self.edges)],
            "color_map": self.color_map.to_json_obj(),
            "ear": list(self.ear.vertices) if self.ear else None,
            "recycled_color": self.recycled_color,
            "color_names": {str(i): s for i, s in sorted(self.color_names.items())},
        }


@dataclass
class ColoringResult:
    coloring: EdgeColoring
    strategy: str
    decomposition: EarDecomposition | None = None
    trace: tuple[TraceStep, ...] | None = None

    def to_json_obj(self, include_trace: bool = False) -> dict:
        out = {
            "colors": self.coloring.color_count,
            "strategy": self.strategy,
            "edges": [
                {"u": u, "v": v, "color": self.coloring.assignment[(u, v)]}
                for u, v in sorted(self.coloring.assignment)
            ],
        }
        if include_trace and self.trace is not None:
            out["trace"] = [step.to_json_obj() for step in self.trace]
        return out


def coloring_from_json_obj(obj) -> EdgeColoring:
    """Read a coloring back from its JSON form.

    Color ids are renumbered densely by ascending original id; renaming
    colors never changes which paths are rainbow.
    """
    if not isinstance(obj, dict) or not isinstance(obj.get("edges"), list):
        raise InvalidInput('coloring JSON needs an "edges" list')
    raw: dict[Edge, int] = {}
    for item in obj["edges"]:
        if not (isinstance(item, dict) and all(isinstance(item.get(k), int) for k in ("u", "v", "color"))):
            raise InvalidInput(f"bad colored-edge entry {item!r}")
        e = edge(item["u"], item["v"])
        if e in raw:
            raise InvalidInput(f"edge {e} colored twice")
        raw[e] = item["color"]
    rank = {c: i for i, c in enumerate(sorted(set(raw.values())))}
    return EdgeColoring.from_assignment({e: rank[c] for e, c in raw.items()})


# ---------------------------------------------------------------------------
# the three coloring schemes


def color_cycle(g: Graph) -> ColoringResult:
    """Every edge its own color.  For a cycle nothing smaller works: the two
    paths between a vertex pair jointly use all n edges, so all n colors."""
    if not is_cycle_graph(g):
        raise NotACycle("color_cycle needs a cycle graph")
    order = cycle_order(g)
    n = g.vertex_count
    assignment = {edge(order[i], order[(i + 1) % n]): i for i in range(n)}
    return ColoringResult(EdgeColoring.from_assignment(assignment), "cycle")


def color_hamiltonian_with_chord(g: Graph, cycle: Sequence[int], chord: Edge) -> ColoringResult:
    """Color a graph with a spanning cycle plus at least one chord.

    Two color classes of size two sit on the cycle in a crossing pattern
    around the chord endpoints; every other cycle edge and the chord itself
    get fresh colors; any further edges reuse color 0.  Total n-1 colors.
    """
    n = g.vertex_count
    cyc = tuple(cycle)
    if len(cyc) != n or set(cyc) != set(range(n)):
        raise NotHamiltonianCycle("cycle must visit every vertex exactly once")
    c_edges = cycle_edges(cyc)
    if any(e not in g.edges for e in c_edges):
        raise NotHamiltonianCycle("cycle uses an edge not in the graph")
    chord = edge(*chord)
    if chord not in g.edges:
        raise ChordInvalid(f"chord {chord} is not an edge")
    if chord in c_edges:
        raise ChordInvalid(f"chord {chord} lies on the cycle")

    v1 = chord[0]
    i = cyc.index(v1)
    rot = cyc[i:] + cyc[:i]
    if rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    j = rot.index(chord[1]) + 1
    assert 3 <= j <= n - 1

    def cyc_edge(t: int) -> Edge:
        return edge(rot[t - 1], rot[t % n])

    assignment = {cyc_edge(1): 0, cyc_edge(j): 0, cyc_edge(n): 1, cyc_edge(j - 1): 1}
    fresh = 2
    for t in range(2, n):
        if t in (j - 1, j):
            continue
        assignment[cyc_edge(t)] = fresh
        fresh += 1
    assignment[chord] = fresh
    for e in sorted(g.edges):
        if e not in assignment:
            assignment[e] = 0
    result = EdgeColoring.from_assignment(assignment)
    assert result.color_count == n - 1
    return ColoringResult(result, "hamiltonian_chord")


def color_base_subgraph(labeling: BaseLabeling, g: Graph) -> tuple[EdgeColoring, UniqueColorMap]:
    """Color the base cycle plus first ear and build the vertex color map.

    With the working order w_1..w_L (cycle of length s, then ear interior)
    the consecutive edges take colors by position; the cycle-closing edge
    doubles the color of the ear's closing edge, and the edge leaving w_1
    into the ear doubles the color at the ear's far endpoint position.  The
    vertex map assigns each branch vertex the color of a neighboring edge,
    skipping one degree-2 position per stretch so the doubled colors stay
    out of the map.
    """
    order = labeling.order
    s = labeling.cycle_len
    total = labeling.total_len
    p = labeling.ear_end_pos

    def w(pos: int) -> int:
        return labeling.vertex_at(pos)

    def put(assign: dict, a: int, b: int, color: int) -> None:
        e = edge(a, b)
        if e not in g.edges:
            raise LabelingInvalid(f"labeling implies missing edge {e}")
        assign[e] = color

    assign: dict[Edge, int] = {}
    for j in range(1, s):
        put(assign, w(j), w(j + 1), j - 1)
    for j in range(s + 1, total):
        put(assign, w(j), w(j + 1), j - 1)
    put(assign, w(s), w(1), s - 1)
    put(assign, w(1), w(s + 1), p - 1)
    put(assign, w(total), w(p), s - 1)

    mapping: dict[int, int] = {}
    spans = (
        (1, labeling.arc1_skip, p),
        (p + 1, labeling.arc2_skip, s),
        (s + 1, labeling.ear_skip, total),
    )
    for lo, skip, hi in spans:
        for j in range(lo, skip):
            if w(j) not in labeling.degree_two:
                mapping[w(j)] = j - 1
        for j in range(skip + 1, hi + 1):
            if w(j) not in labeling.degree_two:
                mapping[w(j)] = j - 2
    return EdgeColoring.from_assignment(assign), UniqueColorMap(mapping)


def extend_with_ear(
    coloring: EdgeColoring,
    color_map: UniqueColorMap,
    ear: Path,
    host_degree_two: VertexSet,
) -> tuple[EdgeColoring, UniqueColorMap, int]:
    """Extend a colored subgraph by one ear.

    Consecutive ear edges get fresh colors except the last, which recycles
    the mapped color of the ear's smaller endpoint; that color moves off the
    vertex map, and interior vertices pick up the fresh colors with one
    degree-2 position skipped so the map stays injective and single-use.
    Returns the new coloring, the new map, and the recycled color.
    """
    verts = ear.vertices if ear.first < ear.last else tuple(reversed(ear.vertices))
    q = len(verts)
    for endpoint in (verts[0], verts[-1]):
        if endpoint not in color_map:
            raise EndpointNotEligible(f"ear endpoint {endpoint} has no mapped color")
    pivot = next(
        (j for j in range(2, q) if verts[j - 1] in host_degree_two),
        None,
    )
    if pivot is None:
        raise NoInteriorDegreeTwo(f"ear {verts} has no degree-2 interior vertex")

    base = coloring.color_count
    assign = dict(coloring.assignment)
    for j in range(1, q - 1):
        e = edge(verts[j - 1], verts[j])
        assert e not in assign
        assign[e] = base + j - 1
    recycled = color_map[verts[0]]
    last = edge(verts[-2], verts[-1])
    assert last not in assign
    assign[last] = recycled

    mapping = {v: c for v, c in color_map.mapping.items() if v != verts[0]}
    for j in range(1, pivot):
        if verts[j - 1] not in host_degree_two:
            mapping[verts[j - 1]] = base + j - 1
    for j in range(pivot + 1, q):
        if verts[j - 1] not in host_degree_two:
            mapping[verts[j - 1]] = base + j - 2
    new_coloring = EdgeColoring(assign, base + q - 2)
    return new_coloring, UniqueColorMap(mapping), recycled


def color_minimally_two_connected(g: Graph, with_trace: bool = False) -> ColoringResult:
    """Color a minimally 2-connected non-cycle graph with n-1 colors by
    folding its ear decomposition."""
    if not is_two_connected(g):
        raise NotTwoConnected("need a 2-connected input")
    if is_cycle_graph(g):
        raise NotApplicable("cycles are colored directly, not by ears")
    d = degree_two_set(g)
    dec = build_ear_decomposition(g)
    report = check_ear_conditions(dec, g)
    if not report.passed:
        raise LabelingImpossible(
            "; ".join(v.reason for v in report.violations)
        )
    labeling = select_base_labeling(dec, d)
    coloring, fmap = color_base_subgraph(labeling, g)

    steps: list[TraceStep] = []
    vertices = set(labeling.order)
    edges = set(coloring.assignment)
    if with_trace:
        steps.append(
            TraceStep(
                vertices=frozenset(vertices),
                edges=frozenset(edges),
                coloring=EdgeColoring(dict(coloring.assignment), coloring.color_count),
                color_map=UniqueColorMap(dict(fmap.mapping)),
                ear=dec.ears[0],
                recycled_color=None,
                color_names={i: f"x{i + 1}" for i in range(coloring.color_count)},
            )
        )
    for ear in dec.ears[1:]:
        before = coloring.color_count
        coloring, fmap, recycled = extend_with_ear(coloring, fmap, ear, d)
        vertices |= set(ear.vertices)
        edges |= set(ear.edges())
        if with_trace:
            names = {before + j - 1: f"y{j}" for j in range(1, len(ear) - 1)}
            steps.append(
                TraceStep(
                    vertices=frozenset(vertices),
                    edges=frozenset(edges),
                    coloring=EdgeColoring(dict(coloring.assignment), coloring.color_count),
                    color_map=UniqueColorMap(dict(fmap.mapping)),
                    ear=ear,
                    recycled_color=recycled,
                    color_names=names,
                )
            )

    assert coloring.color_count == g.vertex_count - 1
    assert len(coloring.assignment) == g.edge_count
    return ColoringResult(
        coloring,
        "ear_induction",
        decomposition=dec,
        trace=tuple(steps) if with_trace else None,
    )


def color_rc2(g: Graph, with_trace: bool = False) -> ColoringResult:
    """Rainbow-2-connected coloring of any 2-connected graph.

    Cycles use n colors (optimal); everything else at most n-1.
    """
    if not is_two_connected(g):
        raise NotTwoConnected("rainbow 2-connection needs a 2-connected graph")
    if is_cycle_graph(g):
        return color_cycle(g)
    h = spanning_minimally_two_connected(g)
    if is_cycle_graph(h):
        chord = min(g.edges - h.edges)
        return color_hamiltonian_with_chord(g, cycle_order(h), chord)
    result = color_minimally_two_connected(h, with_trace)
    if h.edges != g.edges:
        assign = dict(result.coloring.assignment)
        for e in sorted(g.edges - h.edges):
            assign[e] = 0
        result = ColoringResult(
            EdgeColoring(assign, result.coloring.color_count),
            result.strategy,
            result.decomposition,
            result.trace,
        )
    return result


# ---------------------------------------------------------------------------
# rendering

_PALETTE = (
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
    "#9a6324", "#fffac8", "#800000", "#aaffc3",
)


def to_dot(g: Graph, coloring: EdgeColoring, name: str = "rc2") -> str:
    """Graphviz rendering with one display color per color id (cycled past 16)."""
    lines = [f"graph {name} {{"]
    if g.labels:
        for v, label in enumerate(g.labels):
            lines.append(f'  {v} [label="{label}"];')
    for u, v in sorted(coloring.assignment):
        c = coloring.assignment[(u, v)]
        lines.append(f'  {u} -- {v} [color="{_PALETTE[c % len(_PALETTE)]}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
