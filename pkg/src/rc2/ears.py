"""Ear decompositions tailored to the inductive coloring.

A decomposition here is a base cycle plus a sequence of ears (paths whose
endpoints lie on the part already built and whose interiors are new).  The
coloring downstream needs two extra properties on top of the usual shape:

  1. every ear keeps at least one degree-2 vertex of the host graph in its
     interior, and
  2. both arcs of the base cycle between the first ear's endpoints contain a
     degree-2 vertex of the host in their interior.

For a minimally 2-connected graph that is not a cycle these are always
achievable: ears are grown through uncovered degree-2 vertices, and a base
cycle violating (2) is repaired by swapping the offending arc for the ear,
which strictly grows the number of degree-2 vertices on the cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    LabelingImpossible,
    MalformedDecomposition,
    NotApplicable,
    NotMinimal,
    NotTwoConnected,
    PreconditionViolated,
)
from .graphs import (
    Graph,
    Path,
    VertexSet,
    arcs_between,
    cycle_edges,
    degree_two_set,
    edge,
    find_cycle,
    is_cycle_graph,
    is_two_connected,
    normalize_cycle,
)
from .menger import two_fan_to_subgraph
from .reports import Violation, VerificationReport, failing, passing


@dataclass(frozen=True)
class EarDecomposition:
    base_cycle: Path
    ears: tuple[Path, ...]
    repair_exchanges: int = 0

    def to_json_obj(self) -> dict:
        return {
            "base": list(self.base_cycle.vertices),
            "ears": [list(e.vertices) for e in self.ears],
        }

    def covered_vertices(self) -> VertexSet:
        out = set(self.base_cycle.vertices)
        for ear in self.ears:
            out |= set(ear.vertices)
        return frozenset(out)

    def covered_edges(self) -> frozenset:
        out = set(cycle_edges(self.base_cycle.vertices))
        for ear in self.ears:
            out |= set(ear.edges())
        return frozenset(out)


def decomposition_from_json_obj(obj: dict) -> EarDecomposition:
    if not isinstance(obj, dict) or "base" not in obj or "ears" not in obj:
        raise MalformedDecomposition('decomposition JSON needs keys "base" and "ears"')
    return EarDecomposition(
        Path(tuple(obj["base"])),
        tuple(Path(tuple(e)) for e in obj["ears"]),
    )


def ear_through_vertex(g: Graph, anchors: VertexSet, v0: int) -> Path:
    """An ear through v0: a path whose endpoints are distinct anchor
    vertices, whose interior contains v0 and avoids the anchors.  Oriented
    from the smaller endpoint."""
    if v0 in anchors:
        raise PreconditionViolated(f"vertex {v0} is already covered")
    p, q = two_fan_to_subgraph(g, anchors, v0)
    verts = tuple(reversed(p.vertices)) + q.vertices[1:]
    return Path(verts)


def exchange_bad_arc(
    cycle: tuple[int, ...], ear: Path, degree_two: VertexSet
) -> tuple[int, ...] | None:
    """Repair a base cycle whose arc between the ear endpoints misses
    every degree-2 vertex.

    Returns the replacement cycle (the surviving arc plus the reversed ear
    interior), or None when both arcs already contain a degree-2 vertex in
    their interior and no exchange is needed.
    """
    a, b = ear.first, ear.last
    arc1, arc2 = arcs_between(cycle, a, b)
    bad = [arc for arc in (arc1, arc2) if not (set(arc[1:-1]) & degree_two)]
    if not bad:
        return None
    keep = arc2 if bad[0] == arc1 else arc1
    return normalize_cycle(keep + tuple(reversed(ear.interior())))


def _initial_cycle_and_first_ear(g: Graph, d: VertexSet) -> tuple[tuple[int, ...], Path, int]:
    """A base cycle and first ear satisfying the arc condition (2).

    When an arc between the ear endpoints has no interior degree-2 vertex,
    the cycle is re-formed from the other arc plus the ear.  Each swap adds
    the ear's degree-2 interior to the cycle, so at most |d| swaps happen.
    """
    cycle = find_cycle(g)
    exchanges = 0
    while True:
        uncovered = sorted(d - set(cycle))
        if not uncovered:
            raise NotMinimal("one cycle carries every degree-2 vertex")
        ear = ear_through_vertex(g, frozenset(cycle), uncovered[0])
        repaired = exchange_bad_arc(cycle, ear, d)
        if repaired is None:
            return cycle, ear, exchanges
        if exchanges > len(d):
            raise NotMinimal("arc repair failed to converge")
        cycle = repaired
        exchanges += 1


def build_ear_decomposition(g: Graph) -> EarDecomposition:
    """Decompose a minimally 2-connected non-cycle graph.

    Ears are always grown through the smallest uncovered degree-2 vertex,
    which keeps the result deterministic and gives every ear a degree-2
    interior vertex.  Inputs where that strategy cannot exhaust the graph
    are rejected as not minimally 2-connected.
    """
    if not is_two_connected(g):
        raise NotTwoConnected("need a 2-connected input")
    if is_cycle_graph(g):
        raise NotApplicable("a cycle decomposes into just itself")
    d = degree_two_set(g)
    if not d:
        raise NotMinimal("a minimally 2-connected non-cycle has degree-2 vertices")

    cycle, first_ear, exchanges = _initial_cycle_and_first_ear(g, d)
    covered = set(cycle) | set(first_ear.vertices)
    edges_done = set(cycle_edges(cycle)) | set(first_ear.edges())
    ears = [first_ear]
    while covered != set(range(g.vertex_count)) or edges_done != g.edges:
        pending = sorted(d - covered)
        if not pending:
            raise NotMinimal("ears through degree-2 vertices did not exhaust the graph")
        ear = ear_through_vertex(g, frozenset(covered), pending[0])
        ears.append(ear)
        covered |= set(ear.vertices)
        edges_done |= set(ear.edges())
    return EarDecomposition(Path(cycle), tuple(ears), exchanges)


def check_ear_conditions(dec: EarDecomposition, g: Graph) -> VerificationReport:
    """Validate a decomposition against the two coloring preconditions.

    Shape problems (edges not in the graph, interiors touching covered
    vertices, wrong coverage) raise MalformedDecomposition; condition
    failures come back as report violations.
    """
    base = dec.base_cycle.vertices
    if len(base) < 3:
        raise MalformedDecomposition("base cycle needs at least 3 vertices")
    for e in cycle_edges(base):
        if e not in g.edges:
            raise MalformedDecomposition(f"base cycle uses missing edge {e}")
    if not dec.ears:
        raise MalformedDecomposition("decomposition has no ears")

    covered = set(base)
    for idx, ear in enumerate(dec.ears):
        v = ear.vertices
        if len(v) < 2:
            raise MalformedDecomposition(f"ear {idx} is a single vertex")
        if v[0] not in covered or v[-1] not in covered:
            raise MalformedDecomposition(f"ear {idx} endpoints must already be covered")
        if v[0] == v[-1]:
            raise MalformedDecomposition(f"ear {idx} endpoints coincide")
        for x in ear.interior():
            if x in covered:
                raise MalformedDecomposition(f"ear {idx} interior revisits vertex {x}")
        for e in ear.edges():
            if e not in g.edges:
                raise MalformedDecomposition(f"ear {idx} uses missing edge {e}")
        covered |= set(v)
    if covered != set(range(g.vertex_count)) or dec.covered_edges() != g.edges:
        raise MalformedDecomposition("decomposition does not reconstruct the graph")

    d = degree_two_set(g)
    violations: list[Violation] = []
    for idx, ear in enumerate(dec.ears):
        if not (set(ear.interior()) & d):
            violations.append(
                Violation(
                    "ear-missing-degree-two",
                    ear.vertices,
                    f"ear {idx} has no degree-2 vertex in its interior",
                )
            )
    first = dec.ears[0]
    for arc in arcs_between(base, first.first, first.last):
        if not (set(arc[1:-1]) & d):
            violations.append(
                Violation(
                    "arc-missing-degree-two",
                    arc,
                    "base-cycle arc between the first ear's endpoints has no degree-2 vertex",
                )
            )
    if violations:
        return failing("ear-conditions", violations)
    return passing(
        "ear-conditions",
        [("ears", len(dec.ears)), ("repair_exchanges", dec.repair_exchanges)],
    )


@dataclass(frozen=True)
class BaseLabeling:
    """The working order for coloring the base cycle plus first ear.

    ``order`` lists the cycle from the first ear's smaller endpoint followed
    by the ear's interior.  Positions are 1-based throughout to keep the
    off-by-one structure of the skip positions readable: ``ear_end_pos`` is
    where the ear's other endpoint sits on the cycle, and the three skip
    positions mark the first degree-2 vertex strictly inside the first arc,
    on the second arc, and on the ear interior.
    """

    order: tuple[int, ...]
    cycle_len: int
    ear_end_pos: int
    arc1_skip: int
    arc2_skip: int
    ear_skip: int
    degree_two: VertexSet = field(repr=False)

    @property
    def total_len(self) -> int:
        return len(self.order)

    def vertex_at(self, pos: int) -> int:
        """1-based lookup into the working order."""
        return self.order[pos - 1]

    def position_of(self, v: int) -> int:
        return self.order.index(v) + 1


def select_base_labeling(dec: EarDecomposition, d: VertexSet) -> BaseLabeling:
    """Choose the canonical working order and skip positions.

    Raises LabelingImpossible when a required degree-2 vertex is absent,
    which is exactly a failure of the decomposition conditions.
    """
    base = dec.base_cycle.vertices
    first = dec.ears[0]
    v1 = first.first
    i = base.index(v1)
    rot = base[i:] + base[:i]
    if rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    order = rot + first.interior()
    s = len(base)
    total = len(order)
    p = rot.index(first.last) + 1

    def first_degree_two(lo: int, hi: int, label: str) -> int:
        for pos in range(lo, hi + 1):
            if order[pos - 1] in d:
                return pos
        raise LabelingImpossible(f"no degree-2 vertex on the {label} (positions {lo}..{hi})")

    p1 = first_degree_two(2, p - 1, "first arc")
    p2 = first_degree_two(p + 1, s, "second arc")
    p3 = first_degree_two(s + 1, total, "ear interior")
    return BaseLabeling(
        order=order,
        cycle_len=s,
        ear_end_pos=p,
        arc1_skip=p1,
        arc2_skip=p2,
        ear_skip=p3,
        degree_two=d,
    )
