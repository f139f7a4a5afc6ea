"""Reducing a 2-connected graph to a minimally 2-connected spanning subgraph.

A graph is minimally 2-connected when deleting any single edge destroys
2-connectivity.  The reduction below only deletes edges, so the result spans
the same vertex set; rainbow path pairs found in the reduced graph remain
valid in the original.
"""

from __future__ import annotations

from .errors import NotTwoConnected, PreconditionViolated
from .graphs import Edge, Graph, degree_two_set, is_cycle_graph, is_two_connected, is_two_connected_sub
from .reports import Violation, VerificationReport, failing, passing


def _removable(g_vertices: int, edges: set[Edge], e: Edge) -> bool:
    return is_two_connected_sub(range(g_vertices), edges - {e})


def spanning_minimally_two_connected(g: Graph) -> Graph:
    """Delete removable edges (smallest first) until none remain."""
    if not is_two_connected(g):
        raise NotTwoConnected("input must be 2-connected")
    edges = set(g.edges)
    # A single ascending sweep reaches a fixpoint: deleting edges never makes
    # a previously essential edge removable.  The trailing sweep asserts that.
    for e in sorted(g.edges):
        if e in edges and _removable(g.vertex_count, edges, e):
            edges.remove(e)
    assert not any(_removable(g.vertex_count, edges, e) for e in sorted(edges))
    return Graph(g.vertex_count, frozenset(edges), g.labels)


def is_minimally_two_connected(g: Graph) -> bool:
    if not is_two_connected(g):
        return False
    edges = set(g.edges)
    return not any(_removable(g.vertex_count, edges, e) for e in g.edges)


def branch_forest_components(g: Graph) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by degree >= 3 vertices."""
    branch = set(range(g.vertex_count)) - degree_two_set(g)
    adj = g.adjacency()
    comps: list[frozenset[int]] = []
    seen: set[int] = set()
    for root in sorted(branch):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in branch and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _degree_two_paths(g: Graph) -> list[tuple[int, ...]]:
    """Components of the subgraph induced by degree-2 vertices, each returned
    as a vertex sequence.  Raises if a component is not a path."""
    d = degree_two_set(g)
    adj = g.adjacency()
    paths: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for root in sorted(d):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in d and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        inner_deg = {x: sum(1 for y in adj[x] if y in comp) for x in comp}
        ends = sorted(x for x in comp if inner_deg[x] <= 1)
        if len(comp) == 1:
            paths.append((root,))
            continue
        if len(ends) != 2 or any(inner_deg[x] > 2 for x in comp):
            raise PreconditionViolated(f"degree-2 component {sorted(comp)} is not a path")
        seq = [ends[0]]
        prev = -1
        while seq[-1] != ends[1]:
            cur = seq[-1]
            nxt = next(y for y in adj[cur] if y in comp and y != prev)
            prev = cur
            seq.append(nxt)
        paths.append(tuple(seq))
    return paths


def bollobas_structure_check(g: Graph) -> VerificationReport:
    """Structural sanity check for a minimally 2-connected non-cycle graph.

    The degree >= 3 vertices must induce a forest with at least two
    components, the degree-2 vertices must induce disjoint paths, and each
    such path must hook its two ends into different trees of the forest.
    """
    if is_cycle_graph(g):
        raise PreconditionViolated("structure check does not apply to cycles")
    if not is_minimally_two_connected(g):
        raise PreconditionViolated("input is not minimally 2-connected")

    violations: list[Violation] = []
    branch = sorted(set(range(g.vertex_count)) - degree_two_set(g))
    comps = branch_forest_components(g)
    tree_of = {v: i for i, comp in enumerate(comps) for v in comp}

    branch_edges = [e for e in sorted(g.edges) if e[0] in tree_of and e[1] in tree_of]
    if len(branch_edges) != len(branch) - len(comps):
        violations.append(
            Violation("not-forest", tuple(branch), "degree >= 3 vertices induce a cycle")
        )
    if len(comps) < 2:
        violations.append(
            Violation(
                "single-tree",
                tuple(sorted(comps[0])) if comps else (),
                "expected at least two components of branch vertices",
            )
        )

    d = degree_two_set(g)
    adj = g.adjacency()
    try:
        paths = _degree_two_paths(g)
    except PreconditionViolated as exc:
        return failing("structure", [Violation("degree-two-not-path", (), str(exc))])

    for seq in paths:
        if len(seq) == 1:
            anchors = [y for y in adj[seq[0]] if y not in d]
        else:
            anchors = [y for end in (seq[0], seq[-1]) for y in adj[end] if y not in d]
        if len(anchors) != 2:
            violations.append(
                Violation("bad-attachment", seq, f"path attaches at {sorted(anchors)}")
            )
            continue
        a, b = anchors
        if tree_of.get(a) == tree_of.get(b):
            violations.append(
                Violation(
                    "same-tree-attachment",
                    seq,
                    f"both ends attach to component of vertex {min(a, b)}",
                )
            )

    if violations:
        return failing("structure", violations)
    return passing(
        "structure",
        [("branch_components", len(comps)), ("degree_two_paths", len(paths))],
    )
