"""Shared graphs and frozen expected values for the test suite.

The colorings and decompositions recorded here were derived by hand from
the construction rules and double-checked against the brute-force oracle
before being frozen.  Tests compare implementation output against these
tables; none of them were generated by the code under test.
"""

from rc2 import Graph


def k23() -> Graph:
    """Complete bipartite K_{2,3}: parts {0,1} and {2,3,4}."""
    return Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def k24() -> Graph:
    return Graph.from_edges(
        6, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)]
    )


def k4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def diamond() -> Graph:
    """K4 minus one edge; the smallest 2-connected non-cycle."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def c6_with_chord() -> Graph:
    return Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])


def prism() -> Graph:
    """Two triangles joined by a perfect matching.  2-connected, all
    vertices degree 3, so not minimally 2-connected."""
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


def theta_grid() -> Graph:
    """A 6-cycle with three crossing ears.  2-connected but not minimal;
    notable because the ear repair loop fires on it repeatedly before the
    decomposition gives up, and because its minimalization is Hamiltonian."""
    return Graph.from_edges(
        9,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
         (1, 6), (6, 4), (2, 7), (7, 5), (3, 8), (8, 0)],
    )


def four_hub() -> Graph:
    """Minimally 2-connected: four branch vertices joined by five
    suspended paths (0-4-2, 0-5-2, 1-6-3, 1-7-3, 2-8-3) plus edge (0,1)."""
    return Graph.from_edges(
        9,
        [(0, 1), (0, 4), (4, 2), (0, 5), (5, 2),
         (1, 6), (6, 3), (1, 7), (7, 3), (2, 8), (8, 3)],
    )


def wheel(n: int) -> Graph:
    """Wheel on n vertices: hub 0, rim 1..n-1."""
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(1, n - 1)]
    return Graph.from_edges(n, rim + [(0, i) for i in range(1, n)])


# ---------------------------------------------------------------------------
# frozen expected values


# Inductive coloring of K_{2,3}: base cycle (0,2,1,3), first ear (0,4,1).
K23_COLORING = {
    (0, 2): 0, (1, 2): 1, (1, 3): 2, (0, 3): 3, (0, 4): 2, (1, 4): 3,
}
K23_COLOR_MAP = {0: 0, 1: 1}

# K_{2,4} extends K_{2,3} by the ear (0,5,1); color 0 is recycled on (1,5).
K24_COLORING = {**K23_COLORING, (0, 5): 4, (1, 5): 0}
K24_COLOR_MAP = {0: 4, 1: 1}
K24_RECYCLED = 0

# Hamiltonian-plus-chord coloring of C6 with chord (0,3).
C6_CHORD_COLORING = {
    (0, 1): 0, (3, 4): 0, (0, 5): 1, (2, 3): 1, (1, 2): 2, (4, 5): 3, (0, 3): 4,
}

# K4 minimalizes to the 4-cycle (0,2,1,3); chord (0,1) drives the scheme.
K4_COLORING = {
    (0, 2): 0, (1, 3): 0, (0, 3): 1, (1, 2): 1, (0, 1): 2, (2, 3): 0,
}

# Exact minima from the brute-force oracle, next to what the construction
# spends.  The construction is a bounded heuristic, not an optimizer.
EXACT_RC2 = {
    "k23": (3, 4),
    "k4": (2, 3),
    "diamond": (3, 3),
    "w5": (2, 4),
}

# Labeled 2-connected graph counts on 3, 4, 5 vertices.  Independently
# known (A013922); the census must reproduce them exactly.
TWO_CONNECTED_COUNTS = {3: 1, 4: 10, 5: 238}
