"""The benchmark corpus: a fixed, reproducible set of 2-connected non-cycles.

Families: every theta graph with path lengths (a, b, c), each at least 2 and
summing to at most 10, as ordered triples (35); wheels on 4..9 vertices (6);
complete graphs on 4..7 vertices (4); complete bipartite graphs with parts
between 2 and 5 except the 4-cycle K_{2,2} (9); and 100 seeded random
2-connected graphs on 5..12 vertices (ear count varying with the seed).
Total 154.
"""

from __future__ import annotations

from .generators import FamilySpec, generate_family
from .graphs import Graph

CorpusEntry = tuple[FamilySpec, Graph]


def _specs() -> list[FamilySpec]:
    specs: list[FamilySpec] = []
    for total in range(6, 11):
        for a in range(2, total - 3):
            for b in range(2, total - a - 1):
                c = total - a - b
                if c >= 2:
                    specs.append(FamilySpec("theta", {"a": a, "b": b, "c": c}))
    for n in range(4, 10):
        specs.append(FamilySpec("wheel", {"n": n}))
    for n in range(4, 8):
        specs.append(FamilySpec("complete", {"n": n}))
    for a in range(2, 6):
        for b in range(a, 6):
            if (a, b) != (2, 2):
                specs.append(FamilySpec("complete_bipartite", {"a": a, "b": b}))
    for i in range(100):
        n = 5 + i % 8
        specs.append(
            FamilySpec(
                "random_two_connected",
                {"n": n, "ears": min(1 + i % 3, n - 3), "seed": i},
            )
        )
    return specs


def standard_corpus() -> list[CorpusEntry]:
    """The full corpus as (spec, graph) pairs, in a fixed order."""
    return [(spec, generate_family(spec)) for spec in _specs()]
