"""Small oriented multigraphs for exhaustive and seeded-random checking."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement, permutations
from typing import Iterator

from .graph import OrientedMultigraph

DEFAULT_SEED = 20240613


def _canonical(n: int, pairs: tuple) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted((perm[u], perm[v]) for u, v in pairs))
        if best is None or key < best:
            best = key
    return best


def exhaustive_graphs(
    max_vertices: int, max_edges: int, min_vertices: int = 1, up_to_isomorphism: bool = True
) -> Iterator[OrientedMultigraph]:
    """Every oriented multigraph on 1..n vertices with at most ``max_edges`` edges.

    Edge multisets are drawn from all ordered vertex pairs (loops included).
    With ``up_to_isomorphism`` one representative per vertex relabeling class
    is kept, the first one in generation order.
    """
    for n in range(min_vertices, max_vertices + 1):
        slots = [(u, v) for u in range(n) for v in range(n)]
        seen = set()
        for m in range(max_edges + 1):
            for pairs in combinations_with_replacement(slots, m):
                if up_to_isomorphism:
                    key = _canonical(n, pairs)
                    if key in seen:
                        continue
                    seen.add(key)
                yield OrientedMultigraph.from_pairs(n, [(u + 1, v + 1) for u, v in pairs])


def random_graphs(
    count: int, max_vertices: int, max_edges: int, seed: int = DEFAULT_SEED
) -> list[OrientedMultigraph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_vertices)
        m = rng.randint(0, max_edges)
        pairs = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(m)]
        out.append(OrientedMultigraph.from_pairs(n, pairs))
    return out


def standard_corpus(seed: int = DEFAULT_SEED) -> list[OrientedMultigraph]:
    """All graphs with |V| <= 3, |E| <= 4 plus 50 random ones with |V| <= 5, |E| <= 7."""
    return list(exhaustive_graphs(3, 4)) + random_graphs(50, 5, 7, seed)
