"""Shared helpers: small-graph brute-force oracles and random generators.

The brute-force functions here are deliberately independent of the library
implementations they check: they enumerate permutations/subsets directly so
test expectations never share code with the code under test.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from chordalint import Skeleton


def brute_is_peo(g: Skeleton, perm) -> bool:
    """Direct earlier-neighborhood clique check of a candidate ordering."""
    pos = {v: i for i, v in enumerate(perm)}
    for v in perm:
        earlier = [u for u in g.adj[v] if pos[u] < pos[v]]
        for a, b in combinations(earlier, 2):
            if not g.has_edge(a, b):
                return False
    return True


def brute_has_peo(g: Skeleton) -> bool:
    return any(brute_is_peo(g, perm) for perm in permutations(range(g.n)))


def brute_max_clique_size(g: Skeleton) -> int:
    best = 1 if g.n else 0
    for r in range(2, g.n + 1):
        found = False
        for sub in combinations(range(g.n), r):
            if all(g.has_edge(a, b) for a, b in combinations(sub, 2)):
                best = r
                found = True
                break
        if not found:
            break
    return best


def brute_max_independent_size(g: Skeleton) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for sub in combinations(range(g.n), r):
            if all(not g.has_edge(a, b) for a, b in combinations(sub, 2)):
                return r
    return best


def random_graph(n: int, p: float, rng: random.Random) -> Skeleton:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Skeleton(n, edges)


def random_tree(n: int, rng: random.Random) -> Skeleton:
    """Uniform random attachment tree on n vertices."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Skeleton(n, edges)


def rooted_tree_dag(g: Skeleton, root: int):
    """Orient a tree away from ``root`` (every vertex gets at most one parent)."""
    from chordalint import Dag

    parents = [set() for _ in range(g.n)]
    seen = [False] * g.n
    seen[root] = True
    stack = [root]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if not seen[u]:
                seen[u] = True
                parents[u].add(v)
                stack.append(u)
    return Dag(g, tuple(frozenset(p) for p in parents))


def complete_skeleton(n: int) -> Skeleton:
    return Skeleton(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_skeleton(n: int) -> Skeleton:
    return Skeleton(n, [(i, i + 1) for i in range(n - 1)])


def star_skeleton(n: int) -> Skeleton:
    """Star with center 0 and n-1 leaves."""
    return Skeleton(n, [(0, i) for i in range(1, n)])
