"""Ground-truth generators: random chordal DAGs and extremal families.

Every generator emits a chordal skeleton oriented along a perfect elimination
ordering, so the orientation has no immoralities and the whole graph is one
undirected chain component to the learner.
"""

from __future__ import annotations

import random

from .graphs import Ordering, Skeleton, bits
from .pdag import Dag, orient_from_ordering


def random_chordal(n: int, density: float, seed: int) -> tuple:
    """Random chordal DAG: sample predecessor edges, then saturate.

    Vertices are processed from the last position down. Vertex i at position
    t picks each earlier vertex as a neighbor with probability
    min(1, density / (t - 1)); its earlier neighborhood is then completed
    into a clique. The result is chordal with the drawn ordering as a PEO,
    oriented earlier -> later. Returns (dag, sigma).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if density <= 0:
        raise ValueError("density must be positive")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    sigma = Ordering(tuple(perm))
    # prefix[t]: mask of vertices at positions < t
    prefix = [0] * (n + 1)
    for t, v in enumerate(perm):
        prefix[t + 1] = prefix[t] | (1 << v)
    pos = sigma.inverse()
    pred = [0] * n  # pred[v]: mask of earlier neighbors of v
    # Descending positions: edges added while saturating vertex i only join
    # predecessors of i, whose own saturation happens later in this loop, so
    # every earlier neighborhood ends up a clique and sigma is a PEO.
    for t in range(n - 1, 0, -1):
        i = perm[t]
        p = min(1.0, density / t)
        for s in range(t):
            if rng.random() < p:
                pred[i] |= 1 << perm[s]
        clique = pred[i]
        for u in bits(clique):
            pred[u] |= clique & prefix[pos[u]]
    edges = [(u, v) for v in range(n) for u in bits(pred[v])]
    g = Skeleton(n, edges)
    return orient_from_ordering(g, sigma), sigma


def complete_dag(n: int, sigma: Ordering) -> Dag:
    """The directed clique oriented along sigma."""
    if sigma.n != n:
        raise ValueError("ordering size must match n")
    g = Skeleton(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    return orient_from_ordering(g, sigma)


def split_graph_instance(chi: int, alpha: int, seed: int) -> Dag:
    """Split graph: a chi-clique plus alpha independent vertices.

    Each independent vertex attaches to a uniform random clique subset of
    size 1..chi-1, keeping the clique number exactly chi. The orientation
    follows a PEO that places the clique first.
    """
    if chi < 2:
        raise ValueError("chi must be at least 2")
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    rng = random.Random(seed)
    n = chi + alpha
    edges = [(u, v) for u in range(chi) for v in range(u + 1, chi)]
    for j in range(chi, n):
        size = rng.randint(1, chi - 1)
        for u in rng.sample(range(chi), size):
            edges.append((u, j))
    g = Skeleton(n, edges)
    return orient_from_ordering(g, Ordering(tuple(range(n))))


def line_of_cliques(alpha: int, chi: int, seed: int) -> Dag:
    """A directed line of 2*alpha nodes threading alpha disjoint chi-cliques.

    Clique p contains consecutive line nodes 2p and 2p+1 (0-based) plus
    chi - 2 private vertices. All clique edges leave the first line node of
    the clique; the remainder of each clique is oriented by a random
    ordering. Forces many interventions for every strategy.
    """
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    if chi < 2:
        raise ValueError("chi must be at least 2")
    rng = random.Random(seed)
    line = 2 * alpha
    n = line + alpha * (chi - 2)
    edges = [(i, i + 1) for i in range(line - 1)]
    order: list = []
    next_free = line
    for p in range(alpha):
        members = [2 * p, 2 * p + 1] + list(range(next_free, next_free + chi - 2))
        next_free += chi - 2
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.append((members[a], members[b]))
        rest = members[1:]
        rng.shuffle(rest)
        order.append(members[0])
        order.extend(rest)
    g = Skeleton(n, edges)
    return orient_from_ordering(g, Ordering(tuple(order)))
