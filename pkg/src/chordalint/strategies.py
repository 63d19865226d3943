"""Intervention-design strategies.

Each strategy sees only the skeleton and an opaque Responder, applies R0
responses plus rule closure after every intervention, and returns the final
orientation state with a full transcript.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import (
    Coloring,
    Skeleton,
    bits,
    greedy_color,
    mcs_peo,
    subtree_split,
    two_color_forest,
)
from .oracle import Responder, Transcript
from .pdag import Pdag, meek_closure, merge_orientations
from .sepsys import build_separating_system, build_separating_system_capped


@dataclass
class StrategyResult:
    final: Pdag
    transcript: Transcript
    interventions_used: int


def _intervene(p: Pdag, responder: Responder, transcript: Transcript, intervention) -> None:
    s = frozenset(intervention)
    response = responder.respond(s)
    transcript.append(s, response)
    seed = merge_orientations(p, response, intervention_index=len(transcript))
    meek_closure(p, seed)
    p.assert_acyclic()


def naive_nonadaptive(g: Skeleton, k: int, responder: Responder) -> StrategyResult:
    """Intervene with the (n, k) separating system sets in order.

    Stops early once every edge is oriented.
    """
    system = build_separating_system(g.n, k)
    p = Pdag(g)
    transcript = Transcript()
    for s in system.sets:
        if p.fully_directed():
            break
        _intervene(p, responder, transcript, s)
    return StrategyResult(p, transcript, len(transcript))


def score(v: int, c: int, s_i, coloring: Coloring, g: Skeleton) -> int:
    """Guaranteed-learnable edge count if v (of color c) is intervened on.

    Sums, over colors outside the chosen set, the tree size of v in the
    two-class forest minus its largest branch; a vertex isolated in a forest
    contributes nothing for that color pair.
    """
    if coloring.color[v] != c:
        raise ValueError(f"vertex {v} does not have color {c}")
    total = 0
    for c2 in range(coloring.num_colors):
        if c2 == c or c2 in s_i:
            continue
        forest = two_color_forest(g, coloring, c, c2)
        if not forest.adj[v]:
            continue
        tree_size = len(forest.tree_of(v))
        branches = subtree_split(forest, v)
        total += tree_size - max(len(b) for b in branches)
    return total


def _undirected_view(p: Pdag) -> Skeleton:
    edges = [
        (u, v) for u in range(p.skeleton.n) for v in bits(p.und[u]) if u < v
    ]
    return Skeleton(p.skeleton.n, edges)


def _scores_for_class(
    rem: Skeleton, coloring: Coloring, c: int, others
) -> dict:
    """P(v, c) for every vertex of color c with at least one remaining edge."""
    totals: dict = {}
    members = [v for v in coloring.color_class(c) if rem.adj[v]]
    if not members:
        return totals
    for c2 in others:
        forest = two_color_forest(rem, coloring, c, c2)
        comp_size: dict = {}
        for v in forest.vertices:
            cid = forest.component[v]
            comp_size[cid] = comp_size.get(cid, 0) + 1
        for v in members:
            if not forest.adj[v]:
                continue
            tree_size = comp_size[forest.component[v]]
            worst = max(len(b) for b in subtree_split(forest, v))
            totals[v] = totals.get(v, 0) + tree_size - worst
    return {v: s for v, s in totals.items() if s > 0}


def hybrid_adaptive(g: Skeleton, k: int, responder: Responder) -> StrategyResult:
    """Separating system over color classes, with tree-aware node choice.

    Outer loop: recolor the remaining undirected graph, build a capped
    separating system over the colors, and for each of its sets intervene on
    the best-scoring nodes of the selected classes. Rule closure after every
    intervention deletes learnt edges; isolated vertices drop out on the next
    recoloring.
    """
    p = Pdag(g)
    transcript = Transcript()
    while not p.fully_directed():
        before = p.undirected_count
        rem = _undirected_view(p)
        peo = mcs_peo(rem)
        coloring = greedy_color(rem, peo)
        chi = coloring.num_colors
        cap = min(k, -(-chi // 2))
        system = build_separating_system_capped(chi, cap)
        for s_i in system.sets:
            rem = _undirected_view(p)
            others = [c for c in range(chi) if c not in s_i]
            chosen: list = []
            for c in sorted(s_i):
                scores = _scores_for_class(rem, coloring, c, others)
                if not scores:
                    continue
                ranked = sorted(scores.items(), key=lambda it: (-it[1], it[0]))
                if 2 * k <= chi:
                    take = 1
                else:
                    take = max(1, k // len(s_i))
                for v, _ in ranked[:take]:
                    if len(chosen) < k:
                        chosen.append(v)
            if not chosen:
                continue
            _intervene(p, responder, transcript, chosen)
            if p.fully_directed():
                break
        if not p.fully_directed() and p.undirected_count >= before:
            raise RuntimeError("no progress in outer pass; engine bug")
    return StrategyResult(p, transcript, len(transcript))


def centroid(g: Skeleton) -> int:
    """A vertex whose removal leaves components of size <= ceil(2n/3).

    The returned vertex actually achieves the stronger floor(n/2) balance;
    ties break toward the lowest id.
    """
    n = g.n
    if g.m != n - 1:
        raise ValueError("centroid requires a tree")
    if n == 1:
        return 0
    order: list = []
    parent = [-1] * n
    seen = [False] * n
    stack = [0]
    seen[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for u in g.neighbors(v):
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)
    if len(order) != n:
        raise ValueError("centroid requires a connected tree")
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best, best_key = -1, (n + 1, n + 1)
    for v in range(n):
        heaviest = n - size[v]
        for u in g.neighbors(v):
            if parent[u] == v:
                heaviest = max(heaviest, size[u])
        key = (heaviest, v)
        if key < best_key:
            best, best_key = v, key
    return best


def tree_adaptive(g: Skeleton, responder: Responder) -> StrategyResult:
    """Size-1 interventions on successive centroids of the unresolved subtree.

    Each intervention orients every branch of the centroid except the one
    holding its parent; recursing into that branch resolves the tree in
    logarithmically many steps.
    """
    n = g.n
    if g.m != n - 1:
        raise ValueError("tree_adaptive requires a tree skeleton")
    p = Pdag(g)
    transcript = Transcript()
    component = list(range(n))
    while not p.fully_directed():
        sub, verts = _induced_undirected(p, component)
        v = verts[centroid(sub)]
        _intervene(p, responder, transcript, {v})
        component = _unresolved_component(p)
        if component is None:
            break
    return StrategyResult(p, transcript, len(transcript))


def _induced_undirected(p: Pdag, vertices) -> tuple:
    verts = sorted(vertices)
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u in verts
        for v in bits(p.und[u])
        if u < v and v in index
    ]
    return Skeleton(len(verts), edges), verts


def _unresolved_component(p: Pdag):
    """The unique undirected component with edges remaining, or None."""
    for root in range(p.skeleton.n):
        if p.und[root]:
            comp = {root}
            stack = [root]
            while stack:
                v = stack.pop()
                for u in bits(p.und[v]):
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            return sorted(comp)
    return None


def randomized_block(
    g: Skeleton, k: int, responder: Responder, seed: int
) -> StrategyResult:
    """Fixed blocks first, then random-subset probing inside each block.

    Requires a complete skeleton. The block phase orients every inter-block
    edge by R0; each block's internal clique is then learned by repeatedly
    intervening on a uniform random subset (capped at k) of its still
    unresolved vertices.
    """
    n = g.n
    if g.m != n * (n - 1) // 2:
        raise ValueError("randomized_block requires a complete skeleton")
    if 2 * k >= n:
        raise ValueError("requires k < n/2")
    rng = random.Random(seed)
    blocks = [list(range(i, min(i + k, n))) for i in range(0, n, k)]
    p = Pdag(g)
    transcript = Transcript()
    for block in blocks:
        _intervene(p, responder, transcript, block)
    for block in blocks:
        while any(p.und[v] for v in block):
            live = [v for v in block if p.und[v]]
            subset = [v for v in live if rng.random() < 0.5]
            if not subset:
                continue
            if len(subset) > k:
                subset = rng.sample(subset, k)
            _intervene(p, responder, transcript, subset)
    return StrategyResult(p, transcript, len(transcript))
