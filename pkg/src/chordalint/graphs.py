"""Undirected graph core: chordal-graph algorithms on adjacency-set skeletons.

Vertex ids are dense integers in [0, n). All returned structures are meant to
be treated as immutable; algorithms iterate neighbors in sorted order so every
result is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class NotChordalError(ValueError):
    """Raised when a chordality-requiring operation gets a non-chordal graph.

    ``witness`` is a vertex whose earlier neighborhood (under the candidate
    elimination ordering) is not a clique.
    """

    def __init__(self, witness: int):
        super().__init__(f"graph is not chordal (witness vertex {witness})")
        self.witness = witness


class Skeleton:
    """Undirected simple graph with dense vertex ids and set adjacency."""

    __slots__ = ("n", "adj", "adj_mask", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)
        # Bitmask adjacency; used by the orientation engine for fast rule scans.
        self.adj_mask = tuple(_mask(s) for s in adj)
        self._edges = tuple(
            (u, v) for u in range(n) for v in sorted(adj[u]) if u < v
        )

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def induced(self, vertices: Sequence[int]) -> tuple["Skeleton", list[int]]:
        """Induced subgraph with relabeled dense ids.

        Returns (subgraph, local_to_global) where local vertex i corresponds
        to global vertex local_to_global[i].
        """
        verts = sorted(vertices)
        index = {v: i for i, v in enumerate(verts)}
        edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return Skeleton(len(verts), edges), verts

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Skeleton)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Skeleton(n={self.n}, m={self.m})"


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterable[int]:
    """Iterate set-bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Ordering:
    """A permutation of [0, n): perm[position] = vertex id."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("ordering is not a permutation of [0, n)")

    @property
    def n(self) -> int:
        return len(self.perm)

    def position(self, v: int) -> int:
        return self.inverse()[v]

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.perm)
        for pos, v in enumerate(self.perm):
            inv[v] = pos
        return tuple(inv)


@dataclass(frozen=True)
class Coloring:
    """Proper vertex coloring with colors 0..num_colors-1, all classes nonempty."""

    color: tuple[int, ...]
    num_colors: int

    def color_class(self, c: int) -> list[int]:
        return [v for v, cv in enumerate(self.color) if cv == c]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.color):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class Forest:
    """Induced subgraph on two color classes of a chordal graph.

    Guaranteed acyclic. ``component`` labels vertices of the forest with a
    dense tree id; vertices outside the two classes are absent.
    """

    vertices: tuple[int, ...]
    adj: dict
    component: dict

    def tree_of(self, v: int) -> list[int]:
        cid = self.component[v]
        return [u for u in self.vertices if self.component[u] == cid]


@dataclass(frozen=True)
class GraphStats:
    """Clique number (= chromatic number for chordal graphs) and independence number."""

    chi: int
    alpha: int


def mcs_peo(g: Skeleton) -> Ordering:
    """Perfect elimination ordering via maximum cardinality search.

    Ties are broken toward the lowest vertex id. Raises NotChordalError with
    a witness vertex if ``g`` admits no PEO.
    """
    n = g.n
    if n == 0:
        return Ordering(())
    weight = [0] * n
    selected = [False] * n
    # The selection order itself is the PEO: each picked vertex's
    # already-picked neighbors are mutually adjacent when g is chordal.
    order: list[int] = []
    for _ in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not selected[v] and weight[v] > best_w:
                best, best_w = v, weight[v]
        selected[best] = True
        order.append(best)
        for u in g.adj[best]:
            if not selected[u]:
                weight[u] += 1
    peo = Ordering(tuple(order))
    verify_peo(g, peo)  # doubles as the chordality test
    return peo


def verify_peo(g: Skeleton, ordering: Ordering) -> None:
    """Check that every vertex's earlier neighborhood is a clique."""
    earlier_mask = 0
    for v in ordering.perm:
        prior = g.adj_mask[v] & earlier_mask
        for u in bits(prior):
            if prior & ~g.adj_mask[u] & ~(1 << u):
                raise NotChordalError(v)
        earlier_mask |= 1 << v


def is_chordal(g: Skeleton) -> bool:
    try:
        mcs_peo(g)
        return True
    except NotChordalError:
        return False


def greedy_color(g: Skeleton, peo: Ordering) -> Coloring:
    """Greedy coloring along a PEO; optimal (clique-number colors) on chordal graphs."""
    color = [-1] * g.n
    for v in peo.perm:
        used = {color[u] for u in g.adj[v] if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    num = max(color) + 1 if color else 0
    return Coloring(tuple(color), num)


def max_clique(g: Skeleton, peo: Ordering) -> frozenset:
    """A maximum clique of a chordal graph: best vertex plus earlier neighbors."""
    if g.n == 0:
        return frozenset()
    pos = peo.inverse()
    best: frozenset = frozenset()
    for v in range(g.n):
        cand = {u for u in g.adj[v] if pos[u] < pos[v]}
        cand.add(v)
        if len(cand) > len(best):
            best = frozenset(cand)
    return best


def max_independent_set(g: Skeleton, peo: Ordering) -> frozenset:
    """Maximum independent set of a chordal graph.

    Greedy over the reversed PEO, so each taken vertex is simplicial in the
    still-unblocked graph, which makes the greedy choice safe.
    """
    taken: set[int] = set()
    blocked: set[int] = set()
    for v in reversed(peo.perm):
        if v not in blocked:
            taken.add(v)
            blocked.update(g.adj[v])
    return frozenset(taken)


def graph_stats(g: Skeleton, peo: Optional[Ordering] = None) -> GraphStats:
    if peo is None:
        peo = mcs_peo(g)
    return GraphStats(
        chi=max(len(max_clique(g, peo)), 1),
        alpha=max(len(max_independent_set(g, peo)), 1),
    )


def two_color_forest(g: Skeleton, col: Coloring, c: int, c2: int) -> Forest:
    """Induced subgraph on color classes c and c2, with tree labels.

    For chordal inputs the result is always acyclic; a cycle raises
    NotChordalError since it certifies a chordless even cycle.
    """
    if c == c2:
        raise ValueError("color classes must differ")
    verts = sorted(
        v for v in range(g.n) if col.color[v] == c or col.color[v] == c2
    )
    vset = set(verts)
    adj = {v: sorted(g.adj[v] & vset) for v in verts}
    component: dict[int, int] = {}
    cid = 0
    for root in verts:
        if root in component:
            continue
        component[root] = cid
        stack = [(root, -1)]
        while stack:
            v, parent = stack.pop()
            for u in adj[v]:
                if u == parent:
                    continue
                if u in component:
                    raise NotChordalError(u)  # cycle within two color classes
                component[u] = cid
                stack.append((u, v))
        cid += 1
    return Forest(tuple(verts), adj, component)


def subtree_split(f: Forest, v: int) -> list[frozenset]:
    """Vertex sets of the components of T(v) - v, where T(v) is v's tree."""
    if v not in f.component:
        raise ValueError(f"vertex {v} not in forest")
    out = []
    for start in f.adj[v]:
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for u in f.adj[x]:
                if u != v and u not in comp:
                    comp.add(u)
                    stack.append(u)
        out.append(frozenset(comp))
    return out


def write_graph(g: Skeleton, path: str) -> None:
    """Write in the exchange format: first line "n m", then one "u v" per edge."""
    with open(path, "w") as fh:
        fh.write(f"{g.n} {g.m}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_graph(path: str) -> Skeleton:
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ValueError("expected header line 'n m'")
        n, m = int(header[0]), int(header[1])
        edges = []
        for _ in range(m):
            u, v = fh.readline().split()
            edges.append((int(u), int(v)))
    return Skeleton(n, edges)
