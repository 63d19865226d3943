"""Mixed-graph orientation state and the R0/R1-R4 inference machinery.

The engine is event-driven: every newly directed edge is queued and its local
rule patterns (R1-R4) are scanned against the current state, which reaches the
same fixpoint as exhaustive rule application (closure is confluent; every rule
instance has a last-arriving directed premise whose scan fires it).

Adjacency is kept as bitmasks so pattern scans are a handful of integer ANDs
even on dense graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Optional

from .graphs import Ordering, Skeleton, bits, mcs_peo

BRUTE_FORCE_LIMIT = 10


class OrientationConflictError(ValueError):
    """An edge arrived with the direction opposite to what is already known.

    With a ground-truth oracle this can only mean an engine or strategy bug,
    so it is a hard error rather than a silent overwrite.
    """

    def __init__(self, u: int, v: int):
        super().__init__(f"conflicting orientation for edge {u}->{v}")
        self.edge = (u, v)


class NoExtensionError(ValueError):
    """No acyclic immorality-free orientation is consistent with the Pdag."""


@dataclass(frozen=True)
class Dag:
    """A fully oriented skeleton. ``parents[v]`` is a frozenset of parents."""

    skeleton: Skeleton
    parents: tuple

    def __post_init__(self):
        if len(self.parents) != self.skeleton.n:
            raise ValueError("parents must cover every vertex")
        for v, ps in enumerate(self.parents):
            for u in ps:
                if not self.skeleton.has_edge(u, v):
                    raise ValueError(f"direction {u}->{v} is not a skeleton edge")
        for u, v in self.skeleton.edges():
            if (u in self.parents[v]) == (v in self.parents[u]):
                raise ValueError(f"edge ({u},{v}) must be oriented exactly once")
        if _toposort_parents(self.skeleton.n, self.parents) is None:
            raise ValueError("orientation is cyclic")

    def has_arc(self, u: int, v: int) -> bool:
        return u in self.parents[v]

    def arcs(self) -> set:
        return {(u, v) for v in range(self.skeleton.n) for u in self.parents[v]}


def _toposort_parents(n: int, parents) -> Optional[list]:
    indeg = [len(p) for p in parents]
    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for u in parents[v]:
            children[u].append(v)
    order = [v for v in range(n) if indeg[v] == 0]
    out = []
    queue = list(order)
    while queue:
        v = queue.pop()
        out.append(v)
        for w in children[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return out if len(out) == n else None


def orient_from_ordering(g: Skeleton, sigma: Ordering) -> Dag:
    """Orient every skeleton edge from the earlier to the later endpoint."""
    pos = sigma.inverse()
    parents: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges():
        if pos[u] < pos[v]:
            parents[v].add(u)
        else:
            parents[u].add(v)
    return Dag(g, tuple(frozenset(p) for p in parents))


def find_immoralities(d: Dag) -> set:
    """All induced v-structures (x, z, y) with x < y, x,y non-adjacent."""
    out = set()
    for z in range(d.skeleton.n):
        ps = sorted(d.parents[z])
        for i, x in enumerate(ps):
            for y in ps[i + 1 :]:
                if not d.skeleton.has_edge(x, y):
                    out.add((x, z, y))
    return out


class Pdag:
    """Partially directed graph over a fixed skeleton.

    Mutable and single-owner while a strategy runs; use ``snapshot`` for a
    cheap immutable view of the current orientation.
    """

    __slots__ = ("skeleton", "par", "ch", "und", "undirected_count", "trace")

    def __init__(self, skeleton: Skeleton, trace: Optional[list] = None):
        self.skeleton = skeleton
        self.par = [0] * skeleton.n  # par[v]: mask of u with u->v
        self.ch = [0] * skeleton.n  # ch[v]: mask of u with v->u
        self.und = list(skeleton.adj_mask)
        self.undirected_count = skeleton.m
        self.trace = trace  # optional list of rule-event strings

    def copy(self) -> "Pdag":
        p = Pdag.__new__(Pdag)
        p.skeleton = self.skeleton
        p.par = list(self.par)
        p.ch = list(self.ch)
        p.und = list(self.und)
        p.undirected_count = self.undirected_count
        p.trace = None
        return p

    # -- queries ------------------------------------------------------------

    def is_undirected(self, u: int, v: int) -> bool:
        return bool(self.und[u] >> v & 1)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.ch[u] >> v & 1)

    def directed_edges(self) -> set:
        return {(u, v) for v in range(self.skeleton.n) for u in bits(self.par[v])}

    def undirected_edges(self) -> set:
        return {
            (u, v)
            for u in range(self.skeleton.n)
            for v in bits(self.und[u])
            if u < v
        }

    def fully_directed(self) -> bool:
        return self.undirected_count == 0

    def to_dag(self) -> Dag:
        if not self.fully_directed():
            raise ValueError("Pdag still has undirected edges")
        return Dag(
            self.skeleton,
            tuple(frozenset(bits(self.par[v])) for v in range(self.skeleton.n)),
        )

    def snapshot(self) -> frozenset:
        """The current directed edge set, hashable and immutable."""
        return frozenset(self.directed_edges())

    def assert_acyclic(self) -> None:
        parents = [set(bits(m)) for m in self.par]
        if _toposort_parents(self.skeleton.n, parents) is None:
            raise OrientationConflictError(-1, -1)

    # -- mutation -----------------------------------------------------------

    def _orient(
        self, u: int, v: int, rule: str, pending: list, suffix: str = ""
    ) -> None:
        if self.ch[u] >> v & 1:
            return
        if self.ch[v] >> u & 1:
            raise OrientationConflictError(u, v)
        if not (self.und[u] >> v & 1):
            raise ValueError(f"({u},{v}) is not a skeleton edge")
        bu, bv = 1 << u, 1 << v
        self.und[u] &= ~bv
        self.und[v] &= ~bu
        self.ch[u] |= bv
        self.par[v] |= bu
        self.undirected_count -= 1
        if self.trace is not None:
            self.trace.append(f"{rule} {u}->{v}{suffix}")
        pending.append((u, v))

    def _propagate(self, pending: list) -> None:
        adj = self.skeleton.adj_mask
        while pending:
            u, v = pending.pop()
            bu = 1 << u
            # R1: u->v, v-b, u,b non-adjacent  =>  v->b
            for b in bits(self.und[v] & ~adj[u]):
                self._orient(v, b, "R1", pending)
            # R2 with u->v as first leg: a=u, c=v, v->b, u-b  =>  u->b
            for b in bits(self.und[u] & self.ch[v]):
                self._orient(u, b, "R2", pending)
            # R2 with u->v as second leg: a->u, u->v, a-v  =>  a->v
            for a in bits(self.par[u] & self.und[v]):
                self._orient(a, v, "R2", pending)
            # R3: u->v, d->v, u,d non-adjacent, a-u, a-d, a-v  =>  a->v
            for d in bits(self.par[v] & ~adj[u] & ~bu):
                for a in bits(self.und[u] & self.und[d] & self.und[v]):
                    self._orient(a, v, "R3", pending)
            # R4, u->v as b->c: d->u, d,v non-adjacent, a-d, a-u, a-v  =>  a->v
            for d in bits(self.par[u] & ~adj[v]):
                for a in bits(self.und[u] & self.und[d] & self.und[v]):
                    self._orient(a, v, "R4", pending)
            # R4, u->v as d->b: v->c, c,u non-adjacent, a-u, a-v, a-c  =>  a->c
            for c in bits(self.ch[v] & ~adj[u] & ~bu):
                for a in bits(self.und[u] & self.und[v] & self.und[c]):
                    self._orient(a, c, "R4", pending)


def merge_orientations(
    p: Pdag, edges: Iterable, intervention_index: Optional[int] = None
) -> list:
    """Record externally learnt directed edges in ``p`` without rule closure.

    Edges already known in the same direction are ignored; an opposite
    direction raises OrientationConflictError. Returns the newly oriented
    edges, which ``meek_closure`` accepts as its worklist seed.
    """
    pending: list = []
    suffix = "" if intervention_index is None else f" | I={intervention_index}"
    for u, v in sorted(edges):
        p._orient(u, v, "R0", pending, suffix)
    return pending


def meek_closure(p: Pdag, seed: Optional[list] = None) -> Pdag:
    """Apply R1-R4 to a fixpoint, in place.

    ``seed`` limits the scan to consequences of those newly directed edges;
    with no seed every directed edge is (re)processed, which is the correct
    cold-start call.
    """
    pending = list(seed) if seed is not None else sorted(p.directed_edges())
    p._propagate(pending)
    return p


def chain_components(p: Pdag) -> list:
    """Connected components of the undirected part, as induced Skeletons.

    Isolated vertices are dropped. Every component of a valid state is
    chordal; a non-chordal component raises NotChordalError.
    """
    n = p.skeleton.n
    seen = [False] * n
    out = []
    for root in range(n):
        if seen[root] or not p.und[root]:
            continue
        comp = {root}
        stack = [root]
        seen[root] = True
        while stack:
            v = stack.pop()
            for u in bits(p.und[v]):
                if not seen[u]:
                    seen[u] = True
                    comp.add(u)
                    stack.append(u)
        verts = sorted(comp)
        index = {v: i for i, v in enumerate(verts)}
        edges = [
            (index[u], index[v]) for u in verts for v in bits(p.und[u]) if u < v
        ]
        sub = Skeleton(len(verts), edges)
        mcs_peo(sub)  # raises NotChordalError on an invalid state
        out.append((sub, verts))
    return out


def brute_force_closure(p: Pdag) -> Pdag:
    """Test oracle: graph union of every consistent full orientation.

    Enumerates all acyclic immorality-free orientations of the skeleton that
    agree with p's directed edges (via vertex permutations, deduplicated) and
    returns a fresh Pdag whose directed part is their union. Guarded to small
    n; raises NoExtensionError if nothing is consistent.
    """
    n = p.skeleton.n
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute_force_closure is capped at n <= {BRUTE_FORCE_LIMIT}")
    edges = p.skeleton.edges()
    adj = p.skeleton.adj_mask
    known = [(u, v) for (u, v) in p.directed_edges()]
    orientations = set()
    for perm in permutations(range(n)):
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        orient = tuple(
            (u, v) if pos[u] < pos[v] else (v, u) for u, v in edges
        )
        if orient in orientations:
            continue
        if any(pos[u] > pos[v] for u, v in known):
            continue
        # no immoralities: every pair of parents of a vertex must be adjacent
        parents = [0] * n
        ok = True
        for u, v in orient:
            parents[v] |= 1 << u
        for v in range(n):
            ps = parents[v]
            for u in bits(ps):
                if ps & ~adj[u] & ~(1 << u):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            orientations.add(orient)
    if not orientations:
        raise NoExtensionError("no consistent immorality-free extension exists")
    result = Pdag(p.skeleton)
    agreed: dict = {}
    for orient in orientations:
        for i, arc in enumerate(orient):
            if i not in agreed:
                agreed[i] = arc
            elif agreed[i] != arc:
                agreed[i] = None
    pending: list = []
    for arc in agreed.values():
        if arc is not None:
            result._orient(arc[0], arc[1], "BF", pending)
    return result
