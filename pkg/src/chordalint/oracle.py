"""Ground-truth holder and the R0 intervention responder.

Strategies never see the hidden DAG: they receive a Responder, whose only
knowledge path is ``respond``. The oracle returns every cut edge of the
original skeleton (including already-known ones) so it stays stateless with
respect to learner knowledge; the engine's merge is idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .pdag import Dag, Pdag, meek_closure, merge_orientations


class InterventionSizeError(ValueError):
    """An intervention exceeded the size cap; always a strategy bug."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"intervention of size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


@dataclass
class Transcript:
    """Ordered record of (intervention set, oriented cut edges returned)."""

    entries: list = field(default_factory=list)

    def append(self, intervention: frozenset, response: frozenset) -> None:
        self.entries.append((intervention, response))

    def __len__(self) -> int:
        return len(self.entries)

    def interventions(self) -> list:
        return [i for i, _ in self.entries]

    def node_accesses(self) -> int:
        return sum(len(i) for i, _ in self.entries)

    def serialize(self) -> str:
        lines = []
        for t, (intervention, response) in enumerate(self.entries, start=1):
            ids = " ".join(str(v) for v in sorted(intervention))
            arcs = ", ".join(f"{u}>{v}" for u, v in sorted(response))
            lines.append(f"I {t}: {{{ids}}} -> {arcs}")
        return "\n".join(lines)

    def replay(self, skeleton) -> Pdag:
        """Drive a fresh engine through the recorded responses."""
        p = Pdag(skeleton)
        for t, (_, response) in enumerate(self.entries, start=1):
            seed = merge_orientations(p, response, intervention_index=t)
            meek_closure(p, seed)
        return p


class GroundTruth:
    """Hidden true DAG plus honest experiment metering."""

    def __init__(self, dag: Dag, k_cap: int):
        if k_cap < 0:
            raise ValueError("k_cap must be nonnegative")
        self._dag = dag
        self.k_cap = k_cap
        self.experiments = 0
        self.node_accesses = 0

    @property
    def n(self) -> int:
        return self._dag.skeleton.n

    def respond(self, intervention: Iterable) -> frozenset:
        """True orientations of every skeleton edge cut by the intervention.

        Counters are charged for every accepted call, empty sets included.
        """
        s = frozenset(intervention)
        if len(s) > self.k_cap:
            raise InterventionSizeError(len(s), self.k_cap)
        if any(not 0 <= v < self.n for v in s):
            raise ValueError("intervention vertex out of range")
        self.experiments += 1
        self.node_accesses += len(s)
        dag = self._dag
        out = set()
        for v in s:
            for u in dag.skeleton.adj[v]:
                if u not in s:
                    out.add((u, v) if dag.has_arc(u, v) else (v, u))
        return frozenset(out)

    def responder(self) -> "Responder":
        return Responder(self)

    def matches(self, candidate: Dag) -> bool:
        """Final-answer check; not available to strategies."""
        return candidate.arcs() == self._dag.arcs()


class Responder:
    """The opaque interface handed to strategies."""

    __slots__ = ("_gt",)

    def __init__(self, gt: GroundTruth):
        self._gt = gt

    @property
    def n(self) -> int:
        return self._gt.n

    @property
    def k_cap(self) -> int:
        return self._gt.k_cap

    @property
    def experiments(self) -> int:
        return self._gt.experiments

    def respond(self, intervention: Iterable) -> frozenset:
        return self._gt.respond(intervention)
