"""Orientation engine: R0 merge, R1-R4 closure, brute-force equivalence."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordalint import (
    Dag,
    NoExtensionError,
    NotChordalError,
    Ordering,
    OrientationConflictError,
    Pdag,
    Skeleton,
    brute_force_closure,
    chain_components,
    find_immoralities,
    meek_closure,
    merge_orientations,
    orient_from_ordering,
    random_chordal,
)

from conftest import complete_skeleton, path_skeleton, random_graph


class TestDag:
    def test_arcs_and_has_arc(self):
        g = path_skeleton(3)
        d = Dag(g, (frozenset(), frozenset({0}), frozenset({1})))
        assert d.arcs() == {(0, 1), (1, 2)}
        assert d.has_arc(0, 1) and not d.has_arc(1, 0)

    def test_rejects_cycle(self):
        g = complete_skeleton(3)
        with pytest.raises(ValueError):
            Dag(g, (frozenset({2}), frozenset({0}), frozenset({1})))

    def test_rejects_unoriented_edge(self):
        g = path_skeleton(3)
        with pytest.raises(ValueError):
            Dag(g, (frozenset(), frozenset({0}), frozenset()))

    def test_rejects_non_edge_arc(self):
        g = path_skeleton(3)
        with pytest.raises(ValueError):
            Dag(g, (frozenset(), frozenset({0}), frozenset({0})))


class TestOrientFromOrdering:
    def test_triangle_identity_order(self):
        d = orient_from_ordering(complete_skeleton(3), Ordering((0, 1, 2)))
        assert d.arcs() == {(0, 1), (0, 2), (1, 2)}

    def test_path_rooted_at_middle(self):
        d = orient_from_ordering(path_skeleton(3), Ordering((1, 0, 2)))
        assert d.arcs() == {(1, 0), (1, 2)}

    @pytest.mark.parametrize("seed", range(15))
    def test_peo_orientation_has_no_immoralities(self, seed):
        dag, _sigma = random_chordal(12, 1.5, seed)
        assert find_immoralities(dag) == set()


class TestFindImmoralities:
    def test_collider_detected(self):
        g = path_skeleton(3)
        d = Dag(g, (frozenset(), frozenset({0, 2}), frozenset()))
        assert find_immoralities(d) == {(0, 1, 2)}

    def test_directed_path_clean(self):
        g = path_skeleton(4)
        d = orient_from_ordering(g, Ordering((0, 1, 2, 3)))
        assert find_immoralities(d) == set()


class TestMerge:
    def test_empty_merge_is_noop(self):
        p = Pdag(complete_skeleton(3))
        assert merge_orientations(p, []) == []
        assert p.undirected_count == 3

    def test_single_edge_of_triangle(self):
        p = Pdag(complete_skeleton(3))
        merge_orientations(p, [(0, 1)])
        assert p.has_arc(0, 1)
        assert p.undirected_count == 2

    def test_conflict_is_hard_error(self):
        p = Pdag(complete_skeleton(3))
        merge_orientations(p, [(0, 1)])
        with pytest.raises(OrientationConflictError):
            merge_orientations(p, [(1, 0)])

    def test_duplicate_direction_ignored(self):
        p = Pdag(complete_skeleton(3))
        merge_orientations(p, [(0, 1)])
        assert merge_orientations(p, [(0, 1)]) == []

    def test_non_edge_rejected(self):
        p = Pdag(path_skeleton(3))
        with pytest.raises(ValueError):
            merge_orientations(p, [(0, 2)])


def _closed(skeleton, arcs, trace=None):
    p = Pdag(skeleton, trace=trace)
    seed = merge_orientations(p, arcs)
    return meek_closure(p, seed)


class TestRules:
    def test_r1_chain_extension(self):
        # c->a with a-b and c,b non-adjacent forces a->b.
        g = path_skeleton(3)
        p = _closed(g, [(0, 1)])
        assert p.has_arc(1, 2)

    def test_r2_transitive_shortcut(self):
        # a->c->b with a-b forces a->b.
        g = complete_skeleton(3)
        p = _closed(g, [(0, 2), (2, 1)])
        assert p.has_arc(0, 1)

    def test_r3_double_collider(self):
        # a-b, a-c, a-d, c->b, d->b, c,d non-adjacent forces a->b.
        g = Skeleton(4, [(0, 1), (0, 2), (0, 3), (2, 1), (3, 1)])
        p = _closed(g, [(2, 1), (3, 1)])
        assert p.has_arc(0, 1)

    def test_r4_rotation(self):
        # d->b->c with a-d, a-b, a-c and c,d non-adjacent forces a->c.
        g = Skeleton(4, [(0, 1), (0, 2), (0, 3), (3, 1), (1, 2)])
        p = _closed(g, [(3, 1), (1, 2)])
        assert p.has_arc(0, 2)

    def test_trace_records_rule_and_intervention(self):
        trace = []
        p = Pdag(path_skeleton(3), trace=trace)
        seed = merge_orientations(p, [(0, 1)], intervention_index=1)
        meek_closure(p, seed)
        assert trace == ["R0 0->1 | I=1", "R1 1->2"]


def _random_partial_state(n: int, seed: int) -> Pdag:
    """A random chordal PEO-oriented DAG with a random subset revealed."""
    rng = random.Random(seed)
    dag, _sigma = random_chordal(n, rng.uniform(0.5, 2.5), seed)
    revealed = [a for a in sorted(dag.arcs()) if rng.random() < rng.random()]
    p = Pdag(dag.skeleton)
    seed_edges = merge_orientations(p, revealed)
    return meek_closure(p, seed_edges)


class TestClosureProperties:
    @pytest.mark.parametrize("seed", range(60))
    def test_matches_brute_force(self, seed):
        p = _random_partial_state(2 + seed % 6, seed)
        expected = brute_force_closure(p)
        assert p.directed_edges() == expected.directed_edges()

    @pytest.mark.parametrize("seed", range(20))
    def test_idempotent_and_monotone(self, seed):
        p = _random_partial_state(2 + seed % 6, seed)
        before = p.snapshot()
        meek_closure(p)
        assert p.snapshot() == before

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10**9))
    def test_closure_order_independent(self, seed):
        p = _random_partial_state(3 + seed % 5, seed % 1000)
        cold = Pdag(p.skeleton)
        merge_orientations(cold, sorted(p.directed_edges()))
        meek_closure(cold)  # no worklist seed: cold-start full scan
        assert cold.snapshot() == p.snapshot()

    def test_undirected_triangle_stays_undirected(self):
        p = meek_closure(Pdag(complete_skeleton(3)))
        assert brute_force_closure(p).undirected_count == 3

    def test_undirected_path_stays_undirected(self):
        p = meek_closure(Pdag(path_skeleton(3)))
        assert brute_force_closure(p).undirected_count == 2

    def test_acyclicity_assertion(self):
        p = Pdag(complete_skeleton(3))
        merge_orientations(p, [(0, 1), (1, 2)])
        p.assert_acyclic()


class TestBruteForce:
    def test_size_guard(self):
        with pytest.raises(ValueError):
            brute_force_closure(Pdag(complete_skeleton(11)))

    def test_no_extension_raises(self):
        p = Pdag(complete_skeleton(3))
        merge_orientations(p, [(0, 1), (1, 2), (2, 0)])
        with pytest.raises(NoExtensionError):
            brute_force_closure(p)

    def test_fully_directed_round_trip(self):
        d = orient_from_ordering(complete_skeleton(4), Ordering((2, 0, 3, 1)))
        p = Pdag(d.skeleton)
        merge_orientations(p, sorted(d.arcs()))
        assert brute_force_closure(p).to_dag().arcs() == d.arcs()


class TestChainComponents:
    def test_fully_directed_empty(self):
        d = orient_from_ordering(complete_skeleton(4), Ordering((0, 1, 2, 3)))
        p = Pdag(d.skeleton)
        meek_closure(p, merge_orientations(p, sorted(d.arcs())))
        assert chain_components(p) == []

    def test_fully_undirected_is_whole_graph(self):
        g = path_skeleton(4)
        comps = chain_components(Pdag(g))
        assert len(comps) == 1
        sub, verts = comps[0]
        assert verts == [0, 1, 2, 3]
        assert sub == g

    def test_non_chordal_component_rejected(self):
        g = Skeleton(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        with pytest.raises(NotChordalError):
            chain_components(Pdag(g))

    @pytest.mark.parametrize("seed", range(10))
    def test_intervention_states_have_chordal_components(self, seed):
        # states reached through actual interventions, not arbitrary subsets
        rng = random.Random(seed)
        dag, _sigma = random_chordal(10, 1.5, seed)
        p = Pdag(dag.skeleton)
        for v in rng.sample(range(10), 3):
            cut = {
                (u, v) if dag.has_arc(u, v) else (v, u)
                for u in dag.skeleton.adj[v]
            }
            meek_closure(p, merge_orientations(p, sorted(cut)))
        for sub, verts in chain_components(p):
            assert sub.n == len(verts)
            assert sub.m >= 1
