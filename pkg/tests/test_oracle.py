"""Ground-truth oracle: cut-edge responses, metering, transcripts."""

import pytest

from chordalint import (
    GroundTruth,
    InterventionSizeError,
    Ordering,
    Pdag,
    Transcript,
    complete_dag,
    meek_closure,
    merge_orientations,
    orient_from_ordering,
    random_chordal,
)

from conftest import path_skeleton


def _k3_truth(k_cap=3):
    return GroundTruth(complete_dag(3, Ordering((0, 1, 2))), k_cap=k_cap)


class TestRespond:
    def test_triangle_single_vertex_cut(self):
        gt = _k3_truth()
        assert gt.respond({0}) == frozenset({(0, 1), (0, 2)})

    def test_empty_intervention_charged(self):
        gt = _k3_truth()
        assert gt.respond(frozenset()) == frozenset()
        assert gt.experiments == 1
        assert gt.node_accesses == 0

    def test_path_interior_vertex_cuts_both_edges(self):
        dag = orient_from_ordering(path_skeleton(3), Ordering((0, 1, 2)))
        gt = GroundTruth(dag, k_cap=1)
        assert gt.respond({1}) == frozenset({(0, 1), (1, 2)})

    def test_edges_within_intervention_not_returned(self):
        gt = _k3_truth()
        assert gt.respond({0, 1}) == frozenset({(0, 2), (1, 2)})

    def test_size_cap_enforced(self):
        gt = _k3_truth(k_cap=1)
        with pytest.raises(InterventionSizeError):
            gt.respond({0, 1})
        assert gt.experiments == 0  # rejected calls are not charged

    def test_out_of_range_vertex(self):
        gt = _k3_truth()
        with pytest.raises(ValueError):
            gt.respond({7})

    def test_pure_function_of_input(self):
        gt = _k3_truth()
        first = gt.respond({1})
        second = gt.respond({1})
        assert first == second
        assert gt.experiments == 2
        assert gt.node_accesses == 2

    def test_counters_accumulate(self):
        gt = _k3_truth()
        gt.respond({0})
        gt.respond({1, 2})
        assert gt.experiments == 2
        assert gt.node_accesses == 3


class TestResponder:
    def test_exposes_only_metadata(self):
        gt = _k3_truth()
        responder = gt.responder()
        assert responder.n == 3
        assert responder.k_cap == 3
        assert responder.experiments == 0
        for attr in ("dag", "matches", "_dag"):
            assert not hasattr(responder, attr)

    def test_delegates_and_meters(self):
        gt = _k3_truth()
        responder = gt.responder()
        assert responder.respond({2}) == frozenset({(0, 2), (1, 2)})
        assert responder.experiments == 1


class TestMatches:
    def test_accepts_truth_rejects_other(self):
        gt = _k3_truth()
        truth = complete_dag(3, Ordering((0, 1, 2)))
        other = complete_dag(3, Ordering((2, 1, 0)))
        assert gt.matches(truth)
        assert not gt.matches(other)


class TestTranscript:
    def test_serialize_format(self):
        t = Transcript()
        t.append(frozenset({2, 0}), frozenset({(0, 1), (2, 1)}))
        t.append(frozenset(), frozenset())
        assert t.serialize() == "I 1: {0 2} -> 0>1, 2>1\nI 2: {} -> "

    def test_counters(self):
        t = Transcript()
        t.append(frozenset({0, 1}), frozenset())
        t.append(frozenset({2}), frozenset())
        assert len(t) == 2
        assert t.node_accesses() == 3
        assert t.interventions() == [frozenset({0, 1}), frozenset({2})]

    @pytest.mark.parametrize("seed", range(10))
    def test_replay_reproduces_final_state(self, seed):
        dag, _sigma = random_chordal(12, 1.5, seed)
        gt = GroundTruth(dag, k_cap=3)
        p = Pdag(dag.skeleton)
        t = Transcript()
        for v in range(0, 12, 2):
            response = gt.respond({v})
            t.append(frozenset({v}), response)
            pending = merge_orientations(p, response, intervention_index=len(t))
            meek_closure(p, pending)
        replayed = t.replay(dag.skeleton)
        assert replayed.snapshot() == p.snapshot()
