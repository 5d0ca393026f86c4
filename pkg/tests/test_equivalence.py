import pytest
from hypothesis import given

from conftest import all_partitions_upto, partitions
from helpers import rook_counts_brute_force

from ferrers import (
    Partition,
    TransformError,
    TransformStep,
    ij_transform,
    rook_classes,
    rook_equivalent,
    rook_multiset,
    rook_numbers,
    transform_chain,
    width_wilf_equivalent_upto,
    wilf_equivalent_upto,
)
from ferrers.equivalence import transform_neighbors


class TestRookMultiset:
    def test_examples(self):
        assert rook_multiset(Partition([3, 1]), 2) == (3, 4)
        assert rook_multiset(Partition(), 3) == (1, 2, 3)
        with pytest.raises(ValueError):
            rook_multiset(Partition([1, 1, 1]), 2)

    def test_equality_is_height_independent(self):
        a, b = Partition([3, 2]), Partition([3, 1, 1])
        for h in (3, 4, 6):
            assert rook_multiset(a, h) == rook_multiset(b, h)
        c = Partition([2, 1])
        for h in (3, 5):
            assert rook_multiset(a, h) != rook_multiset(c, h)

    def test_decision_examples(self):
        assert rook_equivalent(Partition([3, 1]), Partition([2, 2]))
        assert rook_equivalent(Partition([3, 2]), Partition([3, 1, 1]))
        assert not rook_equivalent(Partition([2, 1]), Partition([1, 1, 1]))
        assert rook_equivalent(Partition(), Partition())

    @given(partitions())
    def test_reflexive_and_conjugation_invariant(self, mu):
        assert rook_equivalent(mu, mu)
        assert rook_equivalent(mu, mu.conjugate())


class TestRookNumbers:
    def test_examples(self):
        assert rook_numbers(Partition([2, 2])) == (1, 4, 2)
        assert rook_numbers(Partition([1])) == (1, 1)
        assert rook_numbers(Partition()) == (1,)

    def test_first_two_entries(self):
        for mu in all_partitions_upto(7, include_empty=False):
            r = rook_numbers(mu)
            assert r[0] == 1 and r[1] == mu.weight
            assert len(r) - 1 <= min(mu.height, mu.width)

    def test_against_brute_force_placements(self):
        for mu in all_partitions_upto(7):
            assert rook_numbers(mu) == rook_counts_brute_force(mu), mu


class TestTransforms:
    def test_corner_example(self):
        assert ij_transform(Partition([3, 1]), 1, 2) == (2, 2)

    def test_whole_board_is_conjugation(self):
        for mu in all_partitions_upto(7):
            assert ij_transform(mu, 1, 1) == mu.conjugate()

    def test_empty_subboard_is_identity(self):
        mu = Partition([3, 1])
        assert ij_transform(mu, 5, 1) == mu
        assert ij_transform(mu, 1, 9) == mu

    def test_invalid_transform_rejected(self):
        with pytest.raises(TransformError):
            ij_transform(Partition([4, 1]), 1, 3)

    def test_valid_transforms_preserve_weight_and_rook_class(self):
        for mu in all_partitions_upto(9, include_empty=False):
            for step, result in transform_neighbors(mu):
                assert result.weight == mu.weight, (mu, step)
                assert rook_equivalent(mu, result), (mu, step)


class TestTransformChain:
    def test_single_step_example(self):
        assert transform_chain(Partition([3, 1]), Partition([2, 2]), 4) == [
            TransformStep(1, 2)
        ]

    def test_identity_chain(self):
        mu = Partition([2, 1])
        assert transform_chain(mu, mu, 4) == []

    def test_chain_steps_replay(self):
        mu, tau = Partition([4, 2, 1]), Partition([3, 3, 1])
        chain = transform_chain(mu, tau, 8)
        assert chain is not None
        board = mu
        for step in chain:
            board = ij_transform(board, step.i, step.j)
        assert board == tau

    def test_inequivalent_boards_have_no_chain(self):
        assert transform_chain(Partition([2, 1]), Partition([1, 1, 1]), 6) is None

    def test_budget_is_distinct_from_no_chain(self):
        from ferrers import BudgetExceededError

        with pytest.raises(BudgetExceededError):
            transform_chain(
                Partition([4, 3, 2]), Partition([3, 3, 3]), 10, node_budget=1
            )


class TestWilfDecisions:
    def test_rook_equivalent_pair_is_wilf_equivalent(self):
        assert wilf_equivalent_upto(Partition([3, 1]), Partition([2, 2]), 16)

    def test_reflexive(self):
        assert wilf_equivalent_upto(Partition([2, 1]), Partition([2, 1]), 10)

    def test_counterexample_diverges_early(self):
        assert not wilf_equivalent_upto(Partition([2, 1]), Partition([1, 1, 1]), 6)

    def test_width_wilf_examples(self):
        assert width_wilf_equivalent_upto(Partition([3, 2]), Partition([3, 1, 1]), 16)
        assert not width_wilf_equivalent_upto(Partition([3, 1]), Partition([2, 2]), 12)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            wilf_equivalent_upto(Partition(), Partition([1]), 6)


class TestRookClasses:
    def test_weight_four(self):
        classes = rook_classes(4)
        as_sets = [set(c) for c in classes]
        assert {Partition([4]), Partition([1, 1, 1, 1])} in as_sets
        assert {Partition([3, 1]), Partition([2, 2]), Partition([2, 1, 1])} in as_sets
        assert len(classes) == 2

    def test_weight_zero(self):
        assert rook_classes(0) == [[Partition()]]

    def test_class_count_bounded_by_partition_count(self):
        from helpers import euler_partition_counts

        counts = euler_partition_counts(9)
        for n in range(10):
            classes = rook_classes(n)
            assert len(classes) <= counts[n]
            assert sum(len(c) for c in classes) == counts[n]

    def test_classes_are_conjugation_closed(self):
        for n in range(1, 9):
            for cls in rook_classes(n):
                members = set(cls)
                assert {m.conjugate() for m in members} == members
