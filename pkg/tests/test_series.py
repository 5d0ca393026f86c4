import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_partitions_upto, partitions
from helpers import euler_partition_counts, inclusion_exclusion_series

from ferrers import (
    BudgetExceededError,
    Partition,
    TruncatedSeries,
    count_containing,
    euler_inverse,
    f_mu_k_closed,
    f_mu_k_enumerated,
    q_gf,
    wilf_series,
)

small_series = st.lists(st.integers(-50, 50), min_size=1, max_size=9).map(TruncatedSeries)


class TestRing:
    def test_hand_convolutions(self):
        one_plus_q = TruncatedSeries([1, 1, 0])
        one_minus_q = TruncatedSeries([1, -1, 0])
        assert (one_plus_q * one_minus_q).coefficients == (1, 0, -1)
        s = TruncatedSeries([1, 1, 1])
        assert (s * s).coefficients == (1, 2, 3)

    def test_additive_identity(self):
        a = TruncatedSeries([3, 1, 4, 1])
        assert a + TruncatedSeries.zero(3) == a
        assert a - a == TruncatedSeries.zero(3)

    def test_mixing_bounds_truncates_to_smaller(self):
        a = TruncatedSeries([1, 1, 1, 1, 1])
        b = TruncatedSeries([1, 1])
        assert (a + b).bound == 1
        assert (a * b).coefficients == (1, 2)

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            TruncatedSeries([1.5])

    def test_monomial_and_shift(self):
        assert TruncatedSeries.monomial(2, 4).coefficients == (0, 0, 1, 0, 0)
        assert TruncatedSeries.monomial(7, 4).coefficients == (0, 0, 0, 0, 0)
        assert TruncatedSeries([1, 2, 3]).shifted(1).coefficients == (0, 1, 2)

    @given(small_series, small_series, small_series)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    def test_wire_form_uses_decimal_strings(self):
        big = 10**30
        s = TruncatedSeries([1, big])
        assert s.to_decimal_strings() == ["1", str(big)]


class TestEulerInverse:
    def test_geometric(self):
        assert euler_inverse(1, 3).coefficients == (1, 1, 1, 1)

    def test_parts_at_most_two(self):
        assert euler_inverse(2, 4).coefficients == (1, 1, 2, 2, 3)

    def test_full_product_gives_partition_counts(self):
        n = 18
        assert euler_inverse(n, n).coefficients == euler_partition_counts(n)

    def test_needs_a_factor(self):
        with pytest.raises(ValueError):
            euler_inverse(0, 4)


class TestQGf:
    def test_single_column_family(self):
        assert q_gf(Partition([1]), 3).coefficients == (0, 1, 1, 1)

    def test_width_two_family(self):
        assert q_gf(Partition([2]), 4).coefficients == (0, 0, 1, 1, 2)

    @given(partitions(max_weight=8, allow_empty=False))
    def test_leading_coefficient_is_one(self, beta):
        s = q_gf(beta, beta.weight + 2)
        assert s.coefficient(beta.weight) == 1
        assert all(c == 0 for c in s.coefficients[: beta.weight])

    def test_rejects_empty_base(self):
        with pytest.raises(ValueError):
            q_gf(Partition(), 4)

    @given(partitions(max_weight=6, allow_empty=False))
    def test_counts_extension_family_members(self, beta):
        from helpers import q_set_weight_n

        s = q_gf(beta, 10)
        for n in range(11):
            assert s.coefficient(n) == len(q_set_weight_n(beta, n))


class TestEnumeratedSeries:
    def test_offset_one_from_single_box(self):
        s = f_mu_k_enumerated(Partition([1]), 1, 6)
        assert s.coefficients == (0, 0, 1, 1, 2, 2, 3)

    def test_offset_zero_is_column_family(self):
        s = f_mu_k_enumerated(Partition([1]), 0, 4)
        assert s.coefficients == (0, 1, 1, 1, 1)

    def test_vanishes_below_weight_plus_offset(self):
        for mu in [Partition([2, 1]), Partition([3, 2])]:
            for k in (1, 2, 3):
                s = f_mu_k_enumerated(mu, k, 12)
                assert all(s.coefficient(n) == 0 for n in range(mu.weight + k))

    def test_input_validation(self):
        with pytest.raises(ValueError):
            f_mu_k_enumerated(Partition(), 1, 5)
        with pytest.raises(BudgetExceededError):
            f_mu_k_enumerated(Partition([1]), 1, 55)


class TestClosedSeries:
    def test_single_box_closed_form(self):
        # one augmented structure: empty hook, offset (1); numerator q^2
        got = f_mu_k_closed(Partition([1]), 1, 8, h=1)
        expected = euler_inverse(2, 8).shifted(2)
        assert got == expected

    def test_rejects_zero_offset_and_short_height(self):
        with pytest.raises(ValueError):
            f_mu_k_closed(Partition([1]), 0, 6)
        with pytest.raises(ValueError):
            f_mu_k_closed(Partition([2, 1, 1]), 1, 6, h=2)

    def test_matches_enumeration_smoke(self):
        # the acceptance suite covers |mu| <= 7; keep a fast sanity slice here
        for mu in all_partitions_upto(4, include_empty=False):
            for k in (1, 2):
                assert f_mu_k_closed(mu, k, 10) == f_mu_k_enumerated(mu, k, 10)

    def test_h_independence_smoke(self):
        mu = Partition([2, 2, 1])
        base = f_mu_k_closed(mu, 2, 12)
        for h in (4, 5, 6):
            assert f_mu_k_closed(mu, 2, 12, h=h) == base

    def test_inclusion_exclusion_identity(self):
        # signed sum over raw subsets of the ground set, evaluated literally
        for mu in all_partitions_upto(4, include_empty=False):
            for h in (1, 2):
                if mu.height > h:
                    continue
                for k in (1, 2):
                    direct = inclusion_exclusion_series(mu, k, h, 10)
                    assert direct == f_mu_k_enumerated(mu, k, 10), (mu, h, k)


class TestWilfSeries:
    def test_single_box_counts_all_nonempty_partitions(self):
        counts = euler_partition_counts(14)
        s = wilf_series(Partition([1]), 14)
        assert s.coefficients == tuple(
            c - (1 if n == 0 else 0) for n, c in enumerate(counts)
        )

    def test_hook_coefficient(self):
        assert wilf_series(Partition([2, 1]), 6).coefficient(4) == 2

    @given(partitions(max_weight=5, allow_empty=False))
    def test_first_coefficient_and_nonnegativity(self, mu):
        s = wilf_series(mu, mu.weight + 4)
        assert s.coefficient(mu.weight) == 1
        assert all(c >= 0 for c in s.coefficients)

    def test_matches_direct_counts(self):
        for mu in [Partition([2, 1]), Partition([3, 1]), Partition([2, 2]), Partition([1, 1])]:
            s = wilf_series(mu, 12)
            assert list(s.coefficients) == [count_containing(mu, n) for n in range(13)]

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            wilf_series(Partition(), 8)
