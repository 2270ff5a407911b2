"""Enumeration tables and exact walker dynamic programs.

Core claims:
    - the four pair tables reproduce hand-enumerated small cases and their
      totals are the expected binomial quantities
    - table keys stay inside the documented windows and tables reflect
      under r -> n - r
    - profile-based counting agrees with the path-object counting operations
    - the walker programs reproduce hand-computed meeting probabilities and
      the documented degenerate cases
    - preconditions (ranges, size limits, probability bounds) are enforced
"""

from fractions import Fraction
from itertools import combinations

import pytest

from pathpairs import oracle
from pathpairs.paths import PathNE, PathPair, intersections_interior


def test_rect_table_two_steps():
    table = oracle.rect_pair_table(2, 1)
    assert table.entries == {0: 2, 1: 2}
    assert table.total == 4


def test_rect_table_three_steps():
    table = oracle.rect_pair_table(3, 1)
    assert table.entries == {0: 2, 1: 4, 2: 3}
    assert table.total == 9


def test_rect_table_single_path_column():
    for n in (1, 2, 5):
        assert oracle.rect_pair_table(n, 0).entries == {n - 1: 1}
        assert oracle.rect_pair_table(n, n).entries == {n - 1: 1}


def test_rect_table_totals_and_reflection():
    from math import comb

    for n in range(1, 7):
        for r in range(n + 1):
            table = oracle.rect_pair_table(n, r)
            assert table.total == comb(n, r) ** 2
            assert table.entries == oracle.rect_pair_table(n, n - r).entries
            assert all(0 <= k <= n - 1 for k in table.entries)


def test_rect_table_matches_path_objects():
    # the profile comparison is the same count the path operations define
    def by_paths(n, r):
        vocab = [
            "".join("E" if t in epos else "N" for t in range(n))
            for epos in combinations(range(n), r)
        ]
        table = {}
        for wa in vocab:
            for wb in vocab:
                k = intersections_interior(
                    PathPair(PathNE.from_word(wa), PathNE.from_word(wb))
                )
                table[k] = table.get(k, 0) + 1
        return table

    for n in range(1, 6):
        for r in range(n + 1):
            assert oracle.rect_pair_table(n, r).entries == by_paths(n, r)


def test_rect_table_rejects_bad_r():
    with pytest.raises(ValueError):
        oracle.rect_pair_table(3, 4)


def test_endpoint_table_examples():
    assert oracle.endpoint_pair_table(2, 0, 1).entries == {0: 1, 1: 1}
    assert oracle.endpoint_pair_table(1, 0, 1).entries == {0: 1}
    assert oracle.endpoint_pair_table(3, 0, 3).entries == {0: 1}


def test_endpoint_table_rejects_equal_or_swapped():
    with pytest.raises(ValueError):
        oracle.endpoint_pair_table(3, 2, 2)
    with pytest.raises(ValueError):
        oracle.endpoint_pair_table(3, 2, 1)


def test_free_table_examples():
    assert oracle.free_pair_table(1).entries == {0: 2, 1: 2}
    assert oracle.free_pair_table(0).entries == {0: 1}
    assert oracle.free_pair_table(8).get(0) == 12870  # C(16, 8)


def test_free_table_total():
    for n in range(6):
        table = oracle.free_pair_table(n)
        assert table.total == 4 ** n
        assert all(0 <= k <= n for k in table.entries)


def test_same_endpoint_table_examples():
    assert oracle.same_endpoint_pair_table(1).entries == {0: 2}
    assert oracle.same_endpoint_pair_table(2).entries == {0: 2, 1: 4}
    assert oracle.same_endpoint_pair_table(3).total == 20  # C(6, 3)


def test_same_endpoint_rejects_zero():
    with pytest.raises(ValueError):
        oracle.same_endpoint_pair_table(0)


def test_enumeration_limits():
    with pytest.raises(ValueError):
        oracle.free_pair_table(13)
    with pytest.raises(ValueError):
        oracle.rect_pair_table(13, 5)
    # an explicit limit loosens the bound
    assert oracle.rect_pair_table(13, 0, limit=13).entries == {12: 1}


def test_count_table_rejects_negative():
    with pytest.raises(ValueError):
        oracle.CountTable.from_entries({-1: 2})
    with pytest.raises(ValueError):
        oracle.CountTable.from_entries({0: -2})


def test_count_table_mean():
    table = oracle.CountTable.from_entries({0: 2, 1: 2})
    assert table.mean == Fraction(1, 2)


# --- walker programs ---------------------------------------------------------


def test_barrier_walkers_starting_on_axes_always_reach_origin_first():
    for p in (Fraction(0), Fraction(2, 5), Fraction(1)):
        config = oracle.BarrierConfig(0, 0, 0, oracle.ConstantRate(p))
        assert oracle.barrier_meet_prob(config) == 1
    config = oracle.BarrierConfig(0, 0, 2, oracle.ConstantRate(Fraction(1, 3)))
    assert oracle.barrier_meet_prob(config) == 1


def test_barrier_single_interior_step():
    for p in (Fraction(1, 3), Fraction(2, 5), Fraction(1, 2)):
        config = oracle.BarrierConfig(1, 0, 0, oracle.ConstantRate(p))
        assert oracle.barrier_meet_prob(config) == p


def test_barrier_symmetric_square():
    config = oracle.BarrierConfig(1, 1, 0, oracle.ConstantRate(Fraction(1, 2)))
    assert oracle.barrier_meet_prob(config) == Fraction(1, 2)


def test_barrier_rejects_negative_geometry():
    with pytest.raises(ValueError):
        oracle.BarrierConfig(-1, 0, 0, oracle.ConstantRate(Fraction(1, 2)))


def test_rates_reject_bad_probabilities():
    with pytest.raises(ValueError):
        oracle.ConstantRate(Fraction(3, 2))
    with pytest.raises(ValueError):
        oracle.LevelRate((Fraction(1, 2), Fraction(-1, 4)))
    with pytest.raises(ValueError):
        oracle.LevelRate(())


def test_level_rate_reuses_last_value():
    rate = oracle.LevelRate((Fraction(1, 3), Fraction(1, 4)))
    assert rate.west(1, 1) == Fraction(1, 4)  # level 2
    assert rate.west(5, 5) == Fraction(1, 4)  # beyond the table
    assert rate.west(1, 0) == Fraction(1, 3)  # level 1


def test_same_start_one_step_split():
    for p in (Fraction(1, 2), Fraction(1, 5), Fraction(3, 4)):
        assert oracle.same_start_meet_prob(0, 0, p) == 2 * p * (1 - p)
    assert oracle.same_start_meet_prob(0, 0, Fraction(1, 2)) == Fraction(1, 2)


def test_same_start_hand_case():
    assert oracle.same_start_meet_prob(1, 0, Fraction(1, 3)) == Fraction(4, 27)


def test_endpoint_probability_basics():
    rate = oracle.ConstantRate(Fraction(1, 2))
    assert oracle.endpoint_probability((0, 1), 0, [(0, 1)], rate) == 1
    for p in (Fraction(1, 3), Fraction(1, 2)):
        rate_p = oracle.ConstantRate(p)
        assert oracle.endpoint_probability((1, 1), 1, [(0, 1)], rate_p) == p
    assert oracle.endpoint_probability((1, 2), 2, [(0, 1)], rate) == Fraction(1, 2)


def test_endpoint_probability_mass_is_conserved():
    rate = oracle.LevelRate((Fraction(1, 3), Fraction(2, 7), Fraction(5, 16)))
    start, steps = (2, 3), 4
    targets = [(start[0] - w, start[1] - (steps - w)) for w in range(steps + 1)]
    assert oracle.endpoint_probability(start, steps, targets, rate) == 1
