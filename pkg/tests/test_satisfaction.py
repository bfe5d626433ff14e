from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import exact_stop_weights
from stopsat import (
    ConfigurationError,
    GainMap,
    JudgedRanking,
    expected_satisfaction,
    gain_satisfaction,
    navigational_satisfaction,
    precision_satisfaction,
    rbp_hazards,
)

graded = st.lists(st.integers(0, 3), max_size=40)


def ranking(grades, threshold=1):
    rel = sum(1 for g in grades if g >= threshold)
    return JudgedRanking("q", tuple(grades), rel, threshold)


class TestPrecision:
    def test_example(self):
        s = precision_satisfaction(ranking([1, 0, 1])).values
        expected = [Fraction(1), Fraction(1, 2), Fraction(2, 3)]
        np.testing.assert_allclose(s, [float(x) for x in expected], rtol=0, atol=1e-15)

    def test_none_relevant(self):
        assert precision_satisfaction(ranking([0, 0])).values.tolist() == [0.0, 0.0]

    def test_all_relevant(self):
        assert precision_satisfaction(ranking([1, 1])).values.tolist() == [1.0, 1.0]

    @given(graded)
    def test_increment_is_zero_or_one(self, grades):
        s = precision_satisfaction(ranking(grades)).values
        k = np.arange(1, len(s) + 1)
        hits = k * s
        steps = np.diff(np.concatenate(([0.0], hits)))
        assert np.all(np.isclose(steps, 0.0) | np.isclose(steps, 1.0))


class TestGain:
    def test_identity_binary(self):
        assert gain_satisfaction(ranking([1, 0, 1]), GainMap.binary()).values.tolist() == [1.0, 0.0, 1.0]

    def test_graded_lookup(self):
        gains = GainMap({0: 0, 1: 0.5, 2: 1})
        assert gain_satisfaction(ranking([2, 1]), gains).values.tolist() == [1.0, 0.5]

    def test_combined_with_rbp(self):
        weights, _ = exact_stop_weights([Fraction(1, 2)] * 3)
        exact = sum(w * g for w, g in zip(weights, [1, 0, 1]))
        assert exact == Fraction(5, 8)
        r = ranking([1, 0, 1])
        score = expected_satisfaction(rbp_hazards(3, 0.5), gain_satisfaction(r, GainMap.binary()))
        assert score.expected_satisfaction == 0.625

    def test_unmapped_grade(self):
        with pytest.raises(ConfigurationError):
            gain_satisfaction(ranking([3]), GainMap({1: 1.0}))

    @pytest.mark.parametrize("table", [{0: 0.1}, {1: 1.5}, {1: 0.8, 2: 0.5}, {-1: 0.0}])
    def test_invalid_maps(self, table):
        with pytest.raises(ConfigurationError):
            GainMap(table)

    def test_zero_added(self):
        assert GainMap({2: 1.0}).table == {0: 0.0, 2: 1.0}

    def test_parse_roundtrip(self):
        gains = GainMap.parse("1:0.25, 2:1")
        assert gains.table == {0: 0.0, 1: 0.25, 2: 1.0}
        assert GainMap.parse(gains.format()) == gains

    @pytest.mark.parametrize("text", ["1=0.5", "a:0.5", "1:x"])
    def test_parse_rejects(self, text):
        with pytest.raises(ConfigurationError):
            GainMap.parse(text)

    @given(graded, st.integers(1, 3))
    def test_binary_gain_is_binarized_grade(self, grades, threshold):
        r = ranking(grades, threshold)
        s = gain_satisfaction(r, GainMap.binary(threshold, 3)).values
        assert s.tolist() == r.relevant.astype(float).tolist()


class TestNavigational:
    def test_first_relevant_at_two(self):
        assert navigational_satisfaction(ranking([0, 1, 0])).values.tolist() == [0.0, 1.0, 1.0]

    def test_relevant_first(self):
        assert navigational_satisfaction(ranking([1, 0, 0, 1])).values.tolist() == [1.0] * 4

    def test_nothing_relevant(self):
        assert navigational_satisfaction(ranking([0, 0, 0])).values.tolist() == [0.0] * 3

    def test_empty(self):
        assert len(navigational_satisfaction(ranking([]))) == 0

    @given(graded)
    def test_monotone(self, grades):
        s = navigational_satisfaction(ranking(grades)).values
        assert np.all(np.diff(s) >= 0)


@given(graded, st.integers(1, 3))
def test_outputs_bounded(grades, threshold):
    r = ranking(grades, threshold)
    for sched in (precision_satisfaction(r), navigational_satisfaction(r),
                  gain_satisfaction(r, GainMap({1: 0.2, 2: 0.7, 3: 1.0}))):
        assert np.all((sched.values >= 0) & (sched.values <= 1))
