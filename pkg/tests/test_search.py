import random

import pytest

from thompsonv.bounds import birget_upper, new_upper
from thompsonv import permutations as perms
from thompsonv.elements import Element
from thompsonv.generators import GENERATOR_NAMES, GenSymbol, evaluate_word, symbol_element
from thompsonv.search import (
    LengthResult,
    ResourceLimitError,
    ball_sizes,
    enumerate_ball,
    exact_word_length,
)

RADIUS = 4


@pytest.fixture(scope="module")
def ball():
    return enumerate_ball(RADIUS)


def test_identity_at_distance_zero(ball):
    assert ball.distance_of(Element.identity()) == 0
    assert exact_word_length(Element.identity(), 3).length == 0


def test_every_generator_symbol_at_distance_one(ball):
    for name in GENERATOR_NAMES:
        for exp in (1, -1):
            e = symbol_element(GenSymbol(name, exp))
            assert ball.distance_of(e) == 1
            assert exact_word_length(e, 2).length == 1


def test_level_one_count_is_seven(ball):
    # pi is an involution, so the eight symbols give seven distinct elements
    assert ball.sizes()[1] == 7


def test_x0_squared_at_distance_two(ball):
    x0 = symbol_element(GenSymbol("x0"))
    assert ball.distance_of(x0 * x0) == 2
    assert exact_word_length(x0 * x0, 4).length == 2


def test_ball_sizes_prefix_stable():
    assert ball_sizes(2) == ball_sizes(4)[:3]


def test_witness_words_are_geodesic(ball):
    rng = random.Random(61)
    for dist, level in enumerate(ball.levels):
        sample = level if len(level) <= 30 else rng.sample(level, 30)
        for e in sample:
            word = ball.witness_word(e)
            assert len(word) == dist
            assert evaluate_word(word).equals(e)


def test_witness_none_outside_ball(ball):
    far = Element.identity()
    x0 = symbol_element(GenSymbol("x0"))
    for _ in range(RADIUS + 1):
        far = far * x0
    assert ball.witness_word(far) is None
    assert ball.distance_of(far) is None


def test_bidirectional_agrees_with_ball(ball):
    rng = random.Random(62)
    for dist, level in enumerate(ball.levels):
        for e in rng.sample(level, min(len(level), 10)):
            assert exact_word_length(e, RADIUS).length == dist
            assert exact_word_length(e, RADIUS, bidirectional=False).length == dist


def test_unknown_beyond_radius():
    x0 = symbol_element(GenSymbol("x0"))
    deep = x0 ** 6
    result = exact_word_length(deep, 3)
    assert not result.known
    assert str(result) == "unknown beyond radius 3"
    # the bidirectional search reaches it with a bigger radius
    assert exact_word_length(deep, 8).length == 6


def test_length_result_str():
    assert str(LengthResult(4, 7)) == "4"


def test_budget_exhaustion_names_completed_radius():
    with pytest.raises(ResourceLimitError) as err:
        enumerate_ball(3, budget_mb=0)
    assert err.value.completed_radius == 0
    with pytest.raises(ResourceLimitError):
        exact_word_length(symbol_element(GenSymbol("x1")) ** 4, 8, budget_mb=0)


def test_lower_and_upper_consistency_over_ball(ball):
    # caret counts grow at most linearly with distance; the cluster bound
    # dominated by a constant covers every element of the ball
    worst_lower = 0.0
    worst_upper = 0.0
    for dist, level in enumerate(ball.levels):
        if dist == 0:
            continue
        for e in level:
            n = e.domain_tree.carets
            b = len(perms.cluster_runs(e.perm))
            worst_lower = max(worst_lower, n / dist)
            worst_upper = max(worst_upper, dist / (new_upper(n, b) + 1.0))
    assert worst_lower <= 4.0
    assert worst_upper <= 2.0


def test_new_upper_at_most_birget_plus_constant(ball):
    # over observed (N, B) pairs the gap is maximal only when B = N + 1
    gaps = {}
    for dist, level in enumerate(ball.levels):
        if dist == 0:
            continue
        for e in level:
            n = e.domain_tree.carets
            b = len(perms.cluster_runs(e.perm))
            gaps[(n, b)] = new_upper(n, b) - birget_upper(n)
    c0 = max(gaps.values())
    assert c0 < 20.0
    for (n, b), gap in gaps.items():
        if gap == c0:
            assert b == n + 1
