import random

import pytest

from thompsonv import permutations as perms
from thompsonv.elements import Element
from thompsonv.generators import evaluate_word
from thompsonv.experiments import (
    SURVEY_HEADER,
    counterexample_product,
    counterexample_y,
    estimate_constants,
    random_element,
    survey_bounds,
    survey_csv,
    verify_conjugation_identity,
)
from thompsonv.search import exact_word_length


def test_counterexample_y_examples():
    y1 = counterexample_y(1)
    assert y1.text() == "(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]"
    for n in range(1, 6):
        y = counterexample_y(n)
        assert y.is_reduced()
        assert y.caret_count() == 2 * n + 1
        assert (y * y).equals(Element.identity())
    with pytest.raises(ValueError):
        counterexample_y(0)


def test_conjugation_identity_validates_under_one_convention():
    trivial = verify_conjugation_identity(1)
    assert trivial.as_written and trivial.mirrored  # zero exponent on both sides
    for n in range(2, 6):
        report = verify_conjugation_identity(n)
        assert report.mirrored and not report.as_written


def test_counterexample_product_small():
    p1, w1 = counterexample_product(1)
    assert p1.equals(counterexample_y(1))
    assert evaluate_word(w1).equals(p1)
    for n in range(2, 6):
        product, word = counterexample_product(n)
        direct = counterexample_y(1)
        for j in range(2, n + 1):
            direct = direct * counterexample_y(j)
        assert product.equals(direct)
        assert evaluate_word(word).equals(product)
        assert len(word) <= 9 * n


def test_counterexample_product_growth():
    for n in range(1, 9):
        product, _ = counterexample_product(n)
        assert product.caret_count() == 2 * n + 1
        assert product.cluster_count() == 2 * n + 2


def test_random_element_deterministic():
    a = random_element(6, seed=123)
    b = random_element(6, seed=123)
    assert a == b
    assert a.is_reduced()
    assert a.caret_count() <= 6


def test_random_elements_mostly_fully_scattered():
    # most uniform permutations have nearly one cluster per leaf
    rng = random.Random(71)
    scattered = 0
    total = 300
    for _ in range(total):
        n = 9
        p = list(range(1, n + 1))
        rng.shuffle(p)
        if len(perms.cluster_runs(tuple(p))) >= n - 2:
            scattered += 1
    assert scattered > total // 2


def test_survey_records_consistent():
    records = survey_bounds(count=30, carets=4, radius=3, seed=5)
    assert len(records) == 30
    for r in records:
        x = Element.parse(r.element_text)
        assert x.is_reduced()
        assert x.caret_count() == r.carets
        assert x.cluster_count() == r.clusters
        if r.clusters == 1:
            assert r.new_bound == r.carets
        assert r.new_bound <= r.birget + 20.0
        if r.exact_length is not None:
            assert r.exact_length <= 3
            assert r.exact_length >= r.carets / 3.0  # c1 = 3 from the sweep


def test_survey_csv_deterministic():
    a = survey_csv(survey_bounds(count=20, carets=5, radius=2, seed=9))
    b = survey_csv(survey_bounds(count=20, carets=5, radius=2, seed=9))
    assert a == b
    header = a.splitlines()[0]
    assert header == ",".join(SURVEY_HEADER)
    assert len(a.splitlines()) == 21


def test_product_length_bracketed_by_oracle():
    # where the oracle reaches P_n, the exact length sits between the
    # caret-count lower bound and the explicit witness word
    report = estimate_constants(4)
    c1 = report.carets_over_length
    for n in (1, 2):
        product, word = counterexample_product(n)
        result = exact_word_length(product, 12)
        assert result.known
        assert result.length <= len(word)
        assert result.length >= product.caret_count() / c1


def test_estimate_constants():
    report = estimate_constants(3)
    again = estimate_constants(3)
    assert str(report) == str(again)  # deterministic
    assert report.carets_over_length >= 1 / 8
    assert report.length_over_bound >= 1 / 8
    assert report.sizes[0] == 1 and report.sizes[1] == 7
    assert "radius: 3" in str(report)
    # witnesses really attain the reported ratios
    w = Element.parse(report.carets_witness)
    assert w.caret_count() / 3 <= report.carets_over_length
