"""Experiments: the sharpness counterexample family, random surveys, constants.

The counterexample family y_n lives on right combs and shows the cluster
bound is not sharp: products P_n = y_1 ... y_n have caret and cluster counts
linear in n and an explicit witness word of length linear in n, while the
cluster bound grows like n log n. Surveys compare both bounds against exact
lengths from the search oracle on seeded random elements.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass

from . import permutations as perms
from .bounds import birget_upper, new_upper
from .elements import Element
from .generators import GENERATOR_NAMES, Word, free_reduce, generator_element, power_word
from .search import enumerate_ball
from .trees import random_tree, right_comb
from .words import synthesize_word


def counterexample_y(n: int) -> Element:
    """Right-comb element with 2n+1 carets swapping leaves 2n and 2n+1."""
    if n < 1:
        raise ValueError("n must be positive")
    comb = right_comb(2 * n + 1)
    return Element(comb, comb, perms.adjacent_swap(2 * n + 2, 2 * n))


@dataclass(frozen=True)
class ConjugationReport:
    """Which composition convention validates y_n = x0^{-k} y_1 x0^{k}, k = 2n-2.

    `as_written` keeps the exponent order of the defining identity;
    `mirrored` negates the exponents. Exactly one is expected to hold for
    n >= 2 under the library's apply-left-to-right composition.
    """

    n: int
    as_written: bool
    mirrored: bool


def verify_conjugation_identity(n: int) -> ConjugationReport:
    if n < 1:
        raise ValueError("n must be positive")
    x0 = generator_element("x0")
    y1 = counterexample_y(1)
    yn = counterexample_y(n)
    k = 2 * n - 2
    as_written = (x0 ** -k) * y1 * (x0 ** k)
    mirrored = (x0 ** k) * y1 * (x0 ** -k)
    return ConjugationReport(n, as_written.equals(yn), mirrored.equals(yn))


def counterexample_product(n: int) -> tuple[Element, Word]:
    """P_n = y_1 y_2 ... y_n and an explicit witness word of length O(n).

    The word interleaves a fixed word for y_1 with x0^2 bridges and closes
    with x0^{-(2n-2)}, the telescoped form of the conjugation identity.
    """
    if n < 1:
        raise ValueError("n must be positive")
    product = counterexample_y(1)
    for j in range(2, n + 1):
        product = product * counterexample_y(j)
    w1 = synthesize_word(counterexample_y(1))
    word: Word = w1
    for _ in range(n - 1):
        word += power_word("x0", 2) + w1
    word += power_word("x0", -(2 * n - 2))
    return product, free_reduce(word)


def random_element(carets: int, seed: int) -> Element:
    """Reduced element from two uniform random trees and a uniform permutation."""
    return _random_element(carets, random.Random(seed))


def _random_element(carets: int, rng: random.Random) -> Element:
    if carets < 1:
        raise ValueError("caret count must be positive")
    domain = random_tree(carets, rng)
    range_ = random_tree(carets, rng)
    images = list(range(1, carets + 2))
    rng.shuffle(images)
    return Element(domain, range_, tuple(images)).reduce()


@dataclass(frozen=True)
class SurveyRecord:
    element_text: str
    carets: int
    clusters: int
    exact_length: int | None
    birget: float
    new_bound: float


def survey_bounds(
    count: int, carets: int, radius: int, seed: int, budget_mb: int | None = None
) -> list[SurveyRecord]:
    """Records for seeded random elements; exact lengths where the ball reaches."""
    ball = enumerate_ball(radius, budget_mb=budget_mb, track_parents=False)
    rng = random.Random(seed)
    records = []
    for _ in range(count):
        x = _random_element(carets, rng)
        n = x.domain_tree.carets
        b = len(perms.cluster_runs(x.perm))
        records.append(
            SurveyRecord(
                x.text(), n, b, ball.distance.get(x.text()), birget_upper(n), new_upper(n, b)
            )
        )
    return records


SURVEY_HEADER = ["element", "N", "B", "exact_length", "birget_upper", "new_upper"]


def survey_csv(records: list[SurveyRecord]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SURVEY_HEADER)
    for r in records:
        writer.writerow(
            [
                r.element_text,
                r.carets,
                r.clusters,
                "" if r.exact_length is None else r.exact_length,
                f"{r.birget:.6f}",
                f"{r.new_bound:.6f}",
            ]
        )
    return out.getvalue()


@dataclass(frozen=True)
class ConstantsReport:
    """Empirical constants over a full ball: max N/len and max len/cluster bound."""

    radius: int
    generators: tuple[str, ...]
    sizes: tuple[int, ...]
    carets_over_length: float
    carets_witness: str
    length_over_bound: float
    bound_witness: str

    def lines(self) -> list[str]:
        return [
            f"radius: {self.radius}",
            f"generators: {' '.join(self.generators)}",
            f"ball_sizes: {' '.join(str(s) for s in self.sizes)}",
            f"total: {sum(self.sizes)}",
            f"max_carets_over_length: {self.carets_over_length:.6f}",
            f"max_carets_over_length_witness: {self.carets_witness}",
            f"max_length_over_cluster_bound: {self.length_over_bound:.6f}",
            f"max_length_over_cluster_bound_witness: {self.bound_witness}",
        ]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def estimate_constants(radius: int, budget_mb: int | None = None) -> ConstantsReport:
    """Exact sweep of the ball: witnesses for both sides of the metric bounds.

    The identity is excluded from the ratio denominators. The cluster-bound
    denominator carries a +1 so that caret-free elements stay finite.
    """
    ball = enumerate_ball(radius, budget_mb=budget_mb, track_parents=False)
    c1, w1 = 0.0, ""
    c2, w2 = 0.0, ""
    for dist, level in enumerate(ball.levels):
        if dist == 0:
            continue
        for e in level:
            n = e.domain_tree.carets
            b = len(perms.cluster_runs(e.perm))
            r1 = n / dist
            if r1 > c1:
                c1, w1 = r1, e.text()
            r2 = dist / (new_upper(n, b) + 1.0)
            if r2 > c2:
                c2, w2 = r2, e.text()
    return ConstantsReport(radius, GENERATOR_NAMES, tuple(ball.sizes()), c1, w1, c2, w2)
