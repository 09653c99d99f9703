"""Tree-pair diagrams with leaf permutations: elements of Thompson's group V.

An element is (domain tree, range tree, permutation); leaf i of the domain
tree maps affinely and orientation-preservingly onto leaf perm(i) of the
range tree. Diagrams are immutable; reduce() produces the unique reduced
diagram, which is the canonical form used for equality, hashing and search.

Composition convention: (a * b) means "apply a, then b", so a written word
g1 g2 ... gk evaluates left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from . import permutations as perms
from .intervals import PiecewiseMap
from .trees import (
    LEAF,
    Scanner,
    Tree,
    fringe_subtrees,
    graft_fringe,
    leaf_intervals,
    merge_pair,
    parse_tree_at,
    refine,
    sibling_pairs,
    split_leaf,
    tree_text,
)


@dataclass(frozen=True)
class Element:
    domain_tree: Tree
    range_tree: Tree
    perm: perms.Perm

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", perms.check_perm(self.perm))
        n = self.domain_tree.leaves
        if self.range_tree.leaves != n or len(self.perm) != n:
            raise ValueError(
                f"leaf counts disagree: domain {n}, range {self.range_tree.leaves}, "
                f"permutation degree {len(self.perm)}"
            )

    # -- construction and text form --------------------------------------

    @staticmethod
    def identity() -> Element:
        return Element(LEAF, LEAF, (1,))

    @staticmethod
    def parse(text: str) -> Element:
        sc = Scanner(text)
        domain = parse_tree_at(sc)
        sc.expect("|")
        range_ = parse_tree_at(sc)
        sc.expect("|")
        sc.expect("[")
        images = [sc.read_int()]
        while sc.peek() == ",":
            sc.pos += 1
            images.append(sc.read_int())
        sc.expect("]")
        sc.done()
        return Element(domain, range_, tuple(images))

    def text(self) -> str:
        images = ",".join(str(v) for v in self.perm)
        return f"{tree_text(self.domain_tree)}|{tree_text(self.range_tree)}|[{images}]"

    def __str__(self) -> str:
        return self.text()

    @property
    def n_leaves(self) -> int:
        return self.domain_tree.leaves

    # -- reduction --------------------------------------------------------

    def reducible_pairs(self) -> list[int]:
        """Leaf indices i where a caret pair can be cancelled.

        Leaves i, i+1 must share a caret in the domain tree, their images
        must be consecutive, and those images must share a caret in the
        range tree.
        """
        range_sibs = set(sibling_pairs(self.range_tree))
        out = []
        for i in sibling_pairs(self.domain_tree):
            if self.perm[i] == self.perm[i - 1] + 1 and self.perm[i - 1] in range_sibs:
                out.append(i)
        return out

    def reduce_step(self, i: int) -> Element:
        """Cancel the caret pair over leaves i, i+1; renumber the permutation."""
        if i not in self.reducible_pairs():
            raise ValueError(f"no reducible pair at leaf {i}")
        return self._cancel(i)

    def _cancel(self, i: int) -> Element:
        v = self.perm[i - 1]
        domain = merge_pair(self.domain_tree, i)
        range_ = merge_pair(self.range_tree, v)
        images = [w if w <= v else w - 1 for j, w in enumerate(self.perm) if j != i]
        return Element(domain, range_, tuple(images))

    def reduce(self) -> Element:
        """Unique reduced diagram of the same group element.

        Scans for the leftmost reducible pair until none is left; the result
        does not depend on the order of cancellations (confluence, covered by
        the test suite).
        """
        x = self
        while True:
            pairs = x.reducible_pairs()
            if not pairs:
                return x
            x = x._cancel(pairs[0])

    def is_reduced(self) -> bool:
        return not self.reducible_pairs()

    def expand_leaf(self, i: int) -> Element:
        """Split leaf i and its image: the inverse of one reduction step."""
        if not 1 <= i <= self.n_leaves:
            raise ValueError(f"leaf index {i} out of range")
        v = self.perm[i - 1]
        domain = split_leaf(self.domain_tree, i)
        range_ = split_leaf(self.range_tree, v)
        images: list[int] = []
        for j, w in enumerate(self.perm):
            shifted = w if w <= v else w + 1
            if j == i - 1:
                images.extend((shifted, shifted + 1))
            else:
                images.append(shifted)
        return Element(domain, range_, tuple(images))

    # -- group operations ---------------------------------------------------

    def expand_to_range(self, target: Tree) -> Element:
        """Equivalent diagram whose range tree is `target` (a refinement)."""
        subs = fringe_subtrees(self.range_tree, target)
        sizes = [s.leaves for s in subs]
        domain = graft_fringe(self.domain_tree, [subs[v - 1] for v in self.perm])
        range_offset = [0, *accumulate(sizes)]
        images: list[int] = []
        for v in self.perm:
            base = range_offset[v - 1]
            images.extend(range(base + 1, base + sizes[v - 1] + 1))
        return Element(domain, target, tuple(images))

    def expand_to_domain(self, target: Tree) -> Element:
        subs = fringe_subtrees(self.domain_tree, target)
        sizes = [s.leaves for s in subs]
        inv = perms.invert_perm(self.perm)
        range_ = graft_fringe(self.range_tree, [subs[v - 1] for v in inv])
        domain_offset = [0, *accumulate(sizes)]
        range_sizes = [sizes[v - 1] for v in inv]
        range_offset = [0, *accumulate(range_sizes)]
        images = [0] * target.leaves
        for i, v in enumerate(self.perm, start=1):
            dbase = domain_offset[i - 1]
            rbase = range_offset[v - 1]
            for k in range(sizes[i - 1]):
                images[dbase + k] = rbase + k + 1
        return Element(target, range_, tuple(images))

    def __mul__(self, other: Element) -> Element:
        """Composition "apply self, then other", reduced."""
        if not isinstance(other, Element):
            return NotImplemented
        middle = refine(self.range_tree, other.domain_tree)
        a = self.expand_to_range(middle)
        b = other.expand_to_domain(middle)
        product = Element(a.domain_tree, b.range_tree, perms.compose(a.perm, b.perm))
        return product.reduce()

    def inverse(self) -> Element:
        return Element(self.range_tree, self.domain_tree, perms.invert_perm(self.perm))

    def __invert__(self) -> Element:
        return self.inverse()

    def __pow__(self, n: int) -> Element:
        if n < 0:
            return self.inverse() ** (-n)
        out = Element.identity()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def equals(self, other: Element) -> bool:
        """Group equality: the reduced diagrams coincide."""
        return self.reduce() == other.reduce()

    def is_identity(self) -> bool:
        return self.reduce() == Element.identity()

    # -- invariants ---------------------------------------------------------

    def caret_count(self) -> int:
        """Carets of the reduced diagram (both trees always agree)."""
        return self.reduce().domain_tree.carets

    def cluster_partition(self) -> perms.ClusterPartition:
        return perms.cluster_runs(self.reduce().perm)

    def cluster_count(self) -> int:
        """Clusters of the reduced permutation; diagram-independent."""
        return len(self.cluster_partition())

    def in_f(self) -> bool:
        return perms.is_identity(self.reduce().perm)

    def in_t(self) -> bool:
        return perms.cyclic_shift(self.reduce().perm) is not None

    def interval_map(self) -> PiecewiseMap:
        """Right-continuous map view of the reduced diagram."""
        x = self.reduce()
        sources = leaf_intervals(x.domain_tree)
        targets = leaf_intervals(x.range_tree)
        return PiecewiseMap(tuple((sources[i], targets[v - 1]) for i, v in enumerate(x.perm)))


def multiply(a: Element, b: Element) -> Element:
    return a * b


def invert(x: Element) -> Element:
    return x.inverse()


def equals(a: Element, b: Element) -> bool:
    return a.equals(b)


def to_interval_map(x: Element) -> PiecewiseMap:
    return x.interval_map()
