"""Full ordered binary trees: the two halves of a tree-pair diagram.

Trees are immutable values. Internal nodes are carets; leaves are numbered
1..n from left to right. Every caret has exactly two children, so a tree with
N carets has N+1 leaves. Leaf counts and hashes are computed once at
construction so that the search oracle can use trees as cheap keys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .intervals import DyadicInterval


class ParseError(ValueError):
    """Malformed text; `offset` is the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True, slots=True, eq=False)
class Tree:
    left: Tree | None = None
    right: Tree | None = None
    leaves: int = field(init=False, compare=False)
    _hash: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if (self.left is None) != (self.right is None):
            raise ValueError("a caret needs exactly two children")
        if self.left is None:
            object.__setattr__(self, "leaves", 1)
            object.__setattr__(self, "_hash", hash((0, 0)))
        else:
            object.__setattr__(self, "leaves", self.left.leaves + self.right.leaves)
            object.__setattr__(self, "_hash", hash((self.left._hash, self.right._hash)))

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def carets(self) -> int:
        return self.leaves - 1

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        if self._hash != other._hash or self.leaves != other.leaves:
            return False
        if self.left is None or other.left is None:
            return self.left is None and other.left is None
        return self.left == other.left and self.right == other.right

    def __str__(self) -> str:
        return tree_text(self)


LEAF = Tree()


def caret(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def right_comb(carets_: int) -> Tree:
    """Tree in which every left child is a leaf; 0 carets gives a leaf."""
    if carets_ < 0:
        raise ValueError("caret count must be non-negative")
    t = LEAF
    for _ in range(carets_):
        t = Tree(LEAF, t)
    return t


def tree_text(t: Tree) -> str:
    parts: list[str] = []

    def emit(node: Tree) -> None:
        if node.is_leaf:
            parts.append(".")
        else:
            parts.append("(")
            emit(node.left)
            parts.append(",")
            emit(node.right)
            parts.append(")")

    emit(t)
    return "".join(parts)


class Scanner:
    """Cursor over text that skips whitespace and reports byte offsets."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, got {got!r}", self.pos)
        self.pos += 1

    def read_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])

    def done(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected trailing {self.text[self.pos]!r}", self.pos)


def parse_tree_at(sc: Scanner) -> Tree:
    ch = sc.peek()
    if ch == ".":
        sc.pos += 1
        return LEAF
    if ch == "(":
        sc.pos += 1
        left = parse_tree_at(sc)
        sc.expect(",")
        right = parse_tree_at(sc)
        sc.expect(")")
        return Tree(left, right)
    raise ParseError(f"expected '.' or '(', got {ch or 'end of input'!r}", sc.pos)


def parse_tree(text: str) -> Tree:
    sc = Scanner(text)
    t = parse_tree_at(sc)
    sc.done()
    return t


def leaf_intervals(t: Tree) -> list[DyadicInterval]:
    """Dyadic intervals of the leaves, left to right; the root owns [0, 1)."""
    out: list[DyadicInterval] = []

    def walk(node: Tree, num: int, exp: int) -> None:
        if node.is_leaf:
            out.append(DyadicInterval(num, exp))
        else:
            walk(node.left, num << 1, exp + 1)
            walk(node.right, (num << 1) | 1, exp + 1)

    walk(t, 0, 0)
    return out


def sibling_pairs(t: Tree) -> list[int]:
    """Left leaf indices i such that leaves i and i+1 share one caret."""
    out: list[int] = []

    def walk(node: Tree, base: int) -> None:
        if node.is_leaf:
            return
        if node.left.is_leaf and node.right.is_leaf:
            out.append(base + 1)
            return
        walk(node.left, base)
        walk(node.right, base + node.left.leaves)

    walk(t, 0)
    return out


def merge_pair(t: Tree, i: int) -> Tree:
    """Replace the caret over sibling leaves i, i+1 by a single leaf."""

    def walk(node: Tree, i: int) -> Tree:
        if node.left.is_leaf and node.right.is_leaf and i == 1:
            return LEAF
        if i <= node.left.leaves - 1:
            return Tree(walk(node.left, i), node.right)
        return Tree(node.left, walk(node.right, i - node.left.leaves))

    if i < 1 or i >= t.leaves:
        raise ValueError(f"no sibling pair at leaf {i}")
    return walk(t, i)


def replace_leaf(t: Tree, i: int, sub: Tree) -> Tree:
    """Graft `sub` in place of leaf i (1-indexed)."""
    if not 1 <= i <= t.leaves:
        raise ValueError(f"leaf index {i} out of range")
    if t.is_leaf:
        return sub
    if i <= t.left.leaves:
        return Tree(replace_leaf(t.left, i, sub), t.right)
    return Tree(t.left, replace_leaf(t.right, i - t.left.leaves, sub))


def split_leaf(t: Tree, i: int) -> Tree:
    return replace_leaf(t, i, Tree(LEAF, LEAF))


def refine(a: Tree, b: Tree) -> Tree:
    """Smallest tree refining both arguments (union of their subdivisions)."""
    if a.is_leaf:
        return b
    if b.is_leaf:
        return a
    return Tree(refine(a.left, b.left), refine(a.right, b.right))


def fringe_subtrees(coarse: Tree, fine: Tree) -> list[Tree]:
    """Subtrees of `fine` hanging at the leaf positions of `coarse`.

    Requires that `fine` refines `coarse`.
    """
    out: list[Tree] = []

    def walk(c: Tree, f: Tree) -> None:
        if c.is_leaf:
            out.append(f)
            return
        if f.is_leaf:
            raise ValueError("tree does not refine the coarse tree")
        walk(c.left, f.left)
        walk(c.right, f.right)

    walk(coarse, fine)
    return out


def graft_fringe(t: Tree, subs: list[Tree]) -> Tree:
    """Replace leaf i of t by subs[i-1] for every leaf."""
    if len(subs) != t.leaves:
        raise ValueError("one subtree per leaf required")
    it = iter(subs)

    def walk(node: Tree) -> Tree:
        if node.is_leaf:
            return next(it)
        return Tree(walk(node.left), walk(node.right))

    return walk(t)


def spine_rotations_to_comb(t: Tree) -> list[int]:
    """Right-spine rotation schedule turning t into the right comb.

    Each entry k is a right rotation ((A,B),C) -> (A,(B,C)) applied at the
    node k steps down the right spine. The schedule is non-decreasing in k,
    which keeps the generator words it induces short.
    """
    ks: list[int] = []
    k = 0
    s = t
    while not s.is_leaf:
        if s.left.is_leaf:
            s = s.right
            k += 1
        else:
            s = Tree(s.left.left, Tree(s.left.right, s.right))
            ks.append(k)
    return ks


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def random_tree(carets_: int, rng) -> Tree:
    """Uniform full binary tree with the given caret count.

    Splits the root caret with exact Catalan weights, so every shape has
    probability 1/catalan(carets).
    """
    if carets_ == 0:
        return LEAF
    r = rng.randrange(catalan(carets_))
    acc = 0
    for k in range(carets_):
        acc += catalan(k) * catalan(carets_ - 1 - k)
        if r < acc:
            return Tree(random_tree(k, rng), random_tree(carets_ - 1 - k, rng))
    raise AssertionError("catalan weights do not sum")
