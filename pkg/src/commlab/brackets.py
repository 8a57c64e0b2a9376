"""Bracket arrangements: full binary commutator shapes of a given weight.

A bracket arrangement of weight t is a full binary tree with t leaves; leaf
positions are numbered 1..t left to right. Evaluating an arrangement on t
words nests commutators according to the tree, e.g. the two weight-3 shapes
are [[a1, a2], a3] and [a1, [a2, a3]].
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence, Union

from commlab.words import Word, commutator


@dataclass(frozen=True)
class Leaf:
    position: int


@dataclass(frozen=True)
class Node:
    left: BracketArrangement
    right: BracketArrangement


BracketArrangement = Union[Leaf, Node]


def weight(b: BracketArrangement) -> int:
    """Number of leaves."""
    if isinstance(b, Leaf):
        return 1
    return weight(b.left) + weight(b.right)


def describe(b: BracketArrangement) -> str:
    """Compact text form, e.g. ``[[1,2],3]``."""
    if isinstance(b, Leaf):
        return str(b.position)
    return f"[{describe(b.left)},{describe(b.right)}]"


def enumerate_brackets(t: int) -> list[BracketArrangement]:
    """All bracket arrangements of weight t (Catalan(t-1) of them).

    Ordering: the left subtree weight descends from t-1 to 1, recursively,
    so enumerate_brackets(3) yields [[1,2],3] before [1,[2,3]].
    """
    if t < 1:
        raise ValueError(f"weight must be >= 1, got {t}")
    return list(_enumerate(t))


@functools.cache
def _enumerate(t: int) -> tuple[BracketArrangement, ...]:
    if t == 1:
        return (Leaf(1),)
    out: list[BracketArrangement] = []
    for lw in range(t - 1, 0, -1):
        for left in _enumerate(lw):
            for right in _enumerate(t - lw):
                out.append(Node(left, _shift(right, lw)))
    return tuple(out)


@functools.cache
def _shift(b: BracketArrangement, offset: int) -> BracketArrangement:
    if isinstance(b, Leaf):
        return Leaf(b.position + offset)
    return Node(_shift(b.left, offset), _shift(b.right, offset))


def evaluate_bracket(b: BracketArrangement, args: Sequence[Word]) -> Word:
    """Plug words into the leaves (args[i] at position i+1) and evaluate."""
    if len(args) != weight(b):
        raise ValueError(
            f"arrangement has weight {weight(b)}, got {len(args)} arguments"
        )
    return _evaluate(b, args)


def _evaluate(b: BracketArrangement, args: Sequence[Word]) -> Word:
    if isinstance(b, Leaf):
        return args[b.position - 1]
    return commutator(_evaluate(b.left, args), _evaluate(b.right, args))


def left_normed(args: Sequence[Word]) -> Word:
    """[[...[[a1, a2], a3]...], ak]; a single argument is returned as is."""
    if not args:
        raise ValueError("left_normed needs at least one argument")
    out = args[0]
    for a in args[1:]:
        out = commutator(out, a)
    return out
