"""Turing output binary search trees.

A TOBST grows by inserting a listing's values in emission order; each node
remembers the step at which it arrived. Trees are persistent: insertion
path-copies and leaves the input tree untouched. All traversals are
iterative so that chains thousands of nodes deep are fine.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import DuplicateValue, LengthMismatch, OutOfRange, StepGap
from .listing import Listing


@dataclass(frozen=True)
class TobstNode:
    step: int
    value: int
    left: TobstNode | None = None
    right: TobstNode | None = None


@dataclass(frozen=True)
class Tobst:
    root: TobstNode | None = None
    size: int = 0

    def __len__(self):
        return self.size

    def nodes_preorder(self):
        stack = [self.root] if self.root else []
        while stack:
            node = stack.pop()
            yield node
            if node.right:
                stack.append(node.right)
            if node.left:
                stack.append(node.left)

    def inorder_values(self) -> list[int]:
        out = []
        stack = []
        node = self.root
        while stack or node:
            while node:
                stack.append(node)
                node = node.left
            node = stack.pop()
            out.append(node.value)
            node = node.right
        return out


EMPTY = Tobst()


class SpineKind(enum.Enum):
    RIGHT = "RightSpine"
    LEFT = "LeftSpine"
    BOTH = "Both"
    NEITHER = "Neither"


@dataclass(frozen=True)
class TobstShape:
    encoding: str

    def __str__(self):
        return self.encoding


def tobst_insert(t: Tobst, step: int, value: int) -> Tobst:
    if step != t.size + 1:
        raise StepGap(f"expected step {t.size + 1}, got {step}")
    path = []
    node = t.root
    while node is not None:
        if value < node.value:
            path.append((node, True))
            node = node.left
        elif value > node.value:
            path.append((node, False))
            node = node.right
        else:
            raise DuplicateValue(value, node.step, step)
    new = TobstNode(step, value)
    for parent, went_left in reversed(path):
        if went_left:
            new = TobstNode(parent.step, parent.value, new, parent.right)
        else:
            new = TobstNode(parent.step, parent.value, parent.left, new)
    return Tobst(new, t.size + 1)


def tobst_build(h: Listing) -> list[Tobst]:
    """Snapshots after 1, 2, ..., len(h) insertions (index 0 is step 1)."""
    snaps = []
    t = EMPTY
    for step, value in enumerate(h.values, 1):
        t = tobst_insert(t, step, value)
        snaps.append(t)
    return snaps


def tobst_at(h: Listing, step: int | None = None) -> Tobst:
    """The single snapshot after ``step`` insertions (default: all of them)."""
    if step is None:
        step = len(h)
    if not 0 <= step <= len(h):
        raise OutOfRange(f"step {step} outside 0..{len(h)}")
    t = EMPTY
    for i in range(step):
        t = tobst_insert(t, i + 1, h.values[i])
    return t


def _encode(node):
    # node -> "(" + left + "," + right + ")"; absent child -> ""
    parts = []
    stack = [node]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif item is not None:
            stack.extend((")", item.right, ",", item.left, "("))
    return "".join(parts)


def shape_encode(t: Tobst) -> TobstShape:
    return TobstShape(_encode(t.root))


@lru_cache(maxsize=8192)
def _shape_sequence(values: tuple[int, ...]) -> tuple[str, ...]:
    return tuple(_encode(t.root) for t in tobst_build(Listing(values)))


def shape_sequence(h: Listing) -> tuple[str, ...]:
    """Shape encodings of every snapshot of ``h``, step 1 first."""
    return _shape_sequence(tuple(h.values))


def isomorphic_at_step(h: Listing, g: Listing, i: int) -> bool:
    if not 1 <= i <= min(len(h), len(g)):
        raise OutOfRange(f"step {i} outside 1..{min(len(h), len(g))}")
    return shape_encode(tobst_at(h, i)) == shape_encode(tobst_at(g, i))


def uniform_via_tobst(h: Listing, g: Listing) -> bool:
    """Uniformity decided by comparing tree shapes at every step."""
    if len(h) != len(g):
        raise LengthMismatch(f"lengths differ: {len(h)} vs {len(g)}")
    return shape_sequence(h) == shape_sequence(g)


def spine_kind(t: Tobst) -> SpineKind:
    if t.size <= 1:
        return SpineKind.BOTH
    has_left = has_right = False
    for node in t.nodes_preorder():
        has_left = has_left or node.left is not None
        has_right = has_right or node.right is not None
    if has_left and has_right:
        return SpineKind.NEITHER
    return SpineKind.LEFT if has_left else SpineKind.RIGHT


def export_dot(t: Tobst, name: str = "tobst") -> str:
    lines = [f"digraph {name} {{"]
    for node in t.nodes_preorder():
        lines.append(f'  n{node.step} [label="{node.step}:{node.value}"];')
        for child, tag in ((node.left, "L"), (node.right, "R")):
            if child is not None:
                lines.append(f'  n{node.step} -> n{child.step} [label="{tag}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
