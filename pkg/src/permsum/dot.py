"""Increasing binary trees of permutations, exported as Graphviz DOT.

The smallest entry of a permutation is the root; the entries to its left
form the left subtree and those to its right the right subtree, recursively.
Equivalently, each entry's parent is the larger of its nearest smaller
neighbours on either side.

    dot -Tpng -O tree.gv
"""
from __future__ import annotations

from .perm import Permutation


def increasing_tree(p) -> tuple[int, dict[int, list[int | None]]]:
    """Return ``(root, children)`` where ``children[v] == [left, right]`` (None if absent)."""
    entries = list(p)
    children = {v: [None, None] for v in entries}
    stack: list[int] = []
    for v in entries:
        last = None
        while stack and stack[-1] > v:
            last = stack.pop()
        if last is not None:
            children[v][0] = last
        if stack:
            children[stack[-1]][1] = v
        stack.append(v)
    return stack[0], children


def parents(p) -> dict[int, int | None]:
    root, children = increasing_tree(p)
    out = {root: None}
    for v, kids in children.items():
        for c in kids:
            if c is not None:
                out[c] = v
    return out


def to_dot(p, name: str = "increasing_tree") -> str:
    """DOT text for the increasing binary tree of ``p``.

    Missing children are drawn as invisible nodes so that left and right
    subtrees keep their side in the layout.
    """
    if not isinstance(p, Permutation):
        p = Permutation(p)
    root, children = increasing_tree(p)
    lines = [
        f"digraph {name} {{",
        "  graph [ordering=out];",
        "  node [shape=circle];",
        f'  label="{p}";',
    ]
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        lines.append(f"  {v};")
        kids = children[v]
        if kids == [None, None]:
            continue
        for side, c in zip("LR", kids):
            if c is None:
                ghost = f"nil_{v}_{side}"
                lines.append(f"  {ghost} [style=invis];")
                lines.append(f"  {v} -> {ghost} [style=invis];")
            else:
                lines.append(f'  {v} -> {c} [label="{side}"];')
                order.append(c)
    lines.append("}")
    return "\n".join(lines) + "\n"
