"""Static rooted-tree helpers: ancestor intervals, level ancestors and LCA.

All structures take a parent array (``-1`` for the root) and are immutable
once built.
"""
from __future__ import annotations

from typing import Sequence


def children_lists(parent: Sequence[int]) -> list[list[int]]:
    kids: list[list[int]] = [[] for _ in parent]
    for v, p in enumerate(parent):
        if p >= 0:
            kids[p].append(v)
    return kids


def preorder(root: int, kids: Sequence[Sequence[int]]) -> list[int]:
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(kids[v]))
    return order


class AncestorIndex:
    """Pre/post intervals so that ``is_ancestor`` is a pair of comparisons."""

    __slots__ = ("tin", "tout")

    def __init__(self, root: int, kids: Sequence[Sequence[int]]):
        n = len(kids)
        self.tin = [0] * n
        self.tout = [0] * n
        clock = 0
        stack: list[tuple[int, bool]] = [(root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                self.tout[v] = clock
                continue
            self.tin[v] = clock
            clock += 1
            stack.append((v, True))
            for c in reversed(kids[v]):
                stack.append((c, False))

    def is_ancestor(self, u: int, v: int) -> bool:
        """Reflexive: every node is its own ancestor."""
        return self.tin[u] <= self.tin[v] and self.tout[v] <= self.tout[u]


class LevelAncestor:
    """Jump-pointer table; ``anc(u, j)`` in O(log j)."""

    __slots__ = ("depth", "up")

    def __init__(self, parent: Sequence[int], depth: Sequence[int]):
        self.depth = list(depth)
        n = len(parent)
        top = max(self.depth, default=0)
        first = [p if p >= 0 else v for v, p in enumerate(parent)]
        self.up = [first]
        k = 1
        while (1 << k) <= top:
            prev = self.up[-1]
            self.up.append([prev[prev[v]] for v in range(n)])
            k += 1

    def anc(self, u: int, j: int) -> int | None:
        if j < 0 or j > self.depth[u]:
            return None
        k = 0
        while j:
            if j & 1:
                u = self.up[k][u]
            j >>= 1
            k += 1
        return u


class EulerLCA:
    """Euler tour + sparse table over first occurrences; O(1) queries."""

    __slots__ = ("first", "euler", "table", "level")

    def __init__(self, root: int, kids: Sequence[Sequence[int]], level: Sequence[int]):
        self.level = level
        self.first = [0] * len(kids)
        euler: list[int] = []
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            v, i = stack.pop()
            if i == 0:
                self.first[v] = len(euler)
            euler.append(v)
            if i < len(kids[v]):
                stack.append((v, i + 1))
                stack.append((kids[v][i], 0))
        self.euler = euler
        table = [euler]
        span = 1
        while 2 * span <= len(euler):
            prev = table[-1]
            row = []
            for i in range(len(euler) - 2 * span + 1):
                a, b = prev[i], prev[i + span]
                row.append(a if level[a] <= level[b] else b)
            table.append(row)
            span *= 2
        self.table = table

    def lca(self, u: int, v: int) -> int:
        i, j = self.first[u], self.first[v]
        if i > j:
            i, j = j, i
        k = (j - i + 1).bit_length() - 1
        row = self.table[k]
        a, b = row[i], row[j - (1 << k) + 1]
        return a if self.level[a] <= self.level[b] else b
