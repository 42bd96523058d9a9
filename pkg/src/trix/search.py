"""Bidirectional pattern search on a trie.

A cursor tracks Q = reverse(P) in STree(T_b). Prepending to P appends to Q,
which is an ordinary descent in the suffix tree. Appending to P prepends to
Q, which is a W-link step from the nearest explicit node at or above the
locus.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .index import TrieIndex
from .suffix_tree import QueryStats
from .wlinks import soft_wlink_query


class SymbolError(ValueError):
    pass


@dataclass(frozen=True)
class Cursor:
    """Locus of a pattern of length ``length``.

    ``node`` is the suffix-tree node at or just below the locus; the locus
    is explicit iff ``depth[node] == length``.
    """

    node: int
    length: int


def cursor_new(index: TrieIndex) -> Cursor:
    return Cursor(0, 0)


def _check(index: TrieIndex, a: int) -> None:
    if not 1 <= a <= index.sigma:
        raise SymbolError(f"symbol {a} outside [1..{index.sigma}]")


def locus(index: TrieIndex, c: Cursor) -> tuple[int, int, int | None]:
    """(nearest explicit ancestor-or-self, offset on its out-edge, edge child)."""
    st = index.st
    if st.depth[c.node] == c.length:
        return c.node, 0, None
    top = st.parent[c.node]
    return top, c.length - st.depth[top], c.node


def extend_left(index: TrieIndex, c: Cursor, b: int,
                stats: QueryStats | None = None) -> Cursor | None:
    """Cursor for b·P, or None if it does not occur."""
    _check(index, b)
    nxt = index.st.step(c.node, c.length, b, stats)
    return None if nxt is None else Cursor(*nxt)


def extend_right(index: TrieIndex, c: Cursor, a: int,
                 stats: QueryStats | None = None) -> Cursor | None:
    """Cursor for P·a, or None if it does not occur."""
    _check(index, a)
    st = index.st
    top, offset, below = locus(index, c)
    link = soft_wlink_query(index.mm, st, top, a, stats)
    if link is None:
        return None
    if below is None:
        return Cursor(link.target, c.length + 1)
    # locus of a·str(top) is (target, depth(top)+1); one more symbol c0 then
    # pins the edge, and every occurrence of str(top)·c0 continues to Q
    c0 = st.char(below, st.depth[top])
    nxt = st.step(link.target, st.depth[top] + 1, c0, stats)
    if nxt is None:
        return None
    return Cursor(nxt[0], c.length + 1)


def count(index: TrieIndex, c: Cursor) -> int:
    return index.st.leaf_count(c.node)


def occurrences(index: TrieIndex, c: Cursor) -> list[tuple[int, int]]:
    """All (u, v) with str_f(u, v) = P, in suffix-array order of v."""
    trie = index.trie
    return [(trie.anc(v, c.length), v) for v in index.st.subtree_leaves(c.node)]


def find(index: TrieIndex, pattern: Iterable[int]) -> list[tuple[int, int]]:
    c: Cursor | None = cursor_new(index)
    for b in reversed(tuple(pattern)):
        c = extend_left(index, c, b)
        if c is None:
            return []
    return occurrences(index, c)


def run_script(index: TrieIndex, ops: Iterable[tuple[str, int]],
               stats: QueryStats | None = None) -> tuple[Cursor | None, int]:
    """Apply L/R steps in order; returns (final cursor or None, steps applied)."""
    c: Cursor | None = cursor_new(index)
    done = 0
    for op, a in ops:
        if op == "L":
            c = extend_left(index, c, a, stats)
        elif op == "R":
            c = extend_right(index, c, a, stats)
        else:
            raise ValueError(f"unknown operation {op!r}")
        if c is None:
            return None, done
        done += 1
    return c, done


def parse_script(text: str, index: TrieIndex) -> list[tuple[str, int]]:
    ops = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        if len(parts) != 2 or parts[0] not in ("L", "R"):
            raise ValueError(f"line {lineno}: expected 'L <sym>' or 'R <sym>', got {line!r}")
        ops.append((parts[0], index.encode_symbol(parts[1].strip())))
    return ops
