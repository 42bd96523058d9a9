"""Compact suffix tree of a backward trie.

The backward suffixes are the upward strings ``str_b(v, ⊥)`` for every
original trie node ``v``; each ends with the unique terminator, so there are
exactly ``n̂ - 1`` of them and every one ends at a leaf.

Construction: suffix array by prefix doubling over trie jump pointers, LCPs
from the same rank tables, then the usual stack-based tree build. Node ids
are assigned in preorder, so the leaves appear in suffix-array order and a
node's SA interval is the contiguous range of its leaves.

An edge label is never materialised: node ``U`` stores ``ref[U]``, a trie
node whose suffix passes through ``U``, and its string depth. The k-th
symbol of ``U``'s string is the label of ``anc(ref[U], k)`` in the trie.
"""
from __future__ import annotations

from dataclasses import dataclass

from .treeops import AncestorIndex, EulerLCA, LevelAncestor
from .trie import AugmentedTrie, Symbols


@dataclass
class QueryStats:
    """Comparison counter shared by the query paths of one caller."""

    comparisons: int = 0

    def reset(self) -> None:
        self.comparisons = 0


def backward_suffix_array(aug: AugmentedTrie) -> tuple[list[int], list[int], list[list[int]]]:
    """SA over original trie nodes, its LCP array and the rank tables.

    ``ranks[k][v]`` orders the length-``2**k`` prefixes of suffix ``v``.
    """
    t = aug.trie
    nodes = [v for v in range(len(t)) if v != aug.bot]
    length = t.depth  # the suffix from v has depth(v) symbols (⊥ has depth 0)
    la = t._la

    def dense(keys: dict[int, tuple[int, int]]) -> dict[int, int]:
        ordered = sorted(set(keys.values()))
        pos = {k: i for i, k in enumerate(ordered)}
        return {v: pos[keys[v]] for v in keys}

    first = dense({v: (t.label[v], 0) for v in nodes})
    rank = [-1] * len(t)
    for v, r in first.items():
        rank[v] = r
    ranks = [rank]
    span = 1
    while len(set(rank[v] for v in nodes)) < len(nodes):
        step = la.up[len(ranks) - 1]
        keys = {}
        for v in nodes:
            tail = rank[step[v]] if length[v] > span else -1
            keys[v] = (rank[v], tail)
        new = dense(keys)
        rank = [-1] * len(t)
        for v, r in new.items():
            rank[v] = r
        ranks.append(rank)
        span *= 2
    sa = sorted(nodes, key=lambda v: rank[v])

    def lcp(u: int, v: int) -> int:
        total = 0
        for k in range(len(ranks) - 1, -1, -1):
            s = 1 << k
            if length[u] >= s and length[v] >= s and ranks[k][u] == ranks[k][v]:
                total += s
                u = la.up[k][u]
                v = la.up[k][v]
        return total

    lcps = [0] + [lcp(sa[i - 1], sa[i]) for i in range(1, len(sa))]
    return sa, lcps, ranks


class SuffixTree:
    """STree(T_b) with suffix array, suffix links and hard W-links."""

    def __init__(self, aug: AugmentedTrie, parent: list[int], depth: list[int],
                 ref: list[int], leaf: list[int], slink: list[int] | None = None,
                 hard: list[dict[int, int]] | None = None):
        self.aug = aug
        self.trie = aug.trie
        self.parent = parent
        self.depth = depth
        self.ref = ref
        self.leaf = leaf  # trie node id for leaves, -1 for internal nodes
        n = len(parent)
        kids: list[list[int]] = [[] for _ in range(n)]
        for v in range(1, n):
            if not 0 <= parent[v] < v:
                raise ValueError(f"suffix-tree node {v}: ids must be in preorder")
            kids[parent[v]].append(v)
        self.kids = kids
        self.child_syms = [[self.char(c, depth[v]) for c in kids[v]] for v in range(n)]
        self.node_depth = [0] * n
        for v in range(1, n):
            self.node_depth[v] = self.node_depth[parent[v]] + 1
        self.sa = [v for v in leaf if v >= 0]
        self.leaf_of = {v: i for i, v in enumerate(leaf) if v >= 0}
        self.isa = {v: i for i, v in enumerate(self.sa)}
        lo = [0] * n
        hi = [-1] * n
        rank = 0
        for v in range(n):
            if leaf[v] >= 0:
                lo[v] = hi[v] = rank
                rank += 1
        for v in range(n - 1, -1, -1):
            if leaf[v] < 0:
                lo[v] = lo[kids[v][0]] if kids[v] else 0
                hi[v] = hi[kids[v][-1]] if kids[v] else -1
        self.lo = lo
        self.hi = hi
        self._intervals = AncestorIndex(0, kids)
        self._la = LevelAncestor(parent, self.node_depth)
        self._lca = EulerLCA(0, kids, self.node_depth)
        self.slink = slink if slink is not None else self._compute_suffix_links()
        self.hard = hard if hard is not None else derive_hard_wlinks(self)

    # -- construction -------------------------------------------------------

    @classmethod
    def build(cls, aug: AugmentedTrie) -> "SuffixTree":
        sa, lcps, _ = backward_suffix_array(aug)
        length = aug.trie.depth
        # temporary nodes: [depth, ref, leaf, children]
        tmp: list[list] = [[0, aug.bot, -1, []]]
        stack = [0]
        for v, h in zip(sa, lcps):
            last = None
            while tmp[stack[-1]][0] > h:
                last = stack.pop()
            top = stack[-1]
            if tmp[top][0] < h:
                mid = len(tmp)
                tmp.append([h, v, -1, [last]])
                tmp[top][3][-1] = mid
                stack.append(mid)
                top = mid
            leaf = len(tmp)
            tmp.append([length[v], v, v, []])
            tmp[top][3].append(leaf)
            stack.append(leaf)
        if tmp[0][3]:
            tmp[0][1] = tmp[tmp[0][3][0]][1]
        # renumber in preorder
        order = []
        walk = [0]
        while walk:
            x = walk.pop()
            order.append(x)
            walk.extend(reversed(tmp[x][3]))
        new_id = {x: i for i, x in enumerate(order)}
        parent = [-1] * len(order)
        for x in order:
            for c in tmp[x][3]:
                parent[new_id[c]] = new_id[x]
        depth = [tmp[x][0] for x in order]
        ref = [tmp[x][1] for x in order]
        leaf = [tmp[x][2] for x in order]
        return cls(aug, parent, depth, ref, leaf)

    def _compute_suffix_links(self) -> list[int]:
        t = self.trie
        bot = self.aug.bot
        slink = [-1] * len(self.parent)
        for u, v in enumerate(self.leaf):
            if v >= 0:
                p = t.parent[v]
                slink[u] = 0 if p == bot else self.leaf_of[p]
        for u in range(1, len(self.parent)):
            if self.leaf[u] < 0:
                left = slink[self.leaf_of[self.sa[self.lo[u]]]]
                right = slink[self.leaf_of[self.sa[self.hi[u]]]]
                slink[u] = self._lca.lca(left, right)
        return slink

    # -- basic queries ------------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self.parent)

    @property
    def edge_count(self) -> int:
        return len(self.parent) - 1

    def __len__(self) -> int:
        return len(self.parent)

    def is_leaf(self, u: int) -> bool:
        return self.leaf[u] >= 0

    def char(self, u: int, k: int) -> int:
        """k-th symbol (0-based) of node u's string; requires k < depth[u]."""
        t = self.trie
        return t.label[t._la.anc(self.ref[u], k)]

    def expand(self, u: int) -> Symbols:
        """The full string of node u (test and debug use)."""
        return tuple(self.char(u, k) for k in range(self.depth[u]))

    def edge_label(self, u: int) -> Symbols:
        p = self.parent[u]
        return tuple(self.char(u, k) for k in range(self.depth[p], self.depth[u]))

    def is_ancestor(self, u: int, v: int) -> bool:
        return self._intervals.is_ancestor(u, v)

    def lca(self, u: int, v: int) -> int:
        return self._lca.lca(u, v)

    def anc(self, u: int, j: int) -> int | None:
        """j-th ancestor in the tree (counting nodes, not symbols)."""
        return self._la.anc(u, j)

    def child_by_symbol(self, u: int, c: int, stats: QueryStats | None = None) -> int | None:
        """Child whose edge starts with c, by binary search over sorted children."""
        syms = self.child_syms[u]
        lo, hi = 0, len(syms)
        while lo < hi:
            mid = (lo + hi) // 2
            if stats is not None:
                stats.comparisons += 1
            if syms[mid] < c:
                lo = mid + 1
            else:
                hi = mid
        if stats is not None and lo < len(syms):
            stats.comparisons += 1
        if lo < len(syms) and syms[lo] == c:
            return self.kids[u][lo]
        return None

    def leaf_count(self, u: int) -> int:
        return self.hi[u] - self.lo[u] + 1

    def subtree_leaves(self, u: int) -> list[int]:
        """Trie node ids of the leaves below u, in suffix-array order."""
        return self.sa[self.lo[u]:self.hi[u] + 1]

    def suffix_array(self) -> tuple[list[int], dict[int, int]]:
        return list(self.sa), dict(self.isa)

    def locate(self, string: Symbols, stats: QueryStats | None = None) -> tuple[int, int] | None:
        """Locus of string as (node at or below it, length), or None."""
        node, m = 0, 0
        for c in string:
            node, m = self.step(node, m, c, stats) or (None, None)
            if node is None:
                return None
        return node, m

    def step(self, node: int, m: int, c: int, stats: QueryStats | None = None) -> tuple[int, int] | None:
        """Extend the locus (node, m) by symbol c on the right."""
        if self.depth[node] == m:
            child = self.child_by_symbol(node, c, stats)
            return None if child is None else (child, m + 1)
        if stats is not None:
            stats.comparisons += 1
        if self.char(node, m) == c:
            return node, m + 1
        return None

    def dump(self) -> str:
        lines = []
        for u in range(len(self.parent)):
            tag = f" leaf:{self.leaf[u]}" if self.leaf[u] >= 0 else ""
            kids = ",".join(f"{c}:{k}" for c, k in zip(self.child_syms[u], self.kids[u]))
            lines.append(f"{u} {self.parent[u]} {self.depth[u]}{tag} children=({kids})")
        return "\n".join(lines) + "\n"


def derive_hard_wlinks(st: SuffixTree) -> list[dict[int, int]]:
    """Hard W-links as the labelled inverse of the suffix links.

    ``hard[V][a] == U`` iff slink(U) == V and U's string starts with a.
    """
    hard: list[dict[int, int]] = [{} for _ in range(len(st.parent))]
    for u in range(1, len(st.parent)):
        hard[st.slink[u]][st.char(u, 0)] = u
    return hard
