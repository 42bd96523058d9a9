"""Implicit soft W-links over a micro-macro decomposition of STree(T_b).

Only three things are stored beyond the suffix tree: the hard W-links, the
full W-link map of every micro-tree root, and per micro tree and symbol the
sorted local preorder ranks of the nodes holding a hard link (``P_a``).
Every other W-link is recovered by a query that costs one binary search in
a ``P_a`` array plus O(1) ancestor checks and one child lookup.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import NamedTuple

from .suffix_tree import QueryStats, SuffixTree


class WLinkAnswer(NamedTuple):
    target: int
    hard: bool


@dataclass
class MicroMacro:
    sigma: int
    micro_of: list[int]            # micro-tree root of every node
    rank: list[int]                # preorder rank inside the micro tree
    roots: list[int]               # micro-tree roots (= macro nodes), preorder
    members: dict[int, list[int]]  # micro root -> nodes in preorder
    macro_parent: dict[int, int] = field(default_factory=dict)
    pa: dict[int, dict[int, list[int]]] = field(default_factory=dict)
    macro_links: dict[int, dict[int, WLinkAnswer]] = field(default_factory=dict)

    def storage(self) -> dict[str, int]:
        return {
            "micro_trees": len(self.roots),
            "macro_links": sum(len(m) for m in self.macro_links.values()),
            "pa_entries": sum(len(a) for arrays in self.pa.values() for a in arrays.values()),
        }

    def successor_of_root(self, root: int, a: int) -> int | None:
        """Topmost hard-a holder of the micro tree (rank 0 is the root itself)."""
        arr = self.pa.get(root, {}).get(a)
        return self.members[root][arr[0]] if arr else None


def decompose(st: SuffixTree, sigma: int) -> MicroMacro:
    """Greedy bottom-up cut: a node closes a micro tree once its mass reaches sigma."""
    if sigma < 1:
        raise ValueError("sigma must be at least 1")
    n = st.node_count
    mass = [1] * n
    cut = [False] * n
    for v in range(n - 1, -1, -1):  # children have larger preorder ids
        if v == 0 or mass[v] >= sigma:
            cut[v] = True
        elif st.parent[v] >= 0:
            mass[st.parent[v]] += mass[v]
    micro_of = [0] * n
    rank = [0] * n
    members: dict[int, list[int]] = {}
    roots = []
    macro_parent = {}
    for v in range(n):
        if cut[v]:
            micro_of[v] = v
            roots.append(v)
            members[v] = []
            if v:
                macro_parent[v] = micro_of[st.parent[v]]
        else:
            micro_of[v] = micro_of[st.parent[v]]
        group = members[micro_of[v]]
        rank[v] = len(group)
        group.append(v)
    return MicroMacro(sigma, micro_of, rank, roots, members, macro_parent)


def build_pa_arrays(mm: MicroMacro, hard: list[dict[int, int]]) -> MicroMacro:
    for root, nodes in mm.members.items():
        arrays: dict[int, list[int]] = {}
        for r, v in enumerate(nodes):
            for a in hard[v]:
                arrays.setdefault(a, []).append(r)
        mm.pa[root] = {a: arrays[a] for a in sorted(arrays)}
    return mm


def build_macro_wlinks(mm: MicroMacro, st: SuffixTree) -> MicroMacro:
    """W-link maps of all micro roots, bottom-up over the macro tree.

    A root whose micro tree holds hard a-links links to the target of the
    topmost holder. Otherwise all a-holders below it sit under one child
    micro tree, whose (soft) link it inherits.
    """
    kids: dict[int, list[int]] = {r: [] for r in mm.roots}
    for r, p in mm.macro_parent.items():
        kids[p].append(r)
    links: dict[int, dict[int, WLinkAnswer]] = {}
    for root in reversed(mm.roots):
        out: dict[int, WLinkAnswer] = {}
        for child in kids[root]:
            for a, ans in links[child].items():
                out.setdefault(a, WLinkAnswer(ans.target, False))
        for a in mm.pa[root]:
            top = mm.successor_of_root(root, a)
            out[a] = WLinkAnswer(st.hard[top][a], top == root)
        links[root] = {a: out[a] for a in sorted(out)}
    mm.macro_links = {r: links[r] for r in mm.roots}
    return mm


def build_wlinks(st: SuffixTree, sigma: int) -> MicroMacro:
    mm = decompose(st, sigma)
    build_pa_arrays(mm, st.hard)
    return build_macro_wlinks(mm, st)


def soft_wlink_query(mm: MicroMacro, st: SuffixTree, v: int, a: int,
                     stats: QueryStats | None = None) -> WLinkAnswer | None:
    """W_a(v): the shortest explicit node extending a·str(v), or None."""
    if not 0 <= v < st.node_count:
        raise IndexError(f"unknown suffix-tree node {v}")
    target = st.hard[v].get(a)
    if target is not None:
        return WLinkAnswer(target, True)
    root = mm.micro_of[v]
    if v == root:
        return mm.macro_links[root].get(a)
    if a not in mm.macro_links[root]:
        return None  # no ancestor has an a-link, so nobody below does either

    holder = None
    arr = mm.pa[root].get(a)
    if arr:
        i = _bisect(arr, mm.rank[v], stats) - 1
        if i >= 0:
            p = mm.members[root][arr[i]]
            _tick(stats)
            if st.is_ancestor(p, v):
                holder = p
            else:
                # any holder strictly between lca and v would precede v more
                # closely than p; so lca is the nearest candidate, and if it
                # has no a-link then a·lca extends only towards p, never to v
                z = st.lca(p, v)
                _tick(stats)
                if a not in st.hard[z]:
                    return None
                holder = z
    if holder is not None:
        q = st.hard[holder][a]
        step = st.anc(v, st.node_depth[v] - st.node_depth[holder] - 1)
        c = st.char(step, st.depth[holder])
        x = st.child_by_symbol(q, c, stats)
        if x is None:
            return None
        _tick(stats)
        return WLinkAnswer(x, False) if st.is_ancestor(v, st.slink[x]) else None

    u = mm.macro_links[root][a].target
    _tick(stats)
    return WLinkAnswer(u, False) if st.is_ancestor(v, st.slink[u]) else None


def _tick(stats: QueryStats | None) -> None:
    if stats is not None:
        stats.comparisons += 1


def _bisect(arr: list[int], x: int, stats: QueryStats | None) -> int:
    if stats is None:
        return bisect_right(arr, x)
    lo, hi = 0, len(arr)
    while lo < hi:
        mid = (lo + hi) // 2
        stats.comparisons += 1
        if x < arr[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo
