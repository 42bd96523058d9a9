"""Differential verification of an index against the brute-force oracle."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import oracle
from .index import TrieIndex
from .search import cursor_new, extend_left, extend_right, occurrences
from .trie import AugmentedTrie, ForwardTrie, Symbols
from .wlinks import soft_wlink_query


@dataclass
class CheckResult:
    name: str
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str, cap: int = 20) -> None:
        if len(self.failures) < cap:
            self.failures.append(msg)


def node_strings(index: TrieIndex) -> list[Symbols]:
    """String of every suffix-tree node, by walking up from its reference."""
    st, t = index.st, index.aug.trie
    out = []
    for u in range(st.node_count):
        v, s = st.ref[u], []
        for _ in range(st.depth[u]):
            s.append(t.label[v])
            v = t.parent[v]
        out.append(tuple(s))
    return out


def occurrence_table(trie: ForwardTrie) -> dict[Symbols, set[tuple[int, int]]]:
    """Every (u, v) pair of the trie keyed by str_f(u, v)."""
    table: dict[Symbols, set[tuple[int, int]]] = {}
    for v in range(len(trie)):
        u, up = v, []
        while True:
            table.setdefault(tuple(reversed(up)), set()).add((u, v))
            if u == trie.root:
                break
            up.append(trie.label[u])
            u = trie.parent[u]
    return table


class Verifier:
    """Runs the invariant suite for one index; oracle structures are built once."""

    def __init__(self, index: TrieIndex):
        self.index = index
        self.aug: AugmentedTrie = index.aug
        self.strings = node_strings(index)
        self.ostree = oracle.build_explicit(self.aug, "suffix-tree", "backward")
        self.wl = oracle.WLinkOracle(self.ostree)

    def check_suffix_tree(self) -> CheckResult:
        res = CheckResult("suffix tree = oracle STree(T_b)")
        st = self.index.st
        par = self.ostree.parent_of()
        if sorted(self.strings) != sorted(self.ostree.nodes):
            res.fail(f"node sets differ: {len(self.strings)} vs {self.ostree.node_count}")
            return res
        for u in range(1, st.node_count):
            if self.strings[st.parent[u]] != par[self.strings[u]]:
                res.fail(f"node {u}: wrong parent")
        n_aug = self.aug.n_aug
        if n_aug >= 3 and (st.node_count > 2 * n_aug - 3 or st.edge_count > 2 * n_aug - 4):
            res.fail(f"size bound violated: {st.node_count} nodes for n̂={n_aug}")
        sa = st.sa
        if len(sa) != n_aug - 1:
            res.fail(f"suffix array length {len(sa)} != {n_aug - 1}")
        suffix = [self.aug.trie.path_string(v, self.aug.bot, "backward") for v in sa]
        for i in range(1, len(suffix)):
            if not suffix[i - 1] < suffix[i]:
                res.fail(f"suffix array not increasing at {i}")
        return res

    def check_suffix_links(self) -> CheckResult:
        res = CheckResult("suffix links and hard W-links")
        st = self.index.st
        for u in range(1, st.node_count):
            if self.strings[st.slink[u]] != self.strings[u][1:]:
                res.fail(f"slink({u}) wrong")
        stored = {(v, a): u for v in range(st.node_count) for a, u in st.hard[v].items()}
        expect = {}
        for v in range(st.node_count):
            for a in range(0, self.aug.sigma + 1):
                ans = self.wl.query(self.strings[v], a)
                if ans is not None and ans[1]:
                    expect[(v, a)] = ans[0]
        for key in stored.keys() | expect.keys():
            got = stored.get(key)
            if got is None or self.strings[got] != expect.get(key):
                res.fail(f"hard W-link (node {key[0]}, symbol {key[1]}) mismatch")
        return res

    def wlink_expected(self, v: int, a: int) -> tuple[Symbols, bool] | None:
        return self.wl.query(self.strings[v], a)

    def check_macro_links(self) -> CheckResult:
        res = CheckResult("stored macro-root W-links")
        mm = self.index.mm
        for root in mm.roots:
            stored = mm.macro_links.get(root, {})
            for a in range(0, self.aug.sigma + 1):
                exp = self.wlink_expected(root, a)
                got = stored.get(a)
                g = None if got is None else (self.strings[got.target], got.hard)
                if g != exp:
                    res.fail(f"macro link (node {root}, symbol {a}): stored {g}, expected {exp}")
        return res

    def check_wlink_sweep(self) -> CheckResult:
        res = CheckResult("W-link query sweep (cases A/B)")
        st, mm = self.index.st, self.index.mm
        for v in range(st.node_count):
            for a in range(0, self.aug.sigma + 1):
                got = soft_wlink_query(mm, st, v, a)
                g = None if got is None else (self.strings[got.target], got.hard)
                exp = self.wlink_expected(v, a)
                if g != exp:
                    res.fail(f"W-link (node {v}, symbol {a}): got {g}, expected {exp}")
        return res

    def check_dawg(self) -> CheckResult:
        res = CheckResult("implicit DAWG = oracle DAWG(T_f)")
        odawg = oracle.build_explicit(self.aug, "dawg", "forward")
        dawg = self.index.dawg
        if dawg.state_count() != odawg.node_count:
            res.fail(f"state count {dawg.state_count()} != {odawg.node_count}")
        longest = {s: self.strings[s][::-1] for s in dawg.states()}
        if set(longest.values()) != set(odawg.nodes):
            res.fail("state strings differ from DAWG class representatives")
            return res
        n_edges = 0
        for s in dawg.states():
            x = longest[s]
            for a in range(0, self.aug.sigma + 1):
                tr = dawg.transition(s, a)
                exp = odawg.edges.get((x, a))
                if tr is None and exp is None:
                    continue
                n_edges += tr is not None
                if tr is None or exp is None:
                    res.fail(f"transition (state {s}, symbol {a}): got {tr}, expected {exp}")
                    continue
                kind = "primary" if odawg.primary[(x, a)] else "secondary"
                if longest[tr.state] != exp[0] or tr.kind != kind:
                    res.fail(f"transition (state {s}, symbol {a}) target/kind mismatch")
        if n_edges != odawg.edge_count:
            res.fail(f"edge count {n_edges} != {odawg.edge_count}")
        return res

    def check_search(self, scripts: int = 200, seed: int = 0) -> CheckResult:
        res = CheckResult("bidirectional search vs brute force")
        trie = self.aug.base
        table = occurrence_table(trie)
        rng = random.Random(seed)
        sigma = max(1, trie.sigma)
        for _ in range(scripts):
            c, p = cursor_new(self.index), ()
            for _ in range(rng.randint(1, 10)):
                op, a = rng.choice("LR"), rng.randint(1, sigma)
                q = (a,) + p if op == "L" else p + (a,)
                nc = (extend_left if op == "L" else extend_right)(self.index, c, a)
                if (nc is None) != (q not in table):
                    res.fail(f"script step {op} {a} after {p}: cursor validity mismatch")
                    break
                if nc is None:
                    break
                c, p = nc, q
                if set(occurrences(self.index, c)) != table[p]:
                    res.fail(f"occurrences of {p} differ")
        return res

    def check_structure(self) -> CheckResult:
        res = CheckResult("reversal, maximality and W-link shape")
        for msg in reversal_violations(self.aug) + maximality_violations(self.aug) + \
                wlink_shape_violations(self.ostree, self.aug.sigma):
            res.fail(msg)
        return res

    def run(self, search_scripts: int = 200) -> list[CheckResult]:
        return [
            self.check_suffix_tree(),
            self.check_suffix_links(),
            self.check_macro_links(),
            self.check_wlink_sweep(),
            self.check_dawg(),
            self.check_search(search_scripts),
            self.check_structure(),
        ]


def reversal_violations(aug: AugmentedTrie) -> list[str]:
    f = oracle.enumerate_strings(aug, "substr", "forward")
    b = oracle.enumerate_strings(aug, "substr", "backward")
    return [] if f == b.reversed() else ["Substr(T_f) != reverse(Substr(T_b))"]


def maximality_violations(aug: AugmentedTrie) -> list[str]:
    fm = oracle.model(aug, "forward")
    bm = oracle.model(aug, "backward")
    out = []
    for x in fm.strings:
        y = x[::-1]
        if fm.right_maximal(x) != bm.left_maximal(y):
            out.append(f"right/left maximality asymmetric for {x}")
        if fm.left_maximal(x) != bm.right_maximal(y):
            out.append(f"left/right maximality asymmetric for {x}")
        if fm.maximal(x) != bm.maximal(y):
            out.append(f"maximality asymmetric for {x}")
    return out


def wlink_shape_violations(stree: oracle.OracleAutomaton, sigma: int) -> list[str]:
    """(a) ancestor closure, (b) LCA closure of hard links, (c)/(d) unique
    topmost hard descendant of a soft link, (e) constant target on the path."""
    wl = oracle.WLinkOracle(stree)
    nodes = stree.nodes
    out = []

    def lcp(x: Symbols, y: Symbols) -> Symbols:
        k = 0
        while k < min(len(x), len(y)) and x[k] == y[k]:
            k += 1
        return x[:k]

    node_set = set(nodes)

    def lca(x: Symbols, y: Symbols) -> Symbols:
        z = lcp(x, y)
        while z not in node_set:
            z = z[:-1]
        return z

    for a in range(0, sigma + 1):
        link = {v: wl.query(v, a) for v in nodes}
        hard = [v for v in nodes if link[v] is not None and link[v][1]]
        for v in nodes:
            if link[v] is None:
                continue
            p = v[:-1]
            while p not in node_set:
                p = p[:-1]
            if v and link[p] is None:
                out.append(f"ancestor closure: W_{a}({v}) exists but not for its parent")
        hard_set = set(hard)
        for i, x in enumerate(hard):
            for y in hard[i + 1:]:
                if lca(x, y) not in hard_set:
                    out.append(f"LCA closure: LCA of hard {a}-link holders {x}, {y} lacks one")
        for v in nodes:
            ans = link[v]
            if ans is None or ans[1]:
                continue
            below = [u for u in hard if len(u) > len(v) and u[:len(v)] == v]
            if not below:
                out.append(f"hard descendant: soft W_{a}({v}) without a hard descendant")
                continue
            top = min(len(u) for u in below)
            tops = [u for u in below if len(u) == top]
            if len(tops) != 1 or any(u[:top] != tops[0] for u in below):
                out.append(f"unique top holder: topmost hard {a}-descendant of {v} not unique")
                continue
            u = tops[0]
            for z in nodes:
                if len(v) <= len(z) <= len(u) and u[:len(z)] == z and z[:len(v)] == v:
                    if link[z] is None or link[z][0] != link[u][0]:
                        out.append(f"constant target: W_{a} changes along the path {v} -> {u} at {z}")
    return out


def seeded_instance(seed: int, max_n: int = 300) -> tuple[int, int]:
    """(n, sigma) of the seed-th random instance; sigma cycles 2, 8, 26, ceil(n/2)."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    return n, [2, 8, 26, max(1, -(-n // 2))][seed % 4]


def seeded_trie(seed: int, max_n: int = 300) -> ForwardTrie:
    from .gen import gen_random

    n, sigma = seeded_instance(seed, max_n)
    return gen_random(n, sigma, seed)


def minimize(trie: ForwardTrie, failing: Callable[[ForwardTrie], bool]) -> ForwardTrie:
    """Greedily drop leaves while the failure persists."""
    from .trie import canonical

    current = trie
    changed = True
    while changed and len(current) > 1:
        changed = False
        for leaf in current.leaves():
            if leaf == current.root:
                continue
            keep = [v for v in range(len(current)) if v != leaf]
            pos = {v: i for i, v in enumerate(keep)}
            parent = [pos[current.parent[v]] if current.parent[v] >= 0 else -1 for v in keep]
            label = [current.label[v] for v in keep]
            smaller = canonical(ForwardTrie(parent, label, current.sigma))
            try:
                still = failing(smaller)
            except Exception:
                still = True
            if still:
                current = smaller
                changed = True
                break
    return current
