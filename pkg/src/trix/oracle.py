"""Brute-force ground truth for tries.

Everything here enumerates substrings explicitly and is quadratic (or worse)
in the trie size. It exists to validate the linear structures and to
measure the size of the structures that cannot be built in linear space.

Strings are tuples of integer symbols. Orientation ``forward`` reads paths
root-to-leaf; ``backward`` reads them leaf-to-root.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

from .trie import AugmentedTrie, ForwardTrie, Symbols

DEFAULT_LIMIT = 2000
ORIENTATIONS = ("forward", "backward")
KINDS = ("suffix-trie", "suffix-tree", "dawg", "cdawg")


class OracleLimitError(RuntimeError):
    pass


def desk_limit() -> int:
    return int(os.environ.get("TRIX_LIMIT", DEFAULT_LIMIT))


def _trie_of(t: AugmentedTrie | ForwardTrie) -> ForwardTrie:
    return t.trie if isinstance(t, AugmentedTrie) else t


def _check_orientation(orientation: str) -> None:
    if orientation not in ORIENTATIONS:
        raise ValueError(f"unknown orientation {orientation!r}")


class StringSet:
    """Deduplicated set of symbol tuples."""

    def __init__(self, items: Iterable[Symbols] = ()):
        self._items = frozenset(tuple(x) for x in items)

    def __contains__(self, x: object) -> bool:
        return tuple(x) in self._items  # type: ignore[arg-type]

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self):
        return iter(sorted(self._items, key=lambda s: (len(s), s)))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, StringSet):
            return self._items == other._items
        return NotImplemented

    def __repr__(self) -> str:
        return f"StringSet({len(self)} strings)"

    def reversed(self) -> "StringSet":
        return StringSet(s[::-1] for s in self._items)


class SubstringModel:
    """All substrings of one orientation with their occurrence data.

    An occurrence is a path ``(start, end)``: forward paths run from an
    ancestor ``start`` down to ``end``; backward paths run from a descendant
    ``start`` up to ``end``. ``ends[X]`` is the end-occurrence set.
    """

    def __init__(self, t: AugmentedTrie | ForwardTrie, orientation: str):
        _check_orientation(orientation)
        trie = _trie_of(t)
        if len(trie) > desk_limit():
            raise OracleLimitError(
                f"{len(trie)} nodes exceeds the desk-scale limit {desk_limit()} (TRIX_LIMIT)")
        self.trie = trie
        self.orientation = orientation
        ends: dict[Symbols, set[int]] = {}
        starts: dict[Symbols, set[int]] = {}
        root = trie.root
        for low in range(len(trie)):
            # walk upward from `low`; the backward string grows on the right,
            # the forward string grows on the left
            up: list[int] = []
            node = low
            while True:
                if orientation == "forward":
                    x = tuple(reversed(up))
                    starts.setdefault(x, set()).add(node)
                    ends.setdefault(x, set()).add(low)
                else:
                    x = tuple(up)
                    starts.setdefault(x, set()).add(low)
                    ends.setdefault(x, set()).add(node)
                if node == root:
                    break
                up.append(trie.label[node])
                node = trie.parent[node]
        self.ends = {x: frozenset(s) for x, s in ends.items()}
        self.starts = {x: frozenset(s) for x, s in starts.items()}
        self.left_ext: dict[Symbols, set[int]] = {x: set() for x in ends}
        self.right_ext: dict[Symbols, set[int]] = {x: set() for x in ends}
        for x in ends:
            if x:
                self.left_ext[x[1:]].add(x[0])
                self.right_ext[x[:-1]].add(x[-1])

    def __contains__(self, x: object) -> bool:
        return tuple(x) in self.ends  # type: ignore[arg-type]

    @property
    def strings(self) -> list[Symbols]:
        return list(self.ends)

    def _left_boundary(self, x: Symbols) -> bool:
        if self.orientation == "forward":
            return self.trie.root in self.starts[x]
        return any(self.trie.is_leaf(v) for v in self.starts[x])

    def _right_boundary(self, x: Symbols) -> bool:
        if self.orientation == "forward":
            return any(self.trie.is_leaf(v) for v in self.ends[x])
        return self.trie.root in self.ends[x]

    def left_maximal(self, x: Symbols) -> bool:
        return len(self.left_ext[x]) >= 2 or self._left_boundary(x)

    def right_maximal(self, x: Symbols) -> bool:
        return len(self.right_ext[x]) >= 2 or self._right_boundary(x)

    def maximal(self, x: Symbols) -> bool:
        return self.left_maximal(x) and self.right_maximal(x)

    def is_suffix(self, x: Symbols) -> bool:
        """Nonempty and ending at a leaf (forward) or at the root (backward)."""
        return bool(x) and self._right_boundary(x)

    def l_mxml(self, x: Symbols) -> Symbols:
        x = self._need(x)
        while not self.left_maximal(x):
            (a,) = self.left_ext[x]
            x = (a,) + x
        return x

    def r_mxml(self, x: Symbols) -> Symbols:
        x = self._need(x)
        while not self.right_maximal(x):
            (a,) = self.right_ext[x]
            x = x + (a,)
        return x

    def mxml(self, x: Symbols) -> Symbols:
        return self.r_mxml(self.l_mxml(x))

    def _need(self, x: Symbols) -> Symbols:
        x = tuple(x)
        if x not in self.ends:
            raise KeyError(f"{x} is not a substring ({self.orientation})")
        return x


_MODEL_CACHE: dict[tuple[int, str], tuple[ForwardTrie, SubstringModel]] = {}


def model(t: AugmentedTrie | ForwardTrie, orientation: str) -> SubstringModel:
    trie = _trie_of(t)
    key = (id(trie), orientation)
    hit = _MODEL_CACHE.get(key)
    if hit is not None and hit[0] is trie:
        return hit[1]
    m = SubstringModel(trie, orientation)
    if len(_MODEL_CACHE) > 64:
        _MODEL_CACHE.clear()
    _MODEL_CACHE[key] = (trie, m)
    return m


def enumerate_strings(t: AugmentedTrie | ForwardTrie, which: str, orientation: str) -> StringSet:
    """``substr`` (including the empty string) or ``suffix`` (nonempty)."""
    m = model(t, orientation)
    if which == "substr":
        return StringSet(m.ends)
    if which == "suffix":
        return StringSet(x for x in m.ends if m.is_suffix(x))
    raise ValueError(f"unknown set {which!r}")


def maximal_extensions(t: AugmentedTrie | ForwardTrie, x: Symbols,
                       orientation: str) -> tuple[Symbols, Symbols, Symbols]:
    """(l_mxml, r_mxml, mxml) of x."""
    m = model(t, orientation)
    return m.l_mxml(x), m.r_mxml(x), m.mxml(x)


@dataclass
class OracleAutomaton:
    """Explicit automaton; nodes are identified by their longest string.

    ``edges`` maps (node, first symbol) to (target node, label). Labels are
    single symbols for tries and DAWGs. ``primary`` and ``slink`` are filled
    for DAWGs only; ``members`` holds every string of a DAWG/CDAWG class.
    """

    kind: str
    orientation: str
    nodes: list[Symbols]
    edges: dict[tuple[Symbols, int], tuple[Symbols, Symbols]]
    ends: dict[Symbols, frozenset[int]] = field(default_factory=dict)
    primary: dict[tuple[Symbols, int], bool] = field(default_factory=dict)
    slink: dict[Symbols, Symbols] = field(default_factory=dict)
    members: dict[Symbols, list[Symbols]] = field(default_factory=dict)
    class_of: dict[Symbols, Symbols] = field(default_factory=dict)
    is_suffix: dict[Symbols, bool] = field(default_factory=dict)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def out(self, node: Symbols) -> dict[int, tuple[Symbols, Symbols]]:
        return {a: dst for (src, a), dst in self.edges.items() if src == node}

    def leaves(self) -> list[Symbols]:
        has_out = {src for src, _ in self.edges}
        return [x for x in self.nodes if x not in has_out]

    def parent_of(self) -> dict[Symbols, Symbols]:
        """Tree parent of each non-root node (tree kinds only)."""
        par = {}
        for (src, _), (dst, _) in self.edges.items():
            par[dst] = src
        return par


def _tree(m: SubstringModel, keep, kind: str) -> OracleAutomaton:
    nodes = sorted((x for x in m.ends if keep(x)), key=lambda s: (len(s), s))
    node_set = set(nodes)
    edges = {}
    for x in nodes:
        if not x:
            continue
        p = x[:-1]
        while p not in node_set:
            p = p[:-1]
        edges[(p, x[len(p)])] = (x, x[len(p):])
    return OracleAutomaton(kind, m.orientation, nodes, edges,
                           ends={x: m.ends[x] for x in nodes},
                           is_suffix={x: m.is_suffix(x) for x in nodes})


def _dawg(m: SubstringModel) -> OracleAutomaton:
    groups: dict[frozenset[int], list[Symbols]] = {}
    for x, e in m.ends.items():
        groups.setdefault(e, []).append(x)
    class_of: dict[Symbols, Symbols] = {}
    members: dict[Symbols, list[Symbols]] = {}
    for strings in groups.values():
        strings.sort(key=len)
        longest = strings[-1]
        members[longest] = strings
        for x in strings:
            class_of[x] = longest
    nodes = sorted(members, key=lambda s: (len(s), s))
    edges = {}
    primary = {}
    slink = {}
    for node in nodes:
        for a in sorted(m.right_ext[node]):
            dst = class_of[node + (a,)]
            edges[(node, a)] = (dst, (a,))
            primary[(node, a)] = len(dst) == len(node) + 1
        if node:
            shortest = len(members[node][0])
            slink[node] = class_of[node[len(node) - shortest + 1:]]
    return OracleAutomaton("dawg", m.orientation, nodes, edges,
                           ends={x: m.ends[x] for x in nodes}, primary=primary,
                           slink=slink, members=members, class_of=class_of,
                           is_suffix={x: any(m.is_suffix(y) for y in members[x]) for x in nodes})


def _cdawg(m: SubstringModel) -> OracleAutomaton:
    maximal = [x for x in m.ends if m.maximal(x)]
    nodes = sorted(maximal, key=lambda s: (len(s), s))
    edges = {}
    class_of: dict[Symbols, Symbols] = {}
    members: dict[Symbols, list[Symbols]] = {}
    for x in m.ends:
        rep = m.mxml(x)
        class_of[x] = rep
        members.setdefault(rep, []).append(x)
    for node in nodes:
        for a in sorted(m.right_ext[node]):
            ext = m.r_mxml(node + (a,))
            edges[(node, a)] = (class_of[ext], ext[len(node):])
    return OracleAutomaton("cdawg", m.orientation, nodes, edges,
                           ends={x: m.ends[x] for x in nodes},
                           members=members, class_of=class_of)


def build_explicit(t: AugmentedTrie | ForwardTrie, kind: str, orientation: str) -> OracleAutomaton:
    """Explicit suffix trie, suffix tree, DAWG or CDAWG of one orientation."""
    m = model(t, orientation)
    if kind == "suffix-trie":
        return _tree(m, lambda x: True, kind)
    if kind == "suffix-tree":
        return _tree(m, lambda x: not x or m.right_maximal(x), kind)
    if kind == "dawg":
        return _dawg(m)
    if kind == "cdawg":
        return _cdawg(m)
    raise ValueError(f"unknown kind {kind!r}")


class WLinkOracle:
    """W-links of an explicit suffix tree by enumerating its nodes.

    ``query(V, a)`` is the shortest node having ``aV`` as a prefix.
    """

    def __init__(self, stree: OracleAutomaton):
        if stree.kind != "suffix-tree":
            raise ValueError("W-links are defined on suffix trees")
        self.stree = stree
        self.nodes = set(stree.nodes)
        best: dict[Symbols, Symbols] = {}
        for z in stree.nodes:
            for k in range(1, len(z) + 1):
                p = z[:k]
                cur = best.get(p)
                if cur is None or len(z) < len(cur):
                    best[p] = z
        self._best = best

    def query(self, v: Symbols, a: int) -> tuple[Symbols, bool] | None:
        target = self._best.get((a,) + tuple(v))
        if target is None:
            return None
        return target, len(target) == len(v) + 1


def wlink_oracle(stree: OracleAutomaton, v: Symbols, a: int) -> tuple[Symbols, bool] | None:
    """(target, hard) for W_a(v), or None when ``a·v`` is not a substring."""
    return WLinkOracle(stree).query(v, a)


def measure(t: AugmentedTrie) -> dict[str, int]:
    """Node/edge counts of all six structures plus suffix-array lengths."""
    report = {"n": t.n, "n_aug": t.n_aug, "sigma": t.sigma}
    for o, tag in (("forward", "f"), ("backward", "b")):
        st = build_explicit(t, "suffix-tree", o)
        report[f"stree_{tag}_nodes"] = st.node_count
        report[f"stree_{tag}_edges"] = st.edge_count
        report[f"sa_{tag}_len"] = len(st.leaves())
        for kind in ("dawg", "cdawg"):
            g = build_explicit(t, kind, o)
            report[f"{kind}_{tag}_nodes"] = g.node_count
            report[f"{kind}_{tag}_edges"] = g.edge_count
    keys = ["n", "n_aug", "sigma"] + [f"{k}_{x}" for k in (
        "stree_f", "stree_b", "dawg_f", "dawg_b", "cdawg_f", "cdawg_b") for x in ("nodes", "edges")]
    keys += ["sa_f_len", "sa_b_len"]
    return {k: report[k] for k in keys}
