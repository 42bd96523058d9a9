"""Forward/backward tries over an integer alphabet.

Symbols are positive integers ``1..sigma``. Symbol ``0`` is reserved for the
terminator ``$`` on the edge from the auxiliary node ``⊥`` to the original
root, which keeps it lexicographically smallest.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

from .treeops import AncestorIndex, LevelAncestor, children_lists, preorder

TERMINATOR = 0

Symbols = tuple[int, ...]


class TrieError(ValueError):
    """Malformed trie input or invalid trie query."""


class ForwardTrie:
    """Rooted edge-labelled tree; sibling labels are distinct.

    ``parent[root] == -1`` and ``label[root] == -1``. Children of every node
    are kept sorted by symbol so lookups are binary searches.
    """

    def __init__(self, parent: Sequence[int], label: Sequence[int],
                 sigma: int | None = None, *, allow_terminator: bool = False):
        n = len(parent)
        if n == 0:
            raise TrieError("a trie has at least one node")
        if len(label) != n:
            raise TrieError("parent and label arrays differ in length")
        roots = [v for v, p in enumerate(parent) if p < 0]
        if len(roots) != 1:
            raise TrieError(f"expected exactly one root, found {len(roots)}")
        self.root = roots[0]
        self.parent = list(parent)
        self.label = [int(x) for x in label]
        self.label[self.root] = -1
        lo = TERMINATOR if allow_terminator else 1
        used = [a for v, a in enumerate(self.label) if v != self.root]
        top = max(used, default=0)
        self.sigma = top if sigma is None else sigma
        for v, a in enumerate(self.label):
            if v == self.root:
                continue
            if not lo <= a <= self.sigma:
                raise TrieError(f"symbol {a} on node {v} outside [{lo}..{self.sigma}]")
            if not 0 <= self.parent[v] < n:
                raise TrieError(f"node {v} has unknown parent {self.parent[v]}")

        kids = children_lists(self.parent)
        for v in range(n):
            kids[v].sort(key=lambda c: self.label[c])
            syms = [self.label[c] for c in kids[v]]
            if len(set(syms)) != len(syms):
                raise TrieError(f"duplicate sibling symbol below node {v}")
        self.kids = kids
        self.child_syms = [[self.label[c] for c in ks] for ks in kids]

        order = preorder(self.root, kids)
        if len(order) != n:
            raise TrieError("cycle or forest detected: not every node is reachable from the root")
        self.order = order
        depth = [0] * n
        for v in order:
            if v != self.root:
                depth[v] = depth[self.parent[v]] + 1
        self.depth = depth
        self._intervals = AncestorIndex(self.root, kids)
        self._la = LevelAncestor(self.parent, depth)

    def __len__(self) -> int:
        return len(self.parent)

    @property
    def node_count(self) -> int:
        return len(self.parent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ForwardTrie):
            return NotImplemented
        return (self.parent, self.label, self.sigma) == (other.parent, other.label, other.sigma)

    def __repr__(self) -> str:
        return f"ForwardTrie(n={len(self)}, sigma={self.sigma})"

    def is_leaf(self, v: int) -> bool:
        return not self.kids[v]

    def leaves(self) -> list[int]:
        return [v for v in range(len(self)) if not self.kids[v]]

    def child(self, v: int, a: int) -> int | None:
        syms = self.child_syms[v]
        i = bisect_left(syms, a)
        if i < len(syms) and syms[i] == a:
            return self.kids[v][i]
        return None

    def edges(self) -> list[tuple[int, int, int]]:
        """(parent, child, symbol) triples in preorder of the child."""
        return [(self.parent[v], v, self.label[v]) for v in self.order if v != self.root]

    def _check(self, u: int) -> None:
        if not 0 <= u < len(self.parent):
            raise TrieError(f"unknown node id {u}")

    def anc(self, u: int, j: int) -> int | None:
        self._check(u)
        return self._la.anc(u, j)

    def is_ancestor(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return self._intervals.is_ancestor(u, v)

    def path_string(self, u: int, v: int, orientation: str = "forward") -> Symbols:
        """``forward``: str_f(u, v) for u an ancestor of v.
        ``backward``: str_b(u, v) for u a descendant of v (read upward)."""
        if orientation == "backward":
            low, high = u, v
        elif orientation == "forward":
            low, high = v, u
        else:
            raise TrieError(f"unknown orientation {orientation!r}")
        if not self.is_ancestor(high, low):
            raise TrieError(f"node {high} is not an ancestor of node {low}")
        up = []
        while low != high:
            up.append(self.label[low])
            low = self.parent[low]
        return tuple(up) if orientation == "backward" else tuple(reversed(up))

    def root_string(self, v: int) -> Symbols:
        return self.path_string(self.root, v)

    def bfs_order(self) -> list[int]:
        """Breadth-first order, children by increasing symbol."""
        out = [self.root]
        for v in out:
            out.extend(self.kids[v])
        return out


@dataclass(frozen=True)
class AugmentedTrie:
    """A forward trie with ⊥ glued above its root by a ``$`` edge.

    ``trie`` is the augmented tree itself (root ⊥); original node ids are
    kept and ⊥ gets id ``n``.
    """

    base: ForwardTrie
    trie: ForwardTrie
    bot: int
    terminator: int = TERMINATOR

    @property
    def n(self) -> int:
        return len(self.base)

    @property
    def n_aug(self) -> int:
        return len(self.trie)

    @property
    def sigma(self) -> int:
        return self.base.sigma


def augment(t: ForwardTrie) -> AugmentedTrie:
    n = len(t)
    parent = t.parent + [-1]
    label = t.label + [-1]
    parent[t.root] = n
    label[t.root] = TERMINATOR
    aug = ForwardTrie(parent, label, t.sigma, allow_terminator=True)
    return AugmentedTrie(base=t, trie=aug, bot=n)


class BackwardView:
    """Edge-reversed reading of a trie: (u, a, v)_f  <->  (v, a, u)_b."""

    def __init__(self, trie: ForwardTrie):
        self.trie = trie

    def edges(self) -> list[tuple[int, int, int]]:
        return [(v, a, u) for u, v, a in self.trie.edges()]

    def des(self, v: int, j: int) -> int | None:
        """j-th descendant of v in the backward trie (= j-th ancestor forward)."""
        return self.trie.anc(v, j)

    def suffix(self, v: int) -> Symbols:
        """str_b(v, root)."""
        return self.trie.path_string(v, self.trie.root, "backward")


def from_edges(n: int, edges: Iterable[tuple[int, int, int]], sigma: int | None = None) -> ForwardTrie:
    parent = [-1] * n
    label = [-1] * n
    for p, c, a in edges:
        if not (0 <= p < n and 0 <= c < n):
            raise TrieError(f"edge ({p}, {c}) references a node outside [0, {n})")
        if c == 0:
            raise TrieError("node 0 is the root and cannot have a parent")
        if parent[c] != -1:
            raise TrieError(f"node {c} has two parents")
        parent[c] = p
        label[c] = a
    return ForwardTrie(parent, label, sigma)


def parse_trie(text: str | bytes) -> ForwardTrie:
    """Parse the ``TRIE v1`` text format (root is node 0)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise TrieError("empty input")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "TRIE" or head[1] != "v1":
        raise TrieError(f"bad header: {lines[0]!r}")
    try:
        n, sigma = int(head[2]), int(head[3])
    except ValueError:
        raise TrieError(f"bad header: {lines[0]!r}") from None
    if n < 1 or sigma < 0:
        raise TrieError("header needs n >= 1 and sigma >= 0")
    if len(lines) - 1 != n - 1:
        raise TrieError(f"expected {n - 1} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise TrieError(f"malformed edge line: {ln!r}")
        try:
            edges.append(tuple(int(x) for x in parts))
        except ValueError:
            raise TrieError(f"malformed edge line: {ln!r}") from None
    return from_edges(n, edges, sigma)


def format_trie(t: ForwardTrie) -> str:
    """Canonical TRIE v1 text; nodes are renumbered breadth-first."""
    order = t.bfs_order()
    rank = {v: i for i, v in enumerate(order)}
    out = [f"TRIE v1 {len(t)} {t.sigma}"]
    out += [f"{rank[t.parent[v]]} {rank[v]} {t.label[v]}" for v in order[1:]]
    return "\n".join(out) + "\n"


def canonical(t: ForwardTrie) -> ForwardTrie:
    """Renumber nodes breadth-first (root 0, siblings by symbol)."""
    order = t.bfs_order()
    rank = {v: i for i, v in enumerate(order)}
    parent = [rank[t.parent[v]] if v != t.root else -1 for v in order]
    label = [t.label[v] for v in order]
    return ForwardTrie(parent, label, t.sigma)


def trie_from_strings(words: Iterable[Sequence[int]], sigma: int | None = None) -> ForwardTrie:
    """Trie of a word set, numbered breadth-first."""
    parent = [-1]
    label = [-1]
    kids: list[dict[int, int]] = [{}]
    for w in words:
        v = 0
        for a in w:
            a = int(a)
            if a < 1:
                raise TrieError(f"symbol {a} is not a positive integer")
            nxt = kids[v].get(a)
            if nxt is None:
                nxt = len(parent)
                parent.append(v)
                label.append(a)
                kids.append({})
                kids[v][a] = nxt
            v = nxt
    return canonical(ForwardTrie(parent, label, sigma))


def ascii_charset(words: Iterable[str]) -> str:
    return "".join(sorted(set("".join(words))))


def encode_words(words: Sequence[str], charset: str) -> list[Symbols]:
    rank = {ch: i + 1 for i, ch in enumerate(charset)}
    try:
        return [tuple(rank[ch] for ch in w) for w in words]
    except KeyError as exc:
        raise TrieError(f"character {exc.args[0]!r} outside the charset") from None
