"""Versioned flat binary format for a built index.

All integers are little-endian. Layout (version 1)::

    magic "TRIX" | u16 version | u16 reserved
    trie:     u32 n, u32 sigma, n x (i32 parent, i32 label)
    charset:  u8 present, u32 byte length, UTF-8 bytes
    stree:    u32 count, count x (i32 parent, i32 depth, i32 ref, i32 leaf, i32 slink)
              then count x u32 leaf counts
    hard:     u32 entries, entries x (u32 node, u32 symbol, u32 target)
    micro:    u32 sigma, u32 roots, roots x u32
    pa:       u32 arrays, arrays x (u32 root, u32 symbol, u32 len, len x u32 rank)
    macro:    u32 entries, entries x (u32 root, u32 symbol, u32 target, u8 hard)

Entries are written in sorted order so equal indexes give equal bytes.
Loading rebuilds only the derived navigation tables; stored links are taken
as-is, so a corrupted file is caught by verification rather than repaired.
"""
from __future__ import annotations

import struct
from pathlib import Path

from .index import TrieIndex
from .suffix_tree import SuffixTree
from .trie import ForwardTrie, augment
from .wlinks import MicroMacro, WLinkAnswer

MAGIC = b"TRIX"
VERSION = 1


class BundleError(ValueError):
    pass


class _Writer:
    def __init__(self) -> None:
        self.parts: list[bytes] = []

    def put(self, fmt: str, *values: int) -> None:
        self.parts.append(struct.pack("<" + fmt, *values))

    def array(self, fmt: str, values: list[int]) -> None:
        self.parts.append(struct.pack(f"<{len(values)}{fmt}", *values))

    def getvalue(self) -> bytes:
        return b"".join(self.parts)


class _Reader:
    def __init__(self, data: bytes) -> None:
        self.data = data
        self.pos = 0

    def get(self, fmt: str) -> tuple:
        size = struct.calcsize("<" + fmt)
        if self.pos + size > len(self.data):
            raise BundleError("truncated index file")
        out = struct.unpack_from("<" + fmt, self.data, self.pos)
        self.pos += size
        return out

    def one(self, fmt: str = "I") -> int:
        return self.get(fmt)[0]

    def array(self, fmt: str, count: int) -> list[int]:
        return list(self.get(f"{count}{fmt}")) if count else []

    def raw(self, size: int) -> bytes:
        if self.pos + size > len(self.data):
            raise BundleError("truncated index file")
        out = self.data[self.pos:self.pos + size]
        self.pos += size
        return out


def dumps(index: TrieIndex) -> bytes:
    w = _Writer()
    w.parts.append(MAGIC)
    w.put("HH", VERSION, 0)

    base = index.trie
    w.put("II", len(base), base.sigma)
    for v in range(len(base)):
        w.put("ii", base.parent[v], base.label[v])

    cs = (index.charset or "").encode("utf-8")
    w.put("BI", index.charset is not None, len(cs))
    w.parts.append(cs)

    st = index.st
    w.put("I", st.node_count)
    for u in range(st.node_count):
        w.put("iiiii", st.parent[u], st.depth[u], st.ref[u], st.leaf[u], st.slink[u])
    w.array("I", [st.leaf_count(u) for u in range(st.node_count)])

    hard = [(v, a, u) for v in range(st.node_count) for a, u in sorted(st.hard[v].items())]
    w.put("I", len(hard))
    for entry in hard:
        w.put("III", *entry)

    mm = index.mm
    w.put("II", mm.sigma, len(mm.roots))
    w.array("I", mm.roots)
    pa = [(r, a, arr) for r in mm.roots for a, arr in sorted(mm.pa.get(r, {}).items())]
    w.put("I", len(pa))
    for r, a, arr in pa:
        w.put("III", r, a, len(arr))
        w.array("I", arr)
    macro = [(r, a, ans) for r in mm.roots for a, ans in sorted(mm.macro_links.get(r, {}).items())]
    w.put("I", len(macro))
    for r, a, ans in macro:
        w.put("IIIB", r, a, ans.target, ans.hard)
    return w.getvalue()


def _micro_from_roots(parent: list[int], roots: list[int], sigma: int) -> MicroMacro:
    cut = set(roots)
    n = len(parent)
    micro_of = [0] * n
    rank = [0] * n
    members: dict[int, list[int]] = {r: [] for r in roots}
    macro_parent = {}
    for v in range(n):
        if v in cut:
            micro_of[v] = v
            if v:
                macro_parent[v] = micro_of[parent[v]]
        else:
            micro_of[v] = micro_of[parent[v]]
        rank[v] = len(members[micro_of[v]])
        members[micro_of[v]].append(v)
    return MicroMacro(sigma, micro_of, rank, list(roots), members, macro_parent)


def loads(data: bytes) -> TrieIndex:
    r = _Reader(data)
    if r.raw(4) != MAGIC:
        raise BundleError("not a trix index file (bad magic)")
    version, _ = r.get("HH")
    if version != VERSION:
        raise BundleError(f"unsupported index version {version}")

    n, sigma = r.get("II")
    pl = r.get(f"{2 * n}i")
    try:
        base = ForwardTrie(list(pl[0::2]), list(pl[1::2]), sigma)
    except ValueError as exc:
        raise BundleError(f"bad trie section: {exc}") from None
    aug = augment(base)

    present, size = r.get("BI")
    charset = r.raw(size).decode("utf-8") if present else None

    count = r.one()
    if count < 1 or count > max(1, 2 * aug.n_aug - 1):
        raise BundleError(f"suffix tree has {count} nodes for a trie of {aug.n_aug} nodes")
    rows = r.get(f"{5 * count}i")
    parent, depth, ref, leaf, slink = (list(rows[k::5]) for k in range(5))
    leaf_counts = r.array("I", count)
    if sum(1 for x in leaf if x >= 0) != aug.n_aug - 1:
        raise BundleError("suffix tree leaf count does not match the trie")
    if any(not 0 <= x < aug.n_aug for x in ref) or any(not 0 <= x < count for x in slink[1:]):
        raise BundleError("suffix tree references out of range")

    hard: list[dict[int, int]] = [{} for _ in range(count)]
    for _ in range(r.one()):
        v, a, u = r.get("III")
        if not (v < count and u < count):
            raise BundleError("hard W-link references an unknown node")
        hard[v][a] = u
    if sum(len(h) for h in hard) != count - 1:
        raise BundleError("hard W-link count does not match the suffix tree")
    try:
        st = SuffixTree(aug, parent, depth, ref, leaf, slink, hard)
    except ValueError as exc:
        raise BundleError(f"bad suffix tree section: {exc}") from None
    if [st.leaf_count(u) for u in range(count)] != leaf_counts:
        raise BundleError("stored leaf counts disagree with the suffix tree")

    mm_sigma, n_roots = r.get("II")
    roots = r.array("I", n_roots)
    if not roots or roots[0] != 0 or roots != sorted(set(roots)) or roots[-1] >= count:
        raise BundleError("bad micro-tree roots")
    mm = _micro_from_roots(parent, roots, mm_sigma)
    mm.pa = {root: {} for root in roots}
    for _ in range(r.one()):
        root, a, size = r.get("III")
        arr = r.array("I", size)
        if root not in mm.members or any(x >= len(mm.members[root]) for x in arr):
            raise BundleError("P_a array references an unknown node")
        mm.pa[root][a] = arr
    mm.macro_links = {root: {} for root in roots}
    for _ in range(r.one()):
        root, a, target, is_hard = r.get("IIIB")
        if root not in mm.macro_links or target >= count:
            raise BundleError("macro W-link references an unknown node")
        mm.macro_links[root][a] = WLinkAnswer(target, bool(is_hard))
    if r.pos != len(data):
        raise BundleError("trailing bytes after index")
    return TrieIndex(aug, st, mm, charset)


def save(index: TrieIndex, path: str | Path) -> None:
    Path(path).write_bytes(dumps(index))


def load(path: str | Path) -> TrieIndex:
    return loads(Path(path).read_bytes())
