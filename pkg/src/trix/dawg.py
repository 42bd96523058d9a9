"""Linear-space implicit DAWG of a forward trie.

States are suffix-tree node ids of STree(T_b); the state for node V stands
for the DAWG class whose longest string is reverse(str(V)). The transition
on ``a`` is the W-link W_a(V): hard links are primary edges, soft links are
secondary edges. No DAWG edge is ever stored.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple

from .suffix_tree import QueryStats, SuffixTree
from .trie import TERMINATOR
from .wlinks import MicroMacro, soft_wlink_query


class Transition(NamedTuple):
    state: int
    kind: str  # "primary" | "secondary"


class ImplicitDawg:
    def __init__(self, st: SuffixTree, mm: MicroMacro):
        self.st = st
        self.mm = mm
        self.sigma = st.aug.sigma

    @property
    def source(self) -> int:
        return 0

    def state_count(self) -> int:
        return self.st.node_count

    def states(self) -> range:
        return range(self.st.node_count)

    def transition(self, state: int, a: int, stats: QueryStats | None = None) -> Transition | None:
        if not 0 <= state < self.st.node_count:
            raise IndexError(f"unknown state {state}")
        if not TERMINATOR <= a <= self.sigma:
            raise ValueError(f"symbol {a} outside [0..{self.sigma}]")
        ans = soft_wlink_query(self.mm, self.st, state, a, stats)
        if ans is None:
            return None
        return Transition(ans.target, "primary" if ans.hard else "secondary")

    def out_edges(self, state: int) -> dict[int, Transition]:
        out = {}
        for a in range(TERMINATOR, self.sigma + 1):
            tr = self.transition(state, a)
            if tr is not None:
                out[a] = tr
        return out

    def edge_count(self) -> int:
        """Counts edges by querying every (state, symbol); O(n·sigma) queries."""
        return sum(len(self.out_edges(s)) for s in self.states())

    def accepts_substring(self, pattern: Iterable[int]) -> bool:
        """Membership in Substr(T_f), by locating the reversed pattern."""
        pattern = list(pattern)
        for a in pattern:
            if not 1 <= a <= self.sigma:
                raise ValueError(f"symbol {a} outside [1..{self.sigma}]")
        return self.st.locate(tuple(reversed(pattern))) is not None

    def storage(self) -> dict[str, int]:
        """Stored link entries beyond the suffix tree itself."""
        counts = {"hard_links": sum(len(h) for h in self.st.hard)}
        counts.update(self.mm.storage())
        counts["total"] = counts["hard_links"] + counts["macro_links"] + counts["pa_entries"]
        return counts
