"""Everything built over one trie, bundled for search and persistence."""
from __future__ import annotations

from dataclasses import dataclass

from .dawg import ImplicitDawg
from .suffix_tree import SuffixTree
from .trie import AugmentedTrie, ForwardTrie, augment
from .wlinks import MicroMacro, build_wlinks


def effective_sigma(aug: AugmentedTrie) -> int:
    """Distinct symbols on the augmented trie's edges, terminator included."""
    t = aug.trie
    return max(1, len({t.label[v] for v in range(len(t)) if v != t.root}))


@dataclass
class TrieIndex:
    aug: AugmentedTrie
    st: SuffixTree
    mm: MicroMacro
    charset: str | None = None

    @classmethod
    def build(cls, trie: ForwardTrie, charset: str | None = None) -> "TrieIndex":
        aug = augment(trie)
        st = SuffixTree.build(aug)
        mm = build_wlinks(st, effective_sigma(aug))
        return cls(aug, st, mm, charset)

    @property
    def trie(self) -> ForwardTrie:
        return self.aug.base

    @property
    def sigma(self) -> int:
        return self.aug.sigma

    @property
    def dawg(self) -> ImplicitDawg:
        return ImplicitDawg(self.st, self.mm)

    def encode(self, text: str) -> tuple[int, ...]:
        """Pattern text to symbols: characters via the charset, else integers."""
        if self.charset is not None:
            rank = {ch: i + 1 for i, ch in enumerate(self.charset)}
            try:
                return tuple(rank[ch] for ch in text)
            except KeyError as exc:
                raise ValueError(f"character {exc.args[0]!r} is not in the index alphabet") from None
        return tuple(int(tok) for tok in text.replace(",", " ").split())

    def encode_symbol(self, tok: str) -> int:
        if self.charset is not None:
            (a,) = self.encode(tok)
            return a
        return int(tok)
