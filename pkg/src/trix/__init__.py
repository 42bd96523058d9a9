"""Suffix tree of a backward trie with Weiner links, an implicit DAWG of the
forward trie, and bidirectional pattern search over trie paths."""

from .dawg import ImplicitDawg, Transition
from .index import TrieIndex
from .search import Cursor, cursor_new, extend_left, extend_right, find, occurrences
from .suffix_tree import SuffixTree
from .trie import ForwardTrie, augment, parse_trie, trie_from_strings

__version__ = "0.1.0"

__all__ = [
    "Cursor", "ForwardTrie", "ImplicitDawg", "SuffixTree", "Transition", "TrieIndex",
    "augment", "cursor_new", "extend_left", "extend_right", "find", "occurrences",
    "parse_trie", "trie_from_strings",
]
