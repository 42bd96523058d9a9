import pytest

from trix.index import TrieIndex
from trix.trie import trie_from_strings

A, B = 1, 2


@pytest.fixture
def fx1():
    """Words {"ab", "b"}: 0 root, 1 = a, 2 = b, 3 = ab."""
    return trie_from_strings([(A, B), (B,)], 2)


@pytest.fixture
def fx1_index(fx1):
    return TrieIndex.build(fx1)
