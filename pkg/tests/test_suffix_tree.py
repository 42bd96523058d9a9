import pytest
from hypothesis import given, settings, strategies as st

from trix import oracle
from trix.gen import gen_path_ab, gen_random
from trix.index import TrieIndex
from trix.suffix_tree import QueryStats, SuffixTree
from trix.trie import ForwardTrie, augment

S, A, B = 0, 1, 2


def build(n, sigma, seed):
    return SuffixTree.build(augment(gen_random(n, sigma, seed)))


def test_fx1_shape(fx1):
    t = SuffixTree.build(augment(fx1))
    assert t.node_count == 6 and t.edge_count == 5
    strings = {t.expand(u): u for u in range(6)}
    assert set(strings) == {(), (S,), (A, S), (B,), (B, S), (B, A, S)}
    assert t.sa == [0, 1, 2, 3]
    assert t.slink[strings[(B, A, S)]] == strings[(A, S)]
    assert t.slink[strings[(B,)]] == 0
    assert t.hard[0][B] == strings[(B,)]
    assert t.child_by_symbol(0, B) == strings[(B,)]
    assert t.child_by_symbol(strings[(A, S)], A) is None
    assert t.subtree_leaves(strings[(B,)]) == [2, 3]
    assert t.subtree_leaves(strings[(S,)]) == [0]
    assert t.subtree_leaves(0) == [0, 1, 2, 3]


def test_single_node_trie():
    t = SuffixTree.build(augment(ForwardTrie([-1], [-1], 0)))
    assert t.sa == [0]
    assert t.node_count == 2


def test_path_ab_augmented():
    # a^4 b plus the terminator: a branch for "$" hangs off the root
    t = SuffixTree.build(augment(gen_path_ab(5)))
    assert t.node_count == 10 <= 2 * 7 - 3


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 80), st.sampled_from([1, 2, 3, 8, 26]), st.integers(0, 10**6))
def test_matches_oracle(n, sigma, seed):
    aug = augment(gen_random(n, sigma, seed))
    t = SuffixTree.build(aug)
    ref = oracle.build_explicit(aug, "suffix-tree", "backward")
    strings = [t.expand(u) for u in range(t.node_count)]
    assert sorted(strings) == sorted(ref.nodes)
    par = ref.parent_of()
    assert all(strings[t.parent[u]] == par[strings[u]] for u in range(1, t.node_count))
    for u in range(1, t.node_count):
        assert strings[t.slink[u]] == strings[u][1:]
    hard = {(strings[v], a): strings[u] for v in range(t.node_count) for a, u in t.hard[v].items()}
    assert len(hard) == t.node_count - 1
    wl = oracle.WLinkOracle(ref)
    for v in ref.nodes:
        for a in range(sigma + 1):
            ans = wl.query(v, a)
            assert hard.get((v, a)) == (ans[0] if ans and ans[1] else None)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 120), st.sampled_from([2, 4, 30]), st.integers(0, 10**6))
def test_suffix_array_and_bounds(n, sigma, seed):
    aug = augment(gen_random(n, sigma, seed))
    t = SuffixTree.build(aug)
    assert len(t.sa) == aug.n_aug - 1
    suffixes = [aug.trie.path_string(v, aug.bot, "backward") for v in t.sa]
    assert all(x < y for x, y in zip(suffixes, suffixes[1:]))
    if aug.n_aug >= 3:
        assert t.node_count <= 2 * aug.n_aug - 3
        assert t.edge_count <= 2 * aug.n_aug - 4


@pytest.mark.parametrize("seed", range(4))
def test_child_lookup_vs_scan(seed):
    t = build(150, 12, seed)
    stats = QueryStats()
    for u in range(t.node_count):
        for c in range(13):
            scan = [k for k in t.kids[u] if t.char(k, t.depth[u]) == c]
            assert t.child_by_symbol(u, c, stats) == (scan[0] if scan else None)
    assert stats.comparisons > 0


def test_locate_and_step(fx1):
    t = SuffixTree.build(augment(fx1))
    assert t.locate(()) == (0, 0)
    node, m = t.locate((B, A))
    assert m == 2 and t.expand(node) == (B, A, S)
    assert t.locate((A, A)) is None
    assert t.step(0, 0, B) == t.locate((B,))


def test_dump_lists_every_node():
    idx = TrieIndex.build(gen_random(12, 3, 1))
    assert len(idx.st.dump().splitlines()) == idx.st.node_count
