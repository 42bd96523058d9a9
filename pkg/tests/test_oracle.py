import pytest
from hypothesis import given, settings, strategies as st

from trix import oracle
from trix.gen import gen_broom, gen_comb, gen_path_ab, gen_random, gen_subalpha_comb
from trix.trie import augment

S, A, B = 0, 1, 2


def brute_substrings(trie):
    out = set()
    for v in range(len(trie)):
        u = v
        while True:
            out.add(trie.path_string(u, v, "forward"))
            if u == trie.root:
                break
            u = trie.parent[u]
    return out


def random_aug(n, sigma, seed):
    return augment(gen_random(n, sigma, seed))


def test_fx1_backward_suffixes(fx1):
    suf = oracle.enumerate_strings(augment(fx1), "suffix", "backward")
    assert set(suf) == {(S,), (A, S), (B, A, S), (B, S)}
    assert len(suf) == 4


def test_comb_suffix_count():
    assert len(oracle.enumerate_strings(augment(gen_comb(4)), "suffix", "forward")) >= 20


def test_fx1_maximal_extensions(fx1):
    aug = augment(fx1)
    assert oracle.maximal_extensions(aug, (A,), "forward") == ((S, A), (A, B), (S, A, B))
    m = oracle.model(aug, "forward")
    x = m.mxml((B,))
    assert oracle.maximal_extensions(aug, x, "forward") == (x, x, x)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 40), st.integers(1, 4), st.integers(0, 10**6))
def test_substrings_match_brute_force_and_reversal(n, sigma, seed):
    aug = random_aug(n, sigma, seed)
    f = oracle.enumerate_strings(aug, "substr", "forward")
    b = oracle.enumerate_strings(aug, "substr", "backward")
    assert set(f) == brute_substrings(aug.trie)
    assert f == b.reversed()


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 40), st.integers(1, 4), st.integers(0, 10**6),
       st.sampled_from(["forward", "backward"]))
def test_mxml_composition_orders_agree(n, sigma, seed, orientation):
    m = oracle.model(random_aug(n, sigma, seed), orientation)
    for x in m.strings:
        assert m.r_mxml(m.l_mxml(x)) == m.l_mxml(m.r_mxml(x)) == m.mxml(x)
        assert m.maximal(m.mxml(x))


@pytest.mark.parametrize("orientation", ["forward", "backward"])
@pytest.mark.parametrize("seed", range(6))
def test_automata_are_sound(seed, orientation):
    aug = random_aug(30, 3, seed)
    subs = oracle.enumerate_strings(aug, "substr", orientation)
    trie = oracle.build_explicit(aug, "suffix-trie", orientation)
    assert trie.node_count == len(subs)
    dawg = oracle.build_explicit(aug, "dawg", orientation)
    # every substring is read from the source and lands in its own class
    for x in subs:
        node = ()
        for a in x:
            node = dawg.edges[(node, a)][0]
        assert x in dawg.members[node]
    if orientation == "forward":
        # backward classes may hold several strings of maximal length
        assert sum(dawg.primary.values()) == dawg.node_count - 1
    assert len({dawg.ends[x] for x in dawg.nodes}) == dawg.node_count
    stree = oracle.build_explicit(aug, "suffix-tree", orientation)
    assert stree.edge_count == stree.node_count - 1
    cdawg = oracle.build_explicit(aug, "cdawg", orientation)
    assert cdawg.node_count <= stree.node_count


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 40), st.integers(1, 5), st.integers(0, 10**6))
def test_cdawg_duality_and_tree_bounds(n, sigma, seed):
    r = oracle.measure(random_aug(n, sigma, seed))
    assert r["cdawg_f_nodes"] == r["cdawg_b_nodes"]
    assert r["sa_b_len"] == r["n_aug"] - 1
    if r["n_aug"] >= 3:
        assert r["stree_b_nodes"] <= 2 * r["n_aug"] - 3
        assert r["stree_b_edges"] <= 2 * r["n_aug"] - 4


def test_fx1_wlinks(fx1):
    stree = oracle.build_explicit(augment(fx1), "suffix-tree", "backward")
    assert oracle.wlink_oracle(stree, (), S) == ((S,), True)
    assert oracle.wlink_oracle(stree, (), A) == ((A, S), False)
    assert oracle.wlink_oracle(stree, (), B) == ((B,), True)
    assert oracle.wlink_oracle(stree, (B,), B) is None


def test_fx1_suffix_tree(fx1):
    stree = oracle.build_explicit(augment(fx1), "suffix-tree", "backward")
    assert set(stree.leaves()) == {(S,), (A, S), (B, A, S), (B, S)}
    assert set(stree.nodes) - set(stree.leaves()) == {(), (B,)}
    assert (stree.node_count, stree.edge_count) == (6, 5)


def test_family_counts():
    r = oracle.measure(augment(gen_broom(10, 4)))
    assert r["dawg_f_edges"] >= 4 * (10 - 4 - 2)
    # pre-augmentation count for a^(m-1) b
    plain = oracle.build_explicit(gen_path_ab(5), "suffix-tree", "backward")
    assert (plain.node_count, plain.edge_count) == (9, 8)
    stree_f = oracle.build_explicit(augment(gen_comb(4)), "suffix-tree", "forward")
    assert len(stree_f.leaves()) >= 20


@pytest.mark.parametrize("depth,n_aug,nodes,internal", [(2, 8, 10, 3), (3, 16, 24, 9), (4, 32, 54, 23)])
def test_subalpha_comb_cdawg_equals_stree(depth, n_aug, nodes, internal):
    aug = augment(gen_subalpha_comb(depth))
    cd = oracle.build_explicit(aug, "cdawg", "backward")
    stree = oracle.build_explicit(aug, "suffix-tree", "backward")
    assert aug.n_aug == n_aug
    assert (cd.node_count, cd.edge_count) == (stree.node_count, stree.edge_count) == (nodes, nodes - 1)
    sinks = [x for x in cd.nodes if not cd.out(x)]
    assert len(sinks) == n_aug - 1
    # internal nodes (source included): n̂ - 2·depth - 1, not n̂ - 2
    assert cd.node_count - len(sinks) == internal == n_aug - 2 * depth - 1


def test_limit(monkeypatch):
    monkeypatch.setenv("TRIX_LIMIT", "10")
    with pytest.raises(oracle.OracleLimitError):
        oracle.model(gen_random(11, 2, 0), "forward")
