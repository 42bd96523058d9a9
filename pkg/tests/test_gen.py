import pytest

from trix.gen import FAMILIES, gen_broom, gen_comb, gen_path_ab, gen_random, gen_subalpha_comb
from trix.trie import ForwardTrie


def path_length(t):
    return max(t.depth) - 1


def test_broom():
    t = gen_broom(10, 4)
    assert len(t) == 10
    assert len(t.leaves()) == 4 and path_length(t) == 5
    assert path_length(gen_broom(7, 4)) == 2
    with pytest.raises(ValueError):
        gen_broom(6, 4)


def test_comb():
    assert len(gen_comb(4)) == 11
    # n = (k+1) + (2k-1) - 1 = 3k - 1
    assert len(gen_comb(2)) == 5
    assert all(len(gen_comb(k)) == 3 * k - 1 for k in (2, 4, 8, 16))
    assert len(gen_comb(16).leaves()) == 16
    with pytest.raises(ValueError):
        gen_comb(6)


def test_path_ab():
    t = gen_path_ab(5)
    assert len(t) == 6
    leaf = t.leaves()[0]
    assert t.path_string(leaf, 0, "backward") == (1, 1, 1, 1, 2)
    assert t.path_string(1, 0, "backward") == (2,)
    assert t.path_string(gen_path_ab(2).leaves()[0], 0, "backward") == (1, 2)


def test_subalpha_comb():
    t = gen_subalpha_comb(2)
    assert len(t) == 7 and t.sigma == 4
    assert sorted({t.label[v] for v in range(1, 3)}) == [1, 2]
    assert len(gen_subalpha_comb(4)) == 31


def test_random():
    a = gen_random(50, 3, 9)
    assert (a.parent, a.label) == (gen_random(50, 3, 9).parent, gen_random(50, 3, 9).label)
    assert len(gen_random(1, 3, 0)) == 1
    for seed in range(20):
        t = gen_random(40, 2, seed)
        ForwardTrie(t.parent, t.label, t.sigma)  # re-validates invariants
        assert max(t.label) <= 2


def test_family_table():
    assert set(FAMILIES) == {"broom", "comb", "path_ab", "subalpha_comb", "random"}
