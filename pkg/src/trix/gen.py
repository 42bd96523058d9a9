"""Deterministic trie families (worst cases for the size bounds) and random tries."""
from __future__ import annotations

import random

from .trie import ForwardTrie, from_edges

# symbol conventions used by the families
A, B, C = 1, 2, 3


def gen_broom(n: int, sigma: int) -> ForwardTrie:
    """An a-path of length n-sigma-1 ending in a node with sigma leaf children.

    Leaf edges use symbols 2..sigma+1, so the alphabet has sigma+1 symbols.
    """
    if sigma < 1 or n < sigma + 3:
        raise ValueError("broom needs sigma >= 1 and n >= sigma + 3")
    path = n - sigma - 1
    edges = [(i, i + 1, A) for i in range(path)]
    edges += [(path, path + 1 + i, 2 + i) for i in range(sigma)]
    return from_edges(n, edges, sigma + 1)


def gen_comb(k: int) -> ForwardTrie:
    """a^k path followed by a complete binary {b, c} tree with k leaves."""
    if k < 2 or k & (k - 1):
        raise ValueError("k must be a power of two >= 2")
    edges = [(i, i + 1, A) for i in range(k)]
    frontier = [k]
    nxt = k + 1
    while len(frontier) < k:
        level = []
        for v in frontier:
            for sym in (B, C):
                edges.append((v, nxt, sym))
                level.append(nxt)
                nxt += 1
        frontier = level
    return from_edges(nxt, edges, C)


def gen_path_ab(m: int) -> ForwardTrie:
    """Path of m+1 nodes whose backward (leaf-to-root) string is a^(m-1) b.

    Read root-to-leaf the path spells b a^(m-1).
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    edges = [(0, 1, B)] + [(i, i + 1, A) for i in range(1, m)]
    return from_edges(m + 1, edges, B)


def gen_subalpha_comb(depth: int) -> ForwardTrie:
    """Complete binary tree of the given depth; level d uses symbols {2d-1, 2d}."""
    if depth < 2:
        raise ValueError("depth must be at least 2")
    edges = []
    frontier = [0]
    nxt = 1
    for d in range(1, depth + 1):
        level = []
        for v in frontier:
            for sym in (2 * d - 1, 2 * d):
                edges.append((v, nxt, sym))
                level.append(nxt)
                nxt += 1
        frontier = level
    return from_edges(nxt, edges, 2 * depth)


def gen_random(n: int, sigma: int, seed: int) -> ForwardTrie:
    """Attach each new node below a uniformly chosen node with an unused symbol."""
    if n < 1 or sigma < 1:
        raise ValueError("need n >= 1 and sigma >= 1")
    rng = random.Random(seed)
    parent = [-1]
    label = [-1]
    used: list[set[int]] = [set()]
    open_nodes = [0]
    while len(parent) < n:
        v = rng.choice(open_nodes)
        free = [a for a in range(1, sigma + 1) if a not in used[v]]
        a = rng.choice(free)
        used[v].add(a)
        if len(used[v]) == sigma:
            open_nodes.remove(v)
        parent.append(v)
        label.append(a)
        used.append(set())
        open_nodes.append(len(parent) - 1)
    return ForwardTrie(parent, label, sigma)


FAMILIES = {
    "broom": (gen_broom, ("n", "sigma")),
    "comb": (gen_comb, ("k",)),
    "path_ab": (gen_path_ab, ("m",)),
    "subalpha_comb": (gen_subalpha_comb, ("depth",)),
    "random": (gen_random, ("n", "sigma", "seed")),
}
