"""The ten acceptance criteria, each printing one PASS/FAIL line."""
import math
import random
import statistics
import time
from functools import lru_cache

import pytest

from trix import oracle
from trix.gen import gen_broom, gen_comb, gen_path_ab, gen_subalpha_comb
from trix.index import TrieIndex
from trix.search import cursor_new, extend_left, extend_right, occurrences
from trix.suffix_tree import QueryStats
from trix.trie import augment
from trix.verify import (
    Verifier, maximality_violations, occurrence_table, reversal_violations, seeded_trie,
    wlink_shape_violations,
)

SEEDS = range(100)
BROOMS = [(10, 4), (50, 24), (102, 50)]


@pytest.fixture
def report(capsys):
    """Print a PASS/FAIL line for the criterion, then assert it."""
    def _report(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail
    return _report


@lru_cache(maxsize=None)
def instance(seed: int) -> Verifier:
    return Verifier(TrieIndex.build(seeded_trie(seed)))


def all_instances():
    return [instance(s) for s in SEEDS]


def test_c01_broom_dawg_edges(report):
    rows, ok = [], True
    for n, sigma in BROOMS:
        t0 = time.perf_counter()
        edges = oracle.build_explicit(augment(gen_broom(n, sigma)), "dawg", "forward").edge_count
        secs = time.perf_counter() - t0
        bound = sigma * (n - sigma - 2)
        ok &= edges >= bound and secs < 1.0
        rows.append(f"({n},{sigma}) {edges}>={bound} in {secs:.2f}s")
    report(1, ok, "broom DAWG(T_f) edges " + "; ".join(rows))


def test_c02_implicit_dawg_space(report):
    t0 = time.perf_counter()
    rows, ok, ratios = [], True, []
    for n, sigma in BROOMS:
        idx = TrieIndex.build(gen_broom(n, sigma))
        stored = idx.dawg.storage()["total"]
        edges = oracle.build_explicit(idx.aug, "dawg", "forward").edge_count
        ok &= stored <= 8 * idx.aug.n_aug
        ratios.append(edges / idx.aug.n_aug)
        rows.append(f"n={n} stored {stored}<=8n̂={8 * idx.aug.n_aug}, oracle edges {edges}")
    # oracle edges per node grow linearly, i.e. the edge count is quadratic
    ok &= all(b > 1.8 * a for a, b in zip(ratios, ratios[1:]))
    secs = time.perf_counter() - t0
    ok &= secs < 1.0
    report(2, ok, "; ".join(rows) + f" ({secs:.2f}s)")


def test_c03_transition_equivalence(report):
    t0 = time.perf_counter()
    bad = [s for s in SEEDS if not instance(s).check_dawg().ok]
    secs = time.perf_counter() - t0
    report(3, not bad and secs < 30.0,
           f"implicit DAWG vs oracle on {len(SEEDS)} tries: {len(bad)} mismatching, {secs:.1f}s")


def test_c04_wlink_sweep(report):
    bad = [s for s in SEEDS if not instance(s).check_wlink_sweep().ok]
    pairs = sum(v.index.st.node_count * (v.aug.sigma + 1) for v in all_instances())
    report(4, not bad, f"{pairs} (node, symbol) queries on {len(SEEDS)} tries, {len(bad)} tries mismatching")


def test_c05_suffix_tree_bounds(report):
    over = []
    for v in all_instances():
        n_aug, st = v.aug.n_aug, v.index.st
        if n_aug >= 3 and (st.node_count > 2 * n_aug - 3 or st.edge_count > 2 * n_aug - 4):
            over.append(n_aug)
    exact = []
    for m in (5, 50):
        t = oracle.build_explicit(gen_path_ab(m), "suffix-tree", "backward")
        exact.append((t.node_count, t.edge_count) == (2 * m - 1, 2 * m - 2))
    report(5, not over and all(exact),
           f"{len(over)} bound violations; a^(m-1)b exact for m=5,50: {exact}")


def test_c06_suffix_array(report):
    bad = 0
    for v in all_instances():
        aug, sa = v.aug, v.index.st.sa
        suffixes = [aug.trie.path_string(x, aug.bot, "backward") for x in sa]
        if len(sa) != aug.n_aug - 1 or any(a >= b for a, b in zip(suffixes, suffixes[1:])):
            bad += 1
    report(6, bad == 0, f"length n̂-1 and strictly increasing on {len(SEEDS)} tries, {bad} bad")


def test_c07_comb(report):
    rows, ok = [], True
    for k in (4, 8, 16):
        aug = augment(gen_comb(k))
        suffixes = len(oracle.enumerate_strings(aug, "suffix", "forward"))
        leaves = len(oracle.build_explicit(aug, "suffix-tree", "forward").leaves())
        ok &= suffixes >= k * (k + 1) and leaves >= k * (k + 1)
        rows.append(f"k={k}: {suffixes} suffixes, {leaves} leaves >= {k * (k + 1)}")
    report(7, ok, "; ".join(rows))


def test_c08_cdawg_duality(report):
    unequal = [
        s for s, v in zip(SEEDS, all_instances())
        if oracle.build_explicit(v.aug, "cdawg", "forward").node_count
        != oracle.build_explicit(v.aug, "cdawg", "backward").node_count
    ]
    rows, ok = [], not unequal
    for d in (2, 3, 4):
        aug = augment(gen_subalpha_comb(d))
        cd = oracle.build_explicit(aug, "cdawg", "backward")
        st = oracle.build_explicit(aug, "suffix-tree", "backward")
        same = (cd.node_count, cd.edge_count) == (st.node_count, st.edge_count)
        ok &= same
        rows.append(f"d={d}: {cd.node_count}/{cd.edge_count} vs {st.node_count}/{st.edge_count}")
    report(8, ok, f"{len(unequal)} tries with |CDAWG_f| != |CDAWG_b|; sub-alphabet comb "
           + "; ".join(rows))


def _random_scripts(v: Verifier, count: int, rng: random.Random):
    """Scripts that mostly stay inside Substr(T_f), with occasional misses."""
    table = occurrence_table(v.aug.base)
    sigma = max(1, v.aug.sigma)
    for _ in range(count):
        p, ops = (), []
        for _ in range(rng.randint(1, 12)):
            op = rng.choice("LR")
            grow = [a for a in range(1, sigma + 1) if ((a,) + p if op == "L" else p + (a,)) in table]
            a = rng.choice(grow) if grow and rng.random() < 0.85 else rng.randint(1, sigma)
            ops.append((op, a))
            p = (a,) + p if op == "L" else p + (a,)
            if p not in table:
                break
        yield ops, table


def test_c09_bidirectional_search(report):
    rng = random.Random(9)
    scripts = steps = bad = 0
    for seed in SEEDS[:50]:
        v = instance(seed)
        for ops, table in _random_scripts(v, 200, rng):
            scripts += 1
            c, p = cursor_new(v.index), ()
            for op, a in ops:
                q = (a,) + p if op == "L" else p + (a,)
                c = (extend_left if op == "L" else extend_right)(v.index, c, a)
                steps += 1
                if (c is None) != (q not in table):
                    bad += 1
                    break
                if c is None:
                    break
                p = q
                if set(occurrences(v.index, c)) != table[p]:
                    bad += 1
    xs, worst, mean = [], [], []
    for n in (102, 202, 402):
        idx = TrieIndex.build(gen_broom(n, n // 2))
        stats, per_step = QueryStats(), []
        for ops, _ in _random_scripts(Verifier(idx), 400, random.Random(n)):
            c = cursor_new(idx)
            for op, a in ops:
                before = stats.comparisons
                c = (extend_left if op == "L" else extend_right)(idx, c, a, stats)
                per_step.append(stats.comparisons - before)
                if c is None:
                    break
        xs.append(math.log2(idx.aug.sigma + 1))
        worst.append(max(per_step))
        mean.append(statistics.fmean(per_step))
    fit = statistics.linear_regression(xs, worst)
    ok = scripts >= 10_000 and bad == 0 and fit.slope <= 4
    report(9, ok, f"{scripts} scripts / {steps} steps, {bad} mismatches; worst comparisons per "
           f"extension {worst} (mean {[round(m, 2) for m in mean]}) fit slope {fit.slope:.2f} <= 4")


def test_c10_structure(report):
    counts = [0, 0, 0]
    for v in all_instances():
        counts[0] += len(reversal_violations(v.aug))
        counts[1] += len(maximality_violations(v.aug))
        counts[2] += len(wlink_shape_violations(v.ostree, v.aug.sigma))
    report(10, counts == [0, 0, 0],
           f"violations: reversal {counts[0]}, maximality {counts[1]}, W-link shape {counts[2]} on {len(SEEDS)} tries")
