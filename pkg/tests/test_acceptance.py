"""Acceptance criteria, one test per criterion.

Each test prints a ``[criterion N] PASS|FAIL`` line straight to the terminal
(run with ``pytest tests/test_acceptance.py``; output is shown even without
``-s``).
"""

import random
import time
from contextlib import contextmanager
from itertools import permutations

import pytest

from conftest import C4, K2, K3, K4, STAR3
from oracles import connected_graphs
from linearwidth import cli
from linearwidth.boundary import check_submodularity, d
from linearwidth.generators import all_graphs, gnm, gnp
from linearwidth.graph_core import Graph, components, format_graph
from linearwidth.layouts import layout_to_pd, pd_width, verify_layout, verify_path_decomposition
from linearwidth.solvers import (
    PartialLayout,
    check_prune_lemma,
    is_k_extendable,
    lw_approx,
    lw_bruteforce,
    lw_closure_2n,
    lw_dp_2m,
    pw_exact,
)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def report(number, title):
        start = time.perf_counter()
        info = {}
        try:
            yield info
        except BaseException:
            with capsys.disabled():
                print(f"\n[criterion {number}] FAIL  {title}  ({time.perf_counter() - start:.1f}s)")
            raise
        with capsys.disabled():
            extra = "  ".join(f"{k}={v}" for k, v in info.items())
            print(f"\n[criterion {number}] PASS  {title}  ({time.perf_counter() - start:.1f}s)  {extra}")
    return report


def canonical(n, edges):
    return min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in permutations(range(n)))


@pytest.fixture(scope="module")
def small_corpus():
    """Every connected labelled graph with n <= 5, solved by all three engines."""
    brute_by_class = {}
    rows = []
    for n in range(1, 6):
        for edges in connected_graphs(n):
            g = Graph(n, edges)
            key = (n, canonical(n, edges))
            if key not in brute_by_class:
                brute_by_class[key] = lw_bruteforce(g, max_edges=None)
            rows.append((g, brute_by_class[key], lw_dp_2m(g), lw_closure_2n(g)))
    return rows


def random_instances(count=500):
    for i in range(count):
        n = 6 + i % 5
        p = (0.2, 0.5, 0.8)[(i // 5) % 3]
        yield i, gnp(n, p, seed=1000 + i)


@pytest.fixture(scope="module")
def random_corpus():
    return [(g, lw_dp_2m(g, max_edges=None), lw_closure_2n(g)) for _, g in random_instances()]


def test_1_exhaustive_oracle_equivalence(criterion, small_corpus):
    with criterion(1, "brute = dp2m = closure2n on all connected graphs n<=5") as info:
        for g, brute, dp, closure in small_corpus:
            assert brute.width == dp.width == closure.width, g.edges
            assert verify_layout(g, closure.certificate, closure.width).ok
        info["graphs"] = len(small_corpus)
        info["classes"] = len({id(row[1]) for row in small_corpus})


def test_2_randomized_oracle_equivalence(criterion, random_corpus):
    with criterion(2, "dp2m = closure2n on 500 seeded G(n,p), certificates verify") as info:
        for g, dp, closure in random_corpus:
            assert dp.width == closure.width, g.edges
            assert verify_layout(g, dp.certificate, dp.width).ok
            assert verify_layout(g, closure.certificate, closure.width).ok
        info["instances"] = len(random_corpus)
        info["max_m"] = max(g.m for g, _, _ in random_corpus)


def test_3_known_values(criterion):
    with criterion(3, "known linearwidth / pathwidth values") as info:
        assert lw_closure_2n(K2).width == 0 and lw_bruteforce(K2).width == 0
        assert pw_exact(K2).width == 1
        count = 0
        for n in range(1, 5):
            for g in all_graphs(n):
                small = all(c.graph.n <= 2 for c in components(g))
                assert (lw_closure_2n(g).width == 0) == small
                assert (lw_bruteforce(g).width == 0) == small
                count += 1
        for g, expected in [(K3, 2), (K4, 3), (STAR3, 1), (C4, 2)]:
            assert lw_bruteforce(g).width == expected
            assert lw_closure_2n(g).width == expected
        info["graphs_n<=4"] = count


def test_4_submodularity(criterion):
    with criterion(4, "submodularity of d: exhaustive n<=4, 10^4 random on G(8,0.5)") as info:
        exhaustive = 0
        for n in range(1, 5):
            for g in all_graphs(n):
                assert g.m <= 6
                for y in range(1 << g.m):
                    x = y
                    while True:
                        for e in range(g.m):
                            if not y >> e & 1:
                                assert check_submodularity(g, x, y, e)
                                exhaustive += 1
                        if x == 0:
                            break
                        x = (x - 1) & y
        rng = random.Random(2024)
        graphs = [g for g in (gnp(8, 0.5, s) for s in range(50)) if g.m >= 1]
        for _ in range(10_000):
            g = rng.choice(graphs)
            e = rng.randrange(g.m)
            y = rng.getrandbits(g.m) & ~(1 << e)
            x = y & rng.getrandbits(g.m)
            assert check_submodularity(g, x, y, e)
        info["exhaustive_triples"] = exhaustive
        info["random_triples"] = 10_000


def narrow_prefix(g, k, length, rng):
    """Random prefix built by appending only edges that keep every d <= k."""
    prefix, f = [], 0
    while len(prefix) < length:
        ok = [e for e in range(g.m) if not f >> e & 1 and d(g, f | 1 << e) <= k]
        if not ok:
            break
        e = rng.choice(ok)
        prefix.append(e)
        f |= 1 << e
    return PartialLayout(tuple(prefix))


def random_prune_config(rng):
    refuting = rng.random() < 0.5
    while True:
        n = rng.randint(2, 6)
        g = gnp(n, rng.choice((0.4, 0.6, 0.8)), rng.getrandbits(32))
        if g.m < 2:
            continue
        length = rng.randrange(g.m)
        if refuting:
            # prefix kept under the optimum: neither it nor its extension completes
            k = lw_closure_2n(g).width - 1
            if k < 0:
                continue
            sigma = narrow_prefix(g, k, length, rng)
        else:
            order = list(range(g.m))
            rng.shuffle(order)
            sigma = PartialLayout(tuple(order[:length]))
            k = sigma.width(g) + rng.choice((0, 1, 2))
        f = sigma.edges
        choices = [e for e in range(g.m) if not f >> e & 1 and d(g, f) >= d(g, f | 1 << e)]
        if choices:
            return g, sigma, rng.choice(choices), k


def test_5_pruning_lemma(criterion):
    with criterion(5, "pruning lemma on 10^3 random (g, sigma, e, k), n<=6") as info:
        rng = random.Random(77)
        extendable = 0
        for _ in range(1000):
            g, sigma, e, k = random_prune_config(rng)
            assert check_prune_lemma(g, sigma, e, k)
            extendable += is_k_extendable(g, sigma, k)
        info["extendable"] = extendable
        info["not_extendable"] = 1000 - extendable


def test_6_sandwich(criterion, small_corpus):
    with criterion(6, "pw <= lw <= pw+1, layout_to_pd width <= lw, approx - lw in {0,1}") as info:
        checked = 0
        for g, _, _, closure in small_corpus:
            lw = closure.width
            if lw < 1:
                continue
            pw = pw_exact(g).width
            assert pw <= lw <= pw + 1
            pd = layout_to_pd(g, closure.certificate)
            assert verify_path_decomposition(g, pd).ok
            assert pd_width(pd) <= lw
            assert lw_approx(g).width - lw in (0, 1)
            checked += 1
        info["graphs"] = checked


def test_7_state_bound(criterion, small_corpus, random_corpus):
    with criterion(7, "per-k memo entries <= 2^n on every solved instance") as info:
        solved = [(g, row[3]) for row in small_corpus for g in [row[0]]]
        solved += [(g, closure) for g, _, closure in random_corpus]
        worst = 0.0
        for g, res in solved:
            for entries in res.stats.per_k.values():
                assert entries <= 2 ** g.n
                worst = max(worst, entries / 2 ** g.n)
            assert res.stats.distinct_states <= 2 ** g.n
        info["instances"] = len(solved)
        info["max_fill"] = f"{worst:.3f}"


@pytest.mark.slow
def test_8_crossover(criterion, tmp_path, capsys):
    with criterion(8, "dense n=14 instance: closure2n < 60s, dp2m TIMEOUT at 60s") as info:
        g = gnm(14, 62, seed=1)
        assert g.m >= 60
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        (corpus / "dense_n14_m62.txt").write_text(format_graph(g))
        rows = cli.bench(corpus, ["closure2n", "dp2m"], 60.0, override=True)
        with capsys.disabled():
            print("\n" + cli.format_bench(rows, ["closure2n", "dp2m"]), end="")
        cells = rows[0]["cells"]
        assert cells["closure2n"]["status"] == "ok"
        assert cells["closure2n"]["time"] < 60.0
        assert cells["dp2m"]["status"] == "TIMEOUT"
        info["lw"] = cells["closure2n"]["width"]
        info["closure2n_s"] = cells["closure2n"]["time"]


def test_9_certificate_round_trip(criterion, tmp_path, capsys):
    with criterion(9, "verify accepts compute output at width, rejects at width-1") as info:
        rng = random.Random(9)
        for i in range(100):
            g = gnp(rng.randint(3, 12), rng.choice((0.2, 0.4, 0.6, 0.8)), seed=i)
            src = tmp_path / f"g{i}.txt"
            src.write_text(format_graph(g))
            assert cli.main(["compute", str(src)]) == 0
            doc = capsys.readouterr().out
            cert = tmp_path / f"r{i}.txt"
            cert.write_text(doc)
            width = int(next(ln for ln in doc.splitlines() if ln.startswith("# width: ")).split()[-1])
            assert cli.main(["verify", str(src), str(cert), str(width)]) == 0
            assert cli.main(["verify", str(src), str(cert), str(width - 1)]) == 1
            capsys.readouterr()
        info["instances"] = 100
