"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Every criterion is an exact (zero-mismatch) oracle-equivalence check at a
fixed seed, except the last, which pins wall-clock and memory budgets.

Criterion 1 covers every (i, j) prefix-equality pair per string through the
vectorized form of the interval test (the same arrays the public method
reads), checked against a direct character-comparison matrix; the public
pq/lpq/lpq_strided entry points are additionally exercised on every pair for
strings up to length 40 and on dense samples above that, where per-pair
Python calls would not fit the 30 s budget.
"""
import random
import resource
import time
from contextlib import contextmanager
from itertools import permutations

import numpy as np

from strkit import (
    AggPair,
    OccurrenceSpec,
    Text,
    build_failure_tree,
    build_suffix_index,
    count_constrained,
    count_epsilon_dfa,
    de_bruijn_superstring,
    failure_function,
    lccs_constrained,
    max_weight_common_subsequence,
    max_weight_string,
    min_lex_concat,
    shortest_common_concat,
    shortest_non_substring_lexicographic,
    shortest_non_substring_trie,
    shortest_palindrome_concat,
)
from strkit.oracles import (
    concat_closure,
    oracle_absent,
    oracle_count,
    oracle_count_epsilon_dfa,
    oracle_lccs,
    oracle_max_weight,
    oracle_mwcs,
    oracle_shortest_common_concat,
)
from _util import contains, count_occurrences, parses_as_concat, random_text
from test_counting import random_edfa, random_spec
from test_subsequences import _lcs_len


@contextmanager
def criterion(name: str, detail: str = ""):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL")
        raise
    print(f"ACCEPTANCE {name}: PASS {detail}".rstrip())


def test_c01_prefix_query_equivalence():
    with criterion("1 pq/lpq equivalence"):
        failure_function(Text((1, 2, 1), 2))  # warm the jitted kernel
        rng = random.Random(101)
        strides = (1, 2, 3, 8)
        started = time.perf_counter()
        for _ in range(1000):
            n = rng.randint(1, 300)
            m = rng.randint(1, 3)
            arr = np.array([rng.randint(1, m) for _ in range(n)],
                           dtype=np.int64)
            t = Text(arr, m)
            trees = {c: build_failure_tree(t, stride=c) for c in strides}
            tree = trees[1]

            # direct-comparison truth for every (i, j): the length-i prefix
            # equals the substring ending at j iff the common prefix of the
            # text and its suffix at j-i+1 reaches i symbols
            ml = np.zeros(n + 2, dtype=np.int64)
            for shift in range(1, n + 1):
                eq = arr[: n - shift + 1] == arr[shift - 1:]
                ml[shift] = (n - shift + 1) if eq.all() else int(np.argmin(eq))
            i_idx = np.arange(n + 1)[:, None]
            j_idx = np.arange(n + 1)[None, :]
            start = np.clip(j_idx - i_idx + 1, 0, n + 1)
            direct = ml[start] >= i_idx
            direct[0, :] = True
            dn = np.asarray(tree.dfs_num)
            dm = np.asarray(tree.dfs_max)
            interval = (dn[:, None] <= dn[None, :]) & (dm[:, None] >= dm[None, :])
            valid = i_idx <= j_idx
            assert bool((interval[valid] == direct[valid]).all())

            def oracle_row(j: int) -> np.ndarray:
                ids = np.arange(n + 1)
                col = np.where((ids <= j) & direct[:, j], ids, -1)
                return np.maximum.accumulate(col)

            if n <= 40:
                pairs = [(j, k) for j in range(n + 1) for k in range(j + 1)]
            else:
                pairs = [(j, rng.randint(0, j))
                         for j in (rng.randint(0, n) for _ in range(60))]
            rows: dict[int, np.ndarray] = {}
            for j, k in pairs:
                if j not in rows:
                    rows[j] = oracle_row(j)
                want = int(rows[j][k])
                assert tree.lpq(j, k) == want
                for c in strides:
                    assert trees[c].lpq_strided(j, k) == want
            for _ in range(25):
                j = rng.randint(0, n)
                i = rng.randint(0, j)
                assert tree.pq(i, j) == bool(direct[i, j])
        elapsed = time.perf_counter() - started
        assert elapsed < 30.0, f"took {elapsed:.1f}s"


def test_c02_shortest_common_concatenation():
    with criterion("2 shortest common concatenation"):
        rng = random.Random(202)
        for _ in range(300):
            a = [random_text(rng, 3, 2) for _ in range(rng.randint(1, 3))]
            b = [random_text(rng, 3, 2) for _ in range(rng.randint(1, 3))]
            want = oracle_shortest_common_concat(a, b, 12)
            got = shortest_common_concat(a, b)
            if want is None:
                assert got is None or got[0] > 12
            else:
                assert got is not None and got[0] == want[0]
            if got is not None and got[0] <= 12:
                length, witness = got
                syms = witness.key()
                assert len(syms) == length
                assert parses_as_concat(syms, [t.key() for t in a])
                assert parses_as_concat(syms, [t.key() for t in b])


def test_c03_palindrome_concatenation():
    with criterion("3 palindrome concatenation"):
        rng = random.Random(303)
        for _ in range(300):
            a = [random_text(rng, 3, 2) for _ in range(rng.randint(1, 3))]
            pals = [s for s in concat_closure(a, 12) if s == s[::-1]]
            want = min((len(s) for s in pals), default=None)
            got = shortest_palindrome_concat(a)
            if want is None:
                assert got is None or got[0] > 12
            else:
                assert got is not None and got[0] == want
                syms = got[1].key()
                assert syms == syms[::-1] and len(syms) == want
                assert parses_as_concat(syms, [t.key() for t in a])


def test_c04_min_lex_concatenation():
    with criterion("4 minimum lexicographic concatenation"):
        rng = random.Random(404)
        for _ in range(500):
            m = rng.randint(1, 2)
            texts = [random_text(rng, 4, m) for _ in range(rng.randint(1, 7))]
            keys = [t.key() for t in texts]
            want = min(sum(p, ()) for p in permutations(keys))
            assert min_lex_concat(texts).key() == want


def _lccs_instance(rng: random.Random, force: str | None):
    n = rng.randint(1, 4)
    m = rng.randint(1, 3)
    texts = [random_text(rng, 60 // n, m) for _ in range(n)]
    if force == "zeros-cover-f":
        f = rng.randint(0, n)
        zeros = rng.sample(range(n), rng.randint(f, n))
    elif force == "zeros-f-minus-1":
        f = rng.randint(1, n)
        zeros = rng.sample(range(n), f - 1)
    else:
        f = rng.randint(0, n)
        zeros = [i for i in range(n) if rng.random() < 0.3]
    thresholds = [0 if i in zeros else rng.randint(1, 3) for i in range(n)]
    return texts, thresholds, f


def test_c05_constrained_lccs():
    with criterion("5 constrained common substring"):
        rng = random.Random(505)
        branch_many_zeros = 0
        branch_f_minus_1 = 0
        plans = (["zeros-cover-f"] * 30 + ["zeros-f-minus-1"] * 30
                 + [None] * 440)
        for force in plans:
            texts, thresholds, f = _lccs_instance(rng, force)
            zeros = sum(1 for a in thresholds if a == 0)
            if zeros >= f:
                branch_many_zeros += 1
            if zeros == f - 1:
                branch_f_minus_1 += 1
            length, witness = lccs_constrained(texts, thresholds, f)
            assert length == oracle_lccs(texts, thresholds, f)
            if length:
                syms = witness.key()
                assert len(syms) == length
                good = sum(1 for t, a in zip(texts, thresholds)
                           if count_occurrences(t.key(), syms) >= a)
                assert good >= f
            else:
                assert len(witness) == 0
        assert branch_many_zeros >= 20
        assert branch_f_minus_1 >= 20


def test_c06_max_weight_common_subsequence():
    with criterion("6 max-weight common subsequence"):
        rng = random.Random(606)
        for _ in range(300):
            k = rng.choice((2, 3))
            texts = [random_text(rng, 8, rng.randint(1, 3)) for _ in range(k)]
            weight, chain = max_weight_common_subsequence(texts)
            assert weight == _lcs_len([t.key() for t in texts])
            assert len(chain) == weight
        for agg1, agg2 in (("sum", "min"), ("max", "sum")):
            aggs = AggPair(agg1, agg2)
            for _ in range(300):
                k = rng.choice((2, 3))
                texts = [random_text(rng, 8, rng.randint(1, 3))
                         for _ in range(k)]
                weights = [[rng.randint(0, 9) for _ in range(len(t))]
                           for t in texts]
                got, chain = max_weight_common_subsequence(texts, weights, aggs)
                want = oracle_mwcs(texts, weights, aggs.combine1,
                                   aggs.neutral1,
                                   lambda *vals: aggs.combine2(vals))
                assert got == want
                total = aggs.neutral1
                for tup in chain:
                    w = aggs.combine2([weights[i][tup[i] - 1]
                                       for i in range(k)])
                    total = aggs.combine1(w, total)
                if chain:
                    assert total == got


def test_c07_shortest_absent_substring():
    with criterion("7 shortest absent substring"):
        rng = random.Random(707)
        for _ in range(500):
            m = rng.randint(1, 3)
            n = rng.randint(1, 4)
            texts = [random_text(rng, 200 // n - 1, m) for _ in range(n)]
            want = oracle_absent(texts, m, max_len=205 if m == 1 else 12)
            via_trie = shortest_non_substring_trie(texts, m)
            via_lex = shortest_non_substring_lexicographic(texts, m)
            assert via_trie == want  # same length and lexicographically least
            assert len(via_lex) == len(want)
            for got in (via_trie, via_lex):
                assert not any(contains(t.key(), got.key()) for t in texts)
        for q in (1, 2, 3):
            s = de_bruijn_superstring(2, q)
            syms = s.key()
            assert len(syms) == 2 ** q + q - 1
            grams = {syms[i: i + q] for i in range(len(syms) - q + 1)}
            assert len(grams) == 2 ** q
            assert len(shortest_non_substring_trie([s], 2)) == q + 1


def test_c08_counting_dp():
    with criterion("8 occurrence-constrained counting"):
        rng = random.Random(808)
        for _ in range(500):
            m = rng.randint(1, 3)
            spec = random_spec(rng, m, weighted=False, max_len=10)
            assert count_constrained(spec, m) == oracle_count(spec, m)
        for m in (1, 2, 3):
            for length in range(0, 9):
                spec = OccurrenceSpec(slen=(length,))
                assert count_constrained(spec, m) == m ** length


def test_c09_epsilon_dfa_counting():
    with criterion("9 epsilon-DFA counting"):
        rng = random.Random(909)
        for _ in range(300):
            m = rng.randint(1, 2)
            dfa = random_edfa(rng, m)
            lens = sorted(rng.sample(range(0, 9), rng.randint(1, 2)))
            assert count_epsilon_dfa(dfa, lens, m) == \
                oracle_count_epsilon_dfa(dfa, lens, m)


def test_c10_max_weight_string():
    with criterion("10 max-weight string construction"):
        rng = random.Random(1010)
        add = lambda x, y: x + y
        for _ in range(300):
            m = rng.randint(1, 3)
            spec = random_spec(rng, m, weighted=True, max_len=10)
            want = oracle_max_weight(spec, m, add)
            got = max_weight_string(spec, m, agg="sum")
            if want is None:
                assert got is None
                continue
            assert got is not None
            weight, witness = got
            assert weight == want
            syms = witness.key()
            assert len(syms) in set(spec.slen)
            assert not any(contains(syms, p.key()) for p in spec.forbidden)
            rescored = 0
            for cp in spec.counted:
                cnt = count_occurrences(syms, cp.pattern.key())
                if not cp.dont_care:
                    assert cnt in cp.occ
                rescored += cnt * (0 if cp.weight is None else cp.weight)
            assert rescored == weight


def test_c11_performance_smoke():
    with criterion("11 indexing performance"):
        # warm the jitted kernels so compile time stays out of the budget
        failure_function(Text((1, 2, 1), 2))
        build_suffix_index([Text(np.array([1, 2, 1, 2], dtype=np.int64), 2)])
        rng = np.random.default_rng(1111)
        big = rng.integers(1, 5, size=10 ** 6).astype(np.int64)
        started = time.perf_counter()
        idx = build_suffix_index([Text(big, 4)])
        index_time = time.perf_counter() - started
        assert index_time < 10.0, f"suffix index took {index_time:.1f}s"
        peak_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        assert peak_kb < 1024 ** 2, f"peak memory {peak_kb / 1024:.0f} MiB"
        # inverse permutation and adjacent-lcp spot checks
        n = len(idx)
        check = np.random.default_rng(7).integers(1, n + 1, size=200)
        for pos in check:
            assert int(idx.su[int(idx.rank[pos])]) == int(pos)
        z = idx.text.symbols
        for r in np.random.default_rng(8).integers(1, n, size=50):
            a, b = int(idx.su[int(r)]) - 1, int(idx.su[int(r) + 1]) - 1
            lcp = int(idx.lcp[int(r)])
            assert np.array_equal(z[a: a + lcp], z[b: b + lcp])
            if max(a, b) + lcp < n:
                assert z[a + lcp] != z[b + lcp]

        huge = rng.integers(1, 5, size=10 ** 7).astype(np.int64)
        started = time.perf_counter()
        borders = failure_function(Text(huge, 4))
        failure_time = time.perf_counter() - started
        assert failure_time < 2.0, f"failure function took {failure_time:.1f}s"
        assert borders.shape == (10 ** 7 + 1,)
        print(f"  suffix index 1e6: {index_time:.2f}s, "
              f"failure 1e7: {failure_time:.2f}s, "
              f"peak {peak_kb / 1024:.0f} MiB")
