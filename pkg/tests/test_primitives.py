import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from strkit import (
    Text,
    build_pattern_automaton,
    build_rolling_hash,
    build_substring_trie,
    build_suffix_index,
    failure_function,
    hash_lcp,
    join_texts,
    lcp_range,
    text_from_str,
    text_to_str,
)
from _util import naive_borders, random_text

T = text_from_str

symbol_texts = st.lists(st.integers(1, 4), min_size=1, max_size=60).map(
    lambda syms: Text(tuple(syms), 4))


def test_text_roundtrip():
    t = T("banana")
    assert t.alphabet_size == 3
    assert t.key() == (2, 1, 3, 1, 3, 1)
    assert text_to_str(t, "abn") == "banana"
    assert t.at(1) == 2 and len(t) == 6


def test_text_validate_rejects_out_of_range():
    with pytest.raises(ValueError):
        Text((0, 1), 2).validate()
    with pytest.raises(ValueError):
        Text((3,), 2).validate()


# ---------------------------------------------------------------------------
# failure_function


@pytest.mark.parametrize("s, want", [
    ("abab", [0, 0, 1, 2]),
    ("aaa", [0, 1, 2]),
    ("ababc", [0, 0, 1, 2, 0]),
])
def test_failure_function_examples(s, want):
    assert list(failure_function(T(s))[1:]) == want


def test_failure_function_rejects_empty():
    with pytest.raises(ValueError, match="empty input"):
        failure_function(Text((), 2))


@settings(max_examples=150, deadline=None)
@given(symbol_texts)
def test_failure_function_matches_naive(t):
    got = list(failure_function(t))
    assert got == naive_borders(t)
    assert all(0 <= got[i] < i for i in range(1, len(t) + 1))


def test_failure_function_random_sweep():
    rng = random.Random(7)
    for _ in range(200):
        t = random_text(rng, 60, rng.randint(1, 4))
        assert list(failure_function(t)) == naive_borders(t)


# ---------------------------------------------------------------------------
# suffix index


def test_suffix_index_banana():
    idx = build_suffix_index([T("banana")])
    assert list(idx.su[1:]) == [6, 4, 2, 1, 5, 3]
    assert list(idx.lcp[1:]) == [1, 3, 0, 0, 2]


def test_suffix_index_single_char():
    idx = build_suffix_index([T("a")])
    assert list(idx.su[1:]) == [1]
    assert list(idx.lcp[1:]) == []


def test_suffix_index_ownership():
    idx = build_suffix_index([T("ab", "ab"), T("ba", "ab")])
    assert list(idx.owner[1:]) == [1, 1, 0, 2, 2]
    assert idx.text.key() == (1, 2, 3, 2, 1)  # separator id above the alphabet


def test_suffix_index_rejects_empty():
    with pytest.raises(ValueError):
        build_suffix_index([])


def _check_index(idx):
    n = len(idx)
    z = idx.text.key()
    starts = sorted(int(p) for p in idx.su[1:])
    assert starts == list(range(1, n + 1))  # a permutation
    for r in range(1, n):
        a = z[int(idx.su[r]) - 1:]
        b = z[int(idx.su[r + 1]) - 1:]
        assert a < b  # strict lexicographic order
        naive = 0
        while naive < min(len(a), len(b)) and a[naive] == b[naive]:
            naive += 1
        assert int(idx.lcp[r]) == naive
    for pos in range(1, n + 1):
        assert int(idx.su[int(idx.rank[pos])]) == pos


def test_suffix_index_random_multi():
    rng = random.Random(11)
    for _ in range(1000):
        texts = [random_text(rng, 10, rng.randint(1, 4))
                 for _ in range(rng.randint(1, 4))]
        _check_index(build_suffix_index(texts))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(1, 3), min_size=1, max_size=12),
                min_size=1, max_size=3))
def test_suffix_index_properties(raw):
    _check_index(build_suffix_index([Text(tuple(s), 3) for s in raw]))


# ---------------------------------------------------------------------------
# lcp_range


def test_lcp_range_examples():
    idx = build_suffix_index([T("banana")])
    assert lcp_range(idx, 1, 2) == 1
    assert lcp_range(idx, 1, 3) == 1
    for r in range(1, len(idx)):
        assert lcp_range(idx, r, r + 1) == int(idx.lcp[r])


def test_lcp_range_rejects_bad_order():
    idx = build_suffix_index([T("banana")])
    with pytest.raises(ValueError):
        lcp_range(idx, 3, 3)
    with pytest.raises(ValueError):
        lcp_range(idx, 4, 2)


def test_lcp_range_all_pairs_small():
    rng = random.Random(3)
    for _ in range(40):
        texts = [random_text(rng, 14, 3) for _ in range(rng.randint(1, 3))]
        idx = build_suffix_index(texts)
        n = len(idx)
        if n > 200:
            continue
        z = idx.text.key()
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                a = z[int(idx.su[i]) - 1:]
                b = z[int(idx.su[j]) - 1:]
                naive = 0
                while naive < min(len(a), len(b)) and a[naive] == b[naive]:
                    naive += 1
                assert lcp_range(idx, i, j) == naive


# ---------------------------------------------------------------------------
# rolling hash


@pytest.mark.parametrize("s, a, b, want", [
    ("abcabc", 1, 4, 3),
    ("abcabc", 1, 1, 6),
    ("ab", 1, 2, 0),
])
def test_hash_lcp_examples(s, a, b, want):
    assert hash_lcp(build_rolling_hash(T(s)), a, b) == want


def test_hash_lcp_agrees_with_direct():
    rng = random.Random(5)
    t = random_text(rng, 10_000, 3)
    h = build_rolling_hash(t)
    syms = t.key()
    n = len(t)
    for _ in range(10_000):
        a, b = rng.randint(1, n), rng.randint(1, n)
        want = 0
        while (a + want <= n and b + want <= n
               and syms[a - 1 + want] == syms[b - 1 + want]):
            want += 1
        assert hash_lcp(h, a, b) == want


def test_hash_prefix_recurrence():
    t = T("abacaba")
    h = build_rolling_hash(t)
    power = 1
    for i in range(1, len(t) + 1):
        assert h.h[i] == (power * t.at(i) + h.h[i - 1]) % h.modulus
        power = power * h.base % h.modulus


# ---------------------------------------------------------------------------
# substring trie


def _node_paths(trie):
    out = set()
    stack = [(0, ())]
    while stack:
        node, path = stack.pop()
        if path:
            out.add(path)
        for sym, child in trie.children[node].items():
            stack.append((child, path + (sym,)))
    return out


def test_trie_examples():
    tr = build_substring_trie(T("aab"), 2)
    assert _node_paths(tr) == {(1,), (1, 1), (1, 2), (2,)}
    tr = build_substring_trie(T("a"), 3)
    assert _node_paths(tr) == {(1,)}
    joined, _ = join_texts([T("ab", "ab"), T("ba", "ab")])
    tr = build_substring_trie(joined, 2)
    assert _node_paths(tr) == {(1,), (1, 2), (2,), (2, 1)}


def test_trie_node_count_bound():
    rng = random.Random(9)
    for _ in range(50):
        texts = [random_text(rng, 15, 3) for _ in range(rng.randint(1, 3))]
        joined, _ = join_texts(texts)
        limit = rng.randint(1, 5)
        tr = build_substring_trie(joined, limit)
        assert tr.node_count() <= len(joined) * limit + 1
        assert all(d <= limit for d in tr.depth)


# ---------------------------------------------------------------------------
# pattern automaton


def test_automaton_ending_sets_example():
    ac = build_pattern_automaton([], [T("a", "ab"), T("ab", "ab"), T("b", "ab")])
    by_spell = {ac.spelled(q): q for q in range(ac.n_states)}
    assert ac.ending[by_spell[(1,)]] == (1,)
    assert ac.ending[by_spell[(1, 2)]] == (2, 3)
    assert ac.ending[by_spell[(2,)]] == (3,)


def test_automaton_forbidden_example():
    ac = build_pattern_automaton([T("aa")], [])
    by_spell = {ac.spelled(q): q for q in range(ac.n_states)}
    assert ac.forbidden[by_spell[(1, 1)]]
    assert not ac.forbidden[by_spell[(1,)]]
    assert not ac.forbidden[0]


def test_automaton_forbidden_is_suffix_based():
    # "ab" does not end with the forbidden "a", so it is not forbidden even
    # though every path into it passes the forbidden state "a"
    ac = build_pattern_automaton([T("a", "ab")], [T("ab", "ab")])
    by_spell = {ac.spelled(q): q for q in range(ac.n_states)}
    assert ac.forbidden[by_spell[(1,)]]
    assert not ac.forbidden[by_spell[(1, 2)]]


def test_automaton_rejects_empty_pattern():
    with pytest.raises(ValueError, match="empty pattern"):
        build_pattern_automaton([Text((), 2)], [])


def test_automaton_scan_matches_naive_longest_suffix():
    rng = random.Random(21)
    for _ in range(100):
        m = rng.randint(1, 3)
        pats = [random_text(rng, 3, m) for _ in range(rng.randint(1, 4))]
        ac = build_pattern_automaton(pats[: len(pats) // 2],
                                     pats[len(pats) // 2:], m)
        spells = {ac.spelled(q) for q in range(ac.n_states)}
        text = random_text(rng, 25, m)
        syms = text.key()
        states = ac.scan(syms)
        for t, q in enumerate(states, start=1):
            expect = next(
                syms[t - ln: t]
                for ln in range(min(t, max(ac.depth)), -1, -1)
                if syms[t - ln: t] in spells)
            assert ac.spelled(q) == expect


def test_automaton_ending_sets_match_suffix_definition():
    rng = random.Random(22)
    for _ in range(100):
        m = rng.randint(1, 3)
        l2 = [random_text(rng, 3, m) for _ in range(rng.randint(1, 4))]
        ac = build_pattern_automaton([], l2, m)
        for q in range(ac.n_states):
            spell = ac.spelled(q)
            want = tuple(sorted(
                i for i, p in enumerate(l2, start=1)
                if len(p) <= len(spell) and spell[len(spell) - len(p):] == p.key()))
            assert ac.ending[q] == want


def test_failure_function_big_array_type():
    t = Text(np.ones(1000, dtype=np.int64), 1)
    p = failure_function(t)
    assert p[1000] == 999
