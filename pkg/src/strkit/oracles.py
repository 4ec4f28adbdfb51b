"""Brute-force reference implementations.

Deliberately naive, obviously correct, and independent of the main
implementations: nothing here touches suffix arrays, failure trees,
automata, or the solvers, only the shared Text type. Every oracle caps its
input size with an explicit error instead of silently degrading.
"""
from __future__ import annotations

from itertools import permutations, product
from math import prod
from typing import Callable, Sequence

from .primitives import Text


def _syms(t: Text) -> tuple[int, ...]:
    return t.key()


def _occurrences(hay: tuple[int, ...], needle: tuple[int, ...]) -> int:
    # overlapping occurrences all count
    if not needle:
        raise ValueError("empty pattern")
    n, m = len(hay), len(needle)
    return sum(1 for i in range(n - m + 1) if hay[i: i + m] == needle)


def _contains(hay: tuple[int, ...], needle: tuple[int, ...]) -> bool:
    n, m = len(hay), len(needle)
    return any(hay[i: i + m] == needle for i in range(n - m + 1))


def oracle_lpq(s: Text, j: int, k: int) -> int:
    """Largest i <= k whose length-i prefix equals the substring ending at j."""
    n = len(s)
    if not 0 <= k <= j <= n:
        raise ValueError(f"need 0 <= k <= j <= {n}, got ({j}, {k})")
    syms = _syms(s)
    for i in range(k, -1, -1):
        if syms[:i] == syms[j - i: j]:
            return i
    return 0


def concat_closure(strings: Sequence[Text], max_len: int) -> set[tuple[int, ...]]:
    """All non-empty concatenations of the given strings up to max_len symbols."""
    base = [_syms(t) for t in strings if 0 < len(t) <= max_len]
    seen: set[tuple[int, ...]] = {()}
    stack: list[tuple[int, ...]] = [()]
    while stack:
        cur = stack.pop()
        for b in base:
            nxt = cur + b
            if len(nxt) <= max_len and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    seen.discard(())
    return seen


def oracle_shortest_common_concat(a: Sequence[Text], b: Sequence[Text],
                                  max_len: int = 12) -> tuple[int, Text] | None:
    """Shortest string writable as a concatenation from both sets, if any
    exists within max_len symbols; exact for answers <= max_len."""
    common = concat_closure(a, max_len) & concat_closure(b, max_len)
    if not common:
        return None
    best = min(common, key=lambda s: (len(s), s))
    m = max(t.alphabet_size for t in list(a) + list(b))
    return len(best), Text(best, m)


def oracle_min_lex(strings: Sequence[Text]) -> Text:
    """Lexicographic minimum over all orderings of the concatenation."""
    if not strings:
        raise ValueError("empty input")
    if len(strings) > 8:
        raise ValueError("too many strings for exhaustive permutations")
    parts = [_syms(t) for t in strings]
    best = min(sum(p, ()) for p in permutations(parts))
    return Text(best, max(t.alphabet_size for t in strings))


def oracle_lccs(texts: Sequence[Text], thresholds: Sequence[int], f: int) -> int:
    """Longest substring occurring at least thresholds[i] times in at least
    f of the texts, by enumerating every substring of every text."""
    n = len(texts)
    if len(thresholds) != n:
        raise ValueError("one threshold per text required")
    if not 0 <= f <= n:
        raise ValueError("f out of range")
    if sum(len(t) for t in texts) > 100:
        raise ValueError("input too large for the exhaustive oracle")
    seqs = [_syms(t) for t in texts]
    candidates: set[tuple[int, ...]] = set()
    for s in seqs:
        for i in range(len(s)):
            for j in range(i + 1, len(s) + 1):
                candidates.add(s[i:j])
    best = 0
    for cand in candidates:
        ok = sum(1 for s, a in zip(seqs, thresholds)
                 if _occurrences(s, cand) >= a)
        if ok >= f:
            best = max(best, len(cand))
    return best


def oracle_mwcs(texts: Sequence[Text], wp: Sequence[Sequence[float]],
                agg1: Callable, agg1_neutral, agg2: Callable):
    """Best aggregate weight of a common subsequence, by a dynamic program
    over the full position grid."""
    k = len(texts)
    if k < 2:
        raise ValueError("need at least two texts")
    lens = [len(t) for t in texts]
    if prod(lens) > 100_000:
        raise ValueError("input too large for the grid oracle")
    seqs = [_syms(t) for t in texts]
    shape = tuple(l + 1 for l in lens)
    best: dict[tuple[int, ...], float] = {}

    def get(p: tuple[int, ...]):
        if any(x == 0 for x in p):
            return agg1_neutral
        return best[p]

    for p in product(*(range(s) for s in shape)):
        if any(x == 0 for x in p):
            continue
        val = agg1_neutral
        syms = {seqs[i][p[i] - 1] for i in range(k)}
        if len(syms) == 1:
            w = agg2(*(wp[i][p[i] - 1] for i in range(k)))
            below = get(tuple(x - 1 for x in p))
            val = agg1(w, below)
        for i in range(k):
            q = p[: i] + (p[i] - 1,) + p[i + 1:]
            val = max(val, get(q))
        best[p] = val
    return get(tuple(lens))


def oracle_absent(texts: Sequence[Text], m: int, max_len: int = 12) -> Text:
    """First string, by (length, lex) order, absent from every text."""
    if m < 1:
        raise ValueError("alphabet must have at least one symbol")
    if m ** max_len > 10 ** 7:
        raise ValueError("cap exceeded")
    seqs = [_syms(t) for t in texts]
    for length in range(1, max_len + 1):
        for cand in product(range(1, m + 1), repeat=length):
            if not any(_contains(s, cand) for s in seqs):
                return Text(cand, m)
    raise ValueError("cap exceeded")


def oracle_count(spec, m: int) -> int:
    """Count strings per the occurrence spec by full enumeration."""
    lens = sorted(set(spec.slen))
    if lens and m ** max(lens) > 10 ** 6:
        raise ValueError("cap exceeded")
    forb = [_syms(t) for t in spec.forbidden]
    tracked = [( _syms(cp.pattern), frozenset(cp.occ))
               for cp in spec.counted if not cp.dont_care]
    total = 0
    for length in lens:
        for cand in product(range(1, m + 1), repeat=length):
            if any(_contains(cand, p) for p in forb):
                continue
            if all(_occurrences(cand, p) in occ for p, occ in tracked):
                total += 1
    return total


def oracle_max_weight(spec, m: int, agg: Callable, seed_value=0):
    """Best string weight per the occurrence spec by full enumeration.

    A string's weight folds agg over the weights of every pattern occurrence
    (don't-care patterns included), seeded with seed_value. Returns None when
    no string satisfies the constraints.
    """
    lens = sorted(set(spec.slen))
    if lens and m ** max(lens) > 10 ** 6:
        raise ValueError("cap exceeded")
    forb = [_syms(t) for t in spec.forbidden]
    pats = [(_syms(cp.pattern),
             0 if cp.weight is None else cp.weight,
             None if cp.dont_care else frozenset(cp.occ))
            for cp in spec.counted]
    best = None
    for length in lens:
        for cand in product(range(1, m + 1), repeat=length):
            if any(_contains(cand, p) for p in forb):
                continue
            weight = seed_value
            ok = True
            for p, w, occ in pats:
                cnt = _occurrences(cand, p)
                if occ is not None and cnt not in occ:
                    ok = False
                    break
                for _ in range(cnt):
                    weight = agg(weight, w)
            if ok and (best is None or weight > best):
                best = weight
    return best


def oracle_count_epsilon_dfa(dfa, slen: Sequence[int], m: int) -> int:
    """Count accepting runs by enumerating every string and every run.

    Cycle pruning is re-derived here independently: a symbol's non-absorbing
    edge is dropped when repeatedly following such edges from its source
    returns to the source within n_states steps.
    """
    n = dfa.n_states
    nxt: dict[tuple[int, int], int] = {}
    absorbing: dict[tuple[int, int], list[int]] = {}
    for e in dfa.edges:
        if e.absorbing:
            absorbing.setdefault((e.src, e.symbol), []).append(e.dst)
        else:
            if (e.src, e.symbol) in nxt:
                raise ValueError("two non-absorbing edges with one symbol")
            nxt[(e.src, e.symbol)] = e.dst
    pruned = {}
    for (q, c), v in nxt.items():
        u, cyclic = v, False
        for _ in range(n):
            if u == q:
                cyclic = True
                break
            w = nxt.get((u, c))
            if w is None:
                break
            u = w
        if not cyclic:
            pruned[(q, c)] = v

    def runs(state: int, word: tuple[int, ...]) -> int:
        if not word:
            return 1 if state in dfa.finals else 0
        c, rest = word[0], word[1:]
        total = 0
        u = state
        while True:
            for v in absorbing.get((u, c), ()):
                total += runs(v, rest)
            u2 = pruned.get((u, c))
            if u2 is None:
                break
            u = u2
        return total

    total = 0
    for length in sorted(set(slen)):
        for word in product(range(1, m + 1), repeat=length):
            total += runs(dfa.initial, word)
    return total
