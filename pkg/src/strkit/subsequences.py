"""Constrained common substrings and subsequences, shortest absent
substrings, and the De Bruijn superstring used as their length bound.

* ``lccs_constrained``: longest substring occurring at least ``a(i)`` times
  in at least ``f`` of the texts, by a two-pointer sweep over the suffix
  array of the separator-joined text with an RMQ over adjacent LCPs.
* ``max_weight_common_subsequence``: best-weight common (non-contiguous)
  subsequence of up to four strings, by generating equal-symbol position
  tuples in lexicographic order and querying a dominated-region max index.
* ``shortest_non_substring_*``: shortest string that is a substring of none
  of the texts, by a depth-limited window trie and, independently, by
  walking lexicographically adjacent truncated suffixes.
* ``de_bruijn_superstring``: shortest string containing every length-q
  string over the alphabet, via an Euler cycle on (q-1)-gram shifts.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import product
from typing import Sequence

from .primitives import (
    Text,
    build_substring_trie,
    build_suffix_index,
    join_texts,
    lcp_range,
)

_AGG1 = {
    "sum": (lambda x, y: x + y, 0),
    "product": (lambda x, y: x * y, 1),
    "max": (lambda x, y: x if x >= y else y, float("-inf")),
}
_AGG2 = {
    "sum": lambda vals: sum(vals),
    "product": lambda vals: _prod(vals),
    "max": max,
    "min": min,
}


def _prod(vals):
    out = 1
    for v in vals:
        out *= v
    return out


@dataclass(frozen=True)
class AggPair:
    """A registered pair of aggregate functions.

    ``agg1`` combines character weights into a string weight and must be
    non-decreasing with a known neutral element (sum, product, max);
    ``agg2`` combines one position weight per input string into a character
    weight (sum, product, max, min).
    """

    agg1: str = "sum"
    agg2: str = "min"

    def __post_init__(self):
        if self.agg1 not in _AGG1:
            raise ValueError(f"unknown agg1 {self.agg1!r}; options: {sorted(_AGG1)}")
        if self.agg2 not in _AGG2:
            raise ValueError(f"unknown agg2 {self.agg2!r}; options: {sorted(_AGG2)}")

    @property
    def neutral1(self):
        return _AGG1[self.agg1][1]

    def combine1(self, x, y):
        return _AGG1[self.agg1][0](x, y)

    def combine2(self, vals: Sequence[float]):
        return _AGG2[self.agg2](vals)


# ---------------------------------------------------------------------------
# Constrained longest common substring


def _validate_texts(texts: Sequence[Text]) -> int:
    if not texts:
        raise ValueError("empty input")
    for t in texts:
        if len(t) == 0:
            raise ValueError("empty text")
    return max(t.alphabet_size for t in texts)


def lccs_constrained(texts: Sequence[Text], thresholds: Sequence[int],
                     f: int) -> tuple[int, Text]:
    """Longest substring occurring at least ``thresholds[i]`` times in at
    least ``f`` texts; returns its length and one witness (empty at 0).

    Zero thresholds are satisfied by every string, so when ``f`` or more of
    them are zero any substring qualifies and the answer is simply the
    longest text. With exactly ``f - 1`` zeros and every other threshold 1,
    the longest text with a positive threshold already qualifies through
    itself; all remaining cases run the suffix-array sweep.
    """
    n_texts = len(texts)
    if len(thresholds) != n_texts:
        raise ValueError("one threshold per text required")
    if not 0 <= f <= n_texts:
        raise ValueError(f"f must be within 0..{n_texts}")
    if any(a < 0 for a in thresholds):
        raise ValueError("thresholds must be non-negative")
    m = _validate_texts(texts)
    zero_count = sum(1 for a in thresholds if a == 0)
    if zero_count >= f:
        best = max(texts, key=len)
        return len(best), Text(best.key(), m)
    if zero_count == f - 1 and all(a <= 1 for a in thresholds):
        best = max((t for t, a in zip(texts, thresholds) if a >= 1), key=len)
        return len(best), Text(best.key(), m)

    idx = build_suffix_index(texts)
    z = idx.text.key()
    n = len(idx)
    su, owner = idx.su, idx.owner
    # length of the suffix inside its own text (0 on separator positions)
    own_len = [0] * (n + 2)
    for pos in range(n, 0, -1):
        if owner[pos] > 0:
            contig = pos < n and owner[pos + 1] == owner[pos]
            own_len[pos] = own_len[pos + 1] + 1 if contig else 1

    a = list(thresholds)
    x = [0] * (n_texts + 1)
    nok = zero_count
    left = 1
    best_len = 0
    best_start = 0
    for right in range(1, n + 1):
        o = int(owner[int(su[right])])
        if o > 0:
            x[o] += 1
            if x[o] == a[o - 1]:
                nok += 1
        # Shrink from the left while the window stays feasible: drop
        # separator-led suffixes, over- and under-satisfied owners freely,
        # and exactly-satisfied owners only while nok stays above f.
        while nok >= f and left <= right:
            lo = int(owner[int(su[left])])
            if lo == 0:
                left += 1
            elif x[lo] != a[lo - 1]:
                x[lo] -= 1
                left += 1
            elif nok > f:
                x[lo] -= 1
                nok -= 1
                left += 1
            else:
                break
        if nok >= f and left <= right:
            if left == right:
                w = own_len[int(su[left])]
            else:
                w = lcp_range(idx, left, right)
            if w > best_len:
                best_len = w
                best_start = int(su[left])
    if best_len == 0:
        return 0, Text((), m)
    return best_len, Text(z[best_start - 1: best_start - 1 + best_len], m)


# ---------------------------------------------------------------------------
# Max-weight common subsequence


class RangeMaxIndex:
    """Dominated-region maximum over a fixed point set (1 to 3 dimensions).

    Nested prefix-max Fenwick layers over compressed coordinates. Every cell
    starts at the neutral value, and updates may only raise a point's value,
    which keeps prefix maxima consistent. Queries are strict: only points
    smaller in every coordinate contribute.
    """

    def __init__(self, points: Sequence[tuple[int, ...]], neutral) -> None:
        if points:
            dims = {len(p) for p in points}
            if len(dims) != 1:
                raise ValueError("points of mixed dimension")
            self.dim = dims.pop()
        else:
            self.dim = 1
        self.neutral = neutral
        self.coords = sorted({p[0] for p in points})
        size = len(self.coords)
        if self.dim == 1:
            self.cells: list = [(neutral, None)] * (size + 1)
        else:
            buckets: list[list[tuple[int, ...]]] = [[] for _ in range(size + 1)]
            for p in points:
                t = bisect_left(self.coords, p[0]) + 1
                while t <= size:
                    buckets[t].append(p[1:])
                    t += t & (-t)
            self.cells = [None] + [RangeMaxIndex(b, neutral) for b in buckets[1:]]

    def raise_point(self, point: tuple[int, ...], value, payload=None) -> None:
        size = len(self.coords)
        t = bisect_left(self.coords, point[0]) + 1
        if t > size or self.coords[t - 1] != point[0]:
            raise KeyError(f"point {point} was not preloaded")
        if self.dim == 1:
            while t <= size:
                if value > self.cells[t][0]:
                    self.cells[t] = (value, payload)
                t += t & (-t)
        else:
            while t <= size:
                self.cells[t].raise_point(point[1:], value, payload)
                t += t & (-t)

    def query_strict(self, bounds: tuple[int, ...]):
        """(max value, payload) over points strictly dominated by ``bounds``."""
        t = bisect_left(self.coords, bounds[0])
        best = (self.neutral, None)
        if self.dim == 1:
            while t > 0:
                if self.cells[t][0] > best[0]:
                    best = self.cells[t]
                t -= t & (-t)
        else:
            while t > 0:
                sub = self.cells[t].query_strict(bounds[1:])
                if sub[0] > best[0]:
                    best = sub
                t -= t & (-t)
        return best


def max_weight_common_subsequence(
    texts: Sequence[Text],
    weights: Sequence[Sequence[float]] | None = None,
    aggs: AggPair = AggPair("sum", "min"),
    tuple_cap: int = 10 ** 6,
) -> tuple[float, list[tuple[int, ...]]]:
    """Best-weight common subsequence of ``texts`` under the given aggregates.

    Position tuples with equal symbols are generated in lexicographic order,
    grouped by the first coordinate; a group's results enter the max index
    only once the group is complete, so queries see strictly smaller first
    coordinates. Returns the best weight and the realizing chain of matched
    position tuples (one position per text, strictly increasing along the
    chain); the chain is empty when no symbol is shared.
    """
    k = len(texts)
    if k < 2:
        raise ValueError("need at least two texts")
    if k > 4:
        raise ValueError("at most four texts supported")
    m = _validate_texts(texts)
    seqs = [t.key() for t in texts]
    if weights is None:
        weights = [[1] * len(s) for s in seqs]
    if len(weights) != k or any(len(w) != len(s) for w, s in zip(weights, seqs)):
        raise ValueError("one weight per text position required")
    if any(w < 0 for row in weights for w in row):
        raise ValueError("weights must be non-negative")

    pos_lists: list[dict[int, list[int]]] = []
    for s in seqs[1:]:
        d: dict[int, list[int]] = {}
        for pos, c in enumerate(s, start=1):
            d.setdefault(c, []).append(pos)
        pos_lists.append(d)

    def group_size(c: int) -> int:
        size = 1
        for d in pos_lists:
            size *= len(d.get(c, ()))
        return size

    total = sum(group_size(c) for c in seqs[0])
    if total > tuple_cap:
        raise ValueError("PMAX exceeded")
    neutral = aggs.neutral1
    if total == 0:
        return neutral, []

    points = set()
    for c in set(seqs[0]):
        lists = [d.get(c, ()) for d in pos_lists]
        if all(lists):
            points.update(product(*lists))
    index = RangeMaxIndex(sorted(points), neutral)

    tuples: list[tuple[int, ...]] = []
    wmax: list = []
    pred: list[int | None] = []
    best_tid = None
    for q1, c in enumerate(seqs[0], start=1):
        lists = [d.get(c, ()) for d in pos_lists]
        if not all(lists):
            continue
        group_start = len(tuples)
        for rest in product(*lists):
            tup = (q1,) + rest
            w = aggs.combine2([weights[0][q1 - 1]]
                              + [weights[i + 1][p - 1] for i, p in enumerate(rest)])
            below, below_tid = index.query_strict(rest)
            val = aggs.combine1(w, below)
            tuples.append(tup)
            wmax.append(val)
            pred.append(below_tid)
            tid = len(tuples) - 1
            if best_tid is None or val > wmax[best_tid]:
                best_tid = tid
        for tid in range(group_start, len(tuples)):
            index.raise_point(tuples[tid][1:], wmax[tid], tid)

    chain = []
    tid = best_tid
    while tid is not None:
        chain.append(tuples[tid])
        tid = pred[tid]
    chain.reverse()
    return wmax[best_tid], chain


# ---------------------------------------------------------------------------
# Shortest absent substring


def _depth_limit(m: int, n: int) -> int:
    # largest e with m^e <= n, plus one
    e = 0
    power = m
    while power <= n:
        e += 1
        power *= m
    return e + 1


def shortest_non_substring_trie(texts: Sequence[Text], alphabet_size: int) -> Text:
    """Shortest string over ``1..alphabet_size`` absent from every text;
    among those, the lexicographically smallest.

    Every length-limited window of the joined text goes into a trie; the
    shallowest node missing a child (scanning breadth-first, children in
    symbol order) spells the answer. The depth limit ``floor(log_M n) + 1``
    suffices because a text containing every string of that length would
    have to be longer than the joined text is.
    """
    if alphabet_size < 1:
        raise ValueError("alphabet must have at least one symbol")
    _validate_texts(texts)
    if alphabet_size == 1:
        length = 1 + max(len(t) for t in texts)
        return Text((1,) * length, 1)
    joined, _ = join_texts(texts, alphabet_size)
    limit = _depth_limit(alphabet_size, len(joined))
    trie = build_substring_trie(joined, limit)
    queue = [0]
    head = 0
    while head < len(queue):
        node = queue[head]
        head += 1
        children = trie.children[node]
        if trie.depth[node] <= limit - 1 and len(children) < alphabet_size:
            missing = next(c for c in range(1, alphabet_size + 1)
                           if c not in children)
            return Text(trie.path(node) + (missing,), alphabet_size)
        queue.extend(children[c] for c in sorted(children))
    raise RuntimeError("depth-limited trie had no missing edge")


def shortest_non_substring_lexicographic(texts: Sequence[Text],
                                         alphabet_size: int) -> Text:
    """Shortest absent string found by walking lexicographically adjacent
    truncated suffixes of the joined text.

    Any absent string falls strictly between two adjacent truncated suffixes
    (virtual all-below and all-above sentinels close the ends); per gap the
    shortest such string either swaps in a middle symbol right after the
    common prefix or extends one endpoint past its run of extremal symbols.
    Always matches the trie method's length; the witness may differ.
    """
    if alphabet_size < 1:
        raise ValueError("alphabet must have at least one symbol")
    _validate_texts(texts)
    m = alphabet_size
    if m == 1:
        length = 1 + max(len(t) for t in texts)
        return Text((1,) * length, 1)
    idx = build_suffix_index(texts, m)
    z = idx.text.key()
    n = len(idx)
    owner, rank = idx.owner, idx.rank
    own_len = [0] * (n + 2)
    for pos in range(n, 0, -1):
        if owner[pos] > 0:
            contig = pos < n and owner[pos + 1] == owner[pos]
            own_len[pos] = own_len[pos + 1] + 1 if contig else 1
    run_low = [0] * (n + 2)
    run_high = [0] * (n + 2)
    for pos in range(n, 0, -1):
        run_low[pos] = run_low[pos + 1] + 1 if z[pos - 1] == 1 else 0
        run_high[pos] = run_high[pos + 1] + 1 if z[pos - 1] == m else 0

    def full_lcp(pa: int, pb: int) -> int:
        ra, rb = int(rank[pa]), int(rank[pb])
        if ra > rb:
            ra, rb = rb, ra
        return lcp_range(idx, ra, rb)

    def compare(pa: int, pb: int) -> int:
        if pa == pb:
            return 0
        la, lb = own_len[pa], own_len[pb]
        l = min(full_lcp(pa, pb), la, lb)
        if l == la or l == lb:
            return (la > lb) - (la < lb)
        return -1 if z[pa - 1 + l] < z[pb - 1 + l] else 1

    positions = [pos for pos in range(1, n + 1) if owner[pos] > 0]
    positions.sort(key=cmp_to_key(compare))
    deduped: list[int] = []
    for pos in positions:
        if not deduped or compare(deduped[-1], pos) != 0:
            deduped.append(pos)

    def candidate(pf: int | None, pg: int | None) -> tuple[int, ...] | None:
        lf = own_len[pf] if pf is not None else 0
        lg = own_len[pg] if pg is not None else 0
        l = 0 if pf is None or pg is None else min(full_lcp(pf, pg), lf, lg)
        c1 = z[pf - 1 + l] if pf is not None and l < lf else 0
        c2 = z[pg - 1 + l] if pg is not None and l < lg else m + 1
        prefix = z[pf - 1: pf - 1 + l] if pf is not None else ()
        if c1 + 1 <= c2 - 1:
            return prefix + (c1 + 1,)
        options = []
        if c1 >= 1:
            # climb just above the lower endpoint: copy its run of maximal
            # symbols, then one symbol above whatever follows the run
            x = run_high[pf + l + 1] if l + 2 <= lf else 0
            follow = z[pf + l + x] if l + 2 + x <= lf else 0
            options.append(prefix + (c1,) + (m,) * x + (follow + 1,))
        if c2 <= m and pg is not None:
            # dip just below the upper endpoint: copy its run of minimal
            # symbols, then one symbol below whatever follows; impossible
            # when the endpoint ends inside that run
            x = run_low[pg + l + 1] if l + 2 <= lg else 0
            if l + 2 + x <= lg:
                options.append(prefix + (c2,) + (1,) * x + (1,))
        if not options:
            return None
        return min(options, key=lambda cand: (len(cand), cand))

    bounds: list[int | None] = [None] + deduped + [None]
    best: tuple[int, ...] | None = None
    for pf, pg in zip(bounds, bounds[1:]):
        cand = candidate(pf, pg)
        if cand is not None and (best is None or (len(cand), cand) < (len(best), best)):
            best = cand
    if best is None:
        raise RuntimeError("no gap produced a candidate")
    return Text(best, m)


# ---------------------------------------------------------------------------
# De Bruijn superstring


def de_bruijn_superstring(alphabet_size: int, q: int, cap: int = 10 ** 6) -> Text:
    """Shortest string containing every length-``q`` string over the
    alphabet, of length ``alphabet_size**q + q - 1``.

    Vertices are the (q-1)-grams; each symbol labels one outgoing shift edge
    per vertex, so in- and out-degrees all equal the alphabet size and an
    Euler cycle (Hierholzer, iterative) covers every q-gram exactly once.
    The cycle is cut at its first edge: the output spells that edge's head
    gram, the remaining edges in cycle order, and the cut edge last.
    """
    m = alphabet_size
    if m < 1 or q < 1:
        raise ValueError("alphabet size and order must be at least 1")
    length = m ** q + q - 1
    if length > cap:
        raise ValueError("size cap exceeded")
    v_count = m ** (q - 1)

    def step(v: int, c: int) -> int:
        return (v * m + (c - 1)) % v_count

    ptr = [0] * v_count
    stack: list[tuple[int, int]] = [(0, 0)]
    labels_rev: list[int] = []
    while stack:
        u, lab = stack[-1]
        if ptr[u] < m:
            ptr[u] += 1
            stack.append((step(u, ptr[u]), ptr[u]))
        else:
            stack.pop()
            if lab:
                labels_rev.append(lab)
    labels = labels_rev[::-1]
    head = step(0, labels[0])
    gram = tuple(head // m ** (q - 2 - t) % m + 1 for t in range(q - 1))
    return Text(gram + tuple(labels[1:]) + (labels[0],), m)
