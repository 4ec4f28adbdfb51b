"""Optimal string concatenations.

Two solvers share one state graph: a state ``(p, i, j)`` says that the
concatenation built from set ``p`` (1 or 2) currently overhangs the other
side by the suffix of its string ``i`` starting at offset ``j`` (offsets are
0-indexed here; ``j == len`` means the two sides have equal length). Each
edge appends one string from the trailing set to the shorter side, so a
shortest path from a zero-offset seed to a zero-overhang state is the
shortest string writable as a concatenation from both sets.

The third operation sorts strings under the ``x + y < y + x`` comparator to
produce the lexicographically smallest concatenation of all of them.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

from .primitives import Text, failure_function


@dataclass(eq=False)
class MatchTable:
    """Per (host set, host, guest): every offset where the guest may start.

    Offsets cover full matches inside the host (from a KMP scan) and partial
    matches running past the host's end (borders of the longest guest prefix
    matching the host's tail, the empty border included). ``offsets[(p, hi)]``
    is indexed by the guest's position in the opposite set.
    """

    offsets: dict[tuple[int, int], list[frozenset[int]]]


def _kmp_scan(host: tuple[int, ...], guest: tuple[int, ...],
              borders) -> tuple[list[int], int]:
    """End positions (1-indexed) of guest occurrences in host, plus the
    final automaton state (longest guest prefix matching host's tail)."""
    m = len(guest)
    st = 0
    ends = []
    for pos, c in enumerate(host, start=1):
        while st > 0 and (st == m or guest[st] != c):
            st = int(borders[st])
        if st < m and guest[st] == c:
            st += 1
        if st == m:
            ends.append(pos)
    return ends, st


def _guest_offsets(host: tuple[int, ...], guest: tuple[int, ...],
                   borders) -> frozenset[int]:
    ends, st = _kmp_scan(host, guest, borders)
    offs = {e - len(guest) for e in ends}
    while True:
        offs.add(len(host) - st)
        if st == 0:
            break
        st = int(borders[st])
    return frozenset(offs)


def build_match_table(a: Sequence[Text], b: Sequence[Text]) -> MatchTable:
    """Precompute all guest placement offsets for both host/guest directions."""
    sides = {1: [t.key() for t in a], 2: [t.key() for t in b]}
    for side in sides.values():
        for s in side:
            if not s:
                raise ValueError("empty string")
    borders = {p: [failure_function(Text(s, max(s))) for s in side]
               for p, side in sides.items()}
    offsets: dict[tuple[int, int], list[frozenset[int]]] = {}
    for p, hosts in sides.items():
        guests = sides[3 - p]
        gborders = borders[3 - p]
        for hi, host in enumerate(hosts):
            offsets[(p, hi)] = [
                _guest_offsets(host, guest, gborders[gi])
                for gi, guest in enumerate(guests)
            ]
    return MatchTable(offsets)


def _dedupe(texts: Sequence[Text]) -> list[Text]:
    seen = set()
    out = []
    for t in texts:
        k = t.key()
        if k not in seen:
            seen.add(k)
            out.append(t)
    return out


def _solve(a: Sequence[Text], b: Sequence[Text]):
    """Multi-source Dijkstra over the overhang-state graph.

    Returns the deduplicated sides, the distance map, and a predecessor map
    ``state -> (previous state, guest side, guest index)`` (None at seeds).
    """
    if not a or not b:
        raise ValueError("empty set")
    sides = {1: _dedupe(a), 2: _dedupe(b)}
    table = build_match_table(sides[1], sides[2])
    keys = {p: [t.key() for t in ts] for p, ts in sides.items()}
    dist: dict[tuple[int, int, int], int] = {}
    prev: dict[tuple[int, int, int], tuple | None] = {}
    heap: list[tuple[int, tuple[int, int, int]]] = []
    for p, ts in sides.items():
        for i in range(len(ts)):
            state = (p, i, 0)
            dist[state] = 0
            prev[state] = None
            heapq.heappush(heap, (0, state))
    while heap:
        d, state = heapq.heappop(heap)
        if d != dist[state]:
            continue  # superseded heap entry
        p, i, j = state
        host_len = len(keys[p][i])
        if j == host_len:
            continue  # zero overhang: terminal, no outgoing edges needed
        guest_offs = table.offsets[(p, i)]
        for gi, offs in enumerate(guest_offs):
            if j not in offs:
                continue
            glen = len(keys[3 - p][gi])
            if glen <= host_len - j:
                nxt = (p, i, j + glen)
                cost = glen
            else:
                nxt = (3 - p, gi, host_len - j)
                cost = host_len - j
            nd = d + cost
            if nd < dist.get(nxt, nd + 1):
                dist[nxt] = nd
                prev[nxt] = (state, 3 - p, gi)
                heapq.heappush(heap, (nd, nxt))
    return sides, dist, prev


def _trace_sides(state, prev, sides) -> tuple[list[Text], list[Text]]:
    """Strings appended to each side along the path into ``state``."""
    parts = {1: [], 2: []}
    cur = state
    while prev[cur] is not None:
        pstate, gset, gi = prev[cur]
        parts[gset].append(sides[gset][gi])
        cur = pstate
    p0, i0, _ = cur
    parts[p0].append(sides[p0][i0])
    return list(reversed(parts[1])), list(reversed(parts[2]))


def shortest_common_concat(a: Sequence[Text],
                           b: Sequence[Text]) -> tuple[int, Text] | None:
    """Shortest string that is a concatenation of strings from ``a`` and also
    of strings from ``b`` (repetition allowed), with one witness."""
    sides, dist, prev = _solve(a, b)
    keys = {p: [t.key() for t in ts] for p, ts in sides.items()}
    best_state = None
    best = None
    for p in (1, 2):
        for i, key in enumerate(keys[p]):
            state = (p, i, len(key))
            d = dist.get(state)
            if d is not None and (best is None or d < best):
                best = d
                best_state = state
    if best_state is None:
        return None
    side1, _ = _trace_sides(best_state, prev, sides)
    syms = tuple(x for t in side1 for x in t.key())
    m = max(t.alphabet_size for t in list(a) + list(b))
    return best, Text(syms, m)


def _pal_suffix_flags(key: tuple[int, ...]) -> list[bool]:
    n = len(key)
    return [key[j:] == key[j:][::-1] for j in range(n + 1)]


def shortest_palindrome_concat(a: Sequence[Text]) -> tuple[int, Text] | None:
    """Shortest palindrome writable as a concatenation of strings from ``a``.

    The second set holds the reversed strings; a state is accepting when the
    overhang suffix is itself a palindrome (length 0 and 1 included), giving
    a palindrome of total length 2 * shorter + overhang.
    """
    if not a:
        raise ValueError("empty set")
    rev = [Text(t.key()[::-1], t.alphabet_size) for t in a]
    sides, dist, prev = _solve(a, rev)
    pal = {p: [_pal_suffix_flags(t.key()) for t in ts]
           for p, ts in sides.items()}
    best = None
    best_state = None
    for (p, i, j), d in dist.items():
        if not pal[p][i][j]:
            continue
        total = 2 * d + (len(sides[p][i]) - j)
        if best is None or total < best:
            best = total
            best_state = (p, i, j)
    if best_state is None:
        return None
    side1, side2 = _trace_sides(best_state, prev, sides)
    left = tuple(x for t in side1 for x in t.key())
    right = tuple(x for t in side2 for x in t.key())[::-1]
    m = max(t.alphabet_size for t in a)
    return best, Text(left + right, m)


def min_lex_concat(strings: Sequence[Text]) -> Text:
    """Concatenation of all strings in the lexicographically smallest order.

    Sorting with the pairwise test ``x + y < y + x`` (ties broken shorter
    first) minimizes the full concatenation over every ordering.
    """
    if not strings:
        raise ValueError("empty input")
    keys = [t.key() for t in strings]

    def compare(x: tuple[int, ...], y: tuple[int, ...]) -> int:
        xy, yx = x + y, y + x
        if xy < yx:
            return -1
        if xy > yx:
            return 1
        return (len(x) > len(y)) - (len(x) < len(y))

    keys.sort(key=cmp_to_key(compare))
    syms = tuple(x for key in keys for x in key)
    return Text(syms, max(t.alphabet_size for t in strings))
