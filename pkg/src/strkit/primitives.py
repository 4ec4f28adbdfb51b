"""Shared string data structures.

Failure function, suffix array with LCP and range-minimum support, rolling
hash, substring trie, and a totalized multi-pattern matching automaton.

Conventions used across the package:

* symbols are positive integers ``1..M`` (``M`` = alphabet size),
* positions and ranks are 1-indexed in every public signature,
* 1-indexed sequences are stored padded, with a dummy entry at index 0,
  so stored values line up with the positions they describe.

Symbol id 0 is reserved as "below every symbol" and ids above ``M`` act as
"above every symbol"; joined multi-texts use ids ``M+1, M+2, ...`` as
pairwise-distinct separators.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

try:
    from numba import njit as _njit
except ImportError:  # pragma: no cover - numba is an optional accelerator
    _njit = None


def _jit(fn):
    """Compile ``fn`` with numba when available, else keep the Python version."""
    if _njit is None:
        return fn
    return _njit(cache=True)(fn)


LATIN = "abcdefghijklmnopqrstuvwxyz"

# Defaults for the polynomial rolling hash: a Mersenne prime modulus and a
# prime base, both overridable per build.
HASH_BASE = 1_000_000_007
HASH_MOD = (1 << 61) - 1


# ---------------------------------------------------------------------------
# Texts


@dataclass(eq=False)
class Text:
    """A sequence of symbol ids over the alphabet ``1..alphabet_size``.

    ``symbols`` may be any integer sequence (tuple, list, or numpy array);
    large inputs are typically numpy arrays. Joined multi-texts additionally
    contain separator ids above ``alphabet_size``.
    """

    symbols: Sequence[int]
    alphabet_size: int

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Text):
            return NotImplemented
        return (self.alphabet_size == other.alphabet_size
                and self.key() == other.key())

    def at(self, i: int) -> int:
        """Symbol at 1-indexed position ``i``."""
        return int(self.symbols[i - 1])

    def key(self) -> tuple[int, ...]:
        return tuple(int(s) for s in self.symbols)

    def as_array(self) -> np.ndarray:
        return np.ascontiguousarray(self.symbols, dtype=np.int64)

    def validate(self) -> None:
        if len(self.symbols) == 0:
            return
        arr = self.as_array()
        lo, hi = int(arr.min()), int(arr.max())
        if lo < 1 or hi > self.alphabet_size:
            raise ValueError(
                f"symbol out of range: alphabet is 1..{self.alphabet_size}, "
                f"saw {lo if lo < 1 else hi}")


def text_from_str(s: str, alphabet: str | None = None) -> Text:
    """Map a character string to a Text.

    ``alphabet`` lists characters in increasing symbol order; by default the
    distinct characters of ``s`` are used in sorted order, which preserves
    lexicographic comparisons.
    """
    if alphabet is None:
        alphabet = "".join(sorted(set(s)))
    table = {ch: i + 1 for i, ch in enumerate(alphabet)}
    if len(table) != len(alphabet):
        raise ValueError("alphabet contains duplicate characters")
    try:
        syms = tuple(table[ch] for ch in s)
    except KeyError as exc:
        raise ValueError(f"character {exc.args[0]!r} not in alphabet") from None
    return Text(syms, len(alphabet))


def text_to_str(t: Text, alphabet: str | None = None) -> str:
    """Render a Text with one character per symbol id (default ``a, b, ...``)."""
    if alphabet is None:
        alphabet = LATIN
    out = []
    for s in t.symbols:
        s = int(s)
        if not 1 <= s <= len(alphabet):
            raise ValueError(f"symbol {s} has no character in the alphabet")
        out.append(alphabet[s - 1])
    return "".join(out)


def join_texts(texts: Sequence[Text],
               alphabet_size: int | None = None) -> tuple[Text, np.ndarray]:
    """Concatenate texts with pairwise-distinct separator symbols.

    Separators get ids ``M+1, M+2, ...`` above the shared alphabet, one per
    join position. Returns the joined text plus a padded owner array mapping
    each 1-indexed position to the owning text (1-based) or 0 for separators.
    """
    if not texts:
        raise ValueError("empty input")
    base = max(t.alphabet_size for t in texts)
    if alphabet_size is not None:
        if alphabet_size < base:
            raise ValueError("alphabet_size smaller than a text symbol")
        base = alphabet_size
    arrays: list[np.ndarray] = []
    owners: list[np.ndarray] = [np.zeros(1, dtype=np.int64)]  # index-0 pad
    for i, t in enumerate(texts, start=1):
        if i > 1:
            arrays.append(np.array([base + i - 1], dtype=np.int64))
            owners.append(np.zeros(1, dtype=np.int64))
        arr = t.as_array()
        arrays.append(arr)
        owners.append(np.full(arr.size, i, dtype=np.int64))
    syms = np.concatenate(arrays)
    if syms.size == 0:
        raise ValueError("empty input")
    return Text(syms, base), np.concatenate(owners)


# ---------------------------------------------------------------------------
# Failure function


def _failure_kernel(arr):
    n = arr.shape[0]
    p = np.zeros(n + 1, dtype=np.int64)
    k = 0
    for i in range(2, n + 1):
        c = arr[i - 1]
        while k > 0 and arr[k] != c:
            k = p[k]
        if arr[k] == c:
            k += 1
        p[i] = k
    return p


_failure_kernel = _jit(_failure_kernel)


def failure_function(s: Text) -> np.ndarray:
    """Border lengths of every prefix (the KMP preprocessing table).

    Returns a padded int64 array ``p`` of length ``n + 1`` where ``p[i]`` is
    the length of the longest proper border of the length-``i`` prefix and
    ``p[0]`` is a filler zero. ``0 <= p[i] < i`` holds for all ``i >= 1``.
    """
    if len(s) == 0:
        raise ValueError("empty input")
    return _failure_kernel(s.as_array())


# ---------------------------------------------------------------------------
# Suffix index


def _suffix_order(arr: np.ndarray) -> np.ndarray:
    """Sort all suffixes by prefix doubling; returns 0-indexed start order."""
    n = arr.size
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    order = np.argsort(arr, kind="stable")
    sorted_vals = arr[order]
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.concatenate(
        ([0], np.cumsum(sorted_vals[1:] != sorted_vals[:-1])))
    tmp = np.empty(n, dtype=np.int64)
    k = 1
    while True:
        key2 = np.full(n, -1, dtype=np.int64)
        key2[: n - k] = rank[k:]
        order = np.lexsort((key2, rank))
        r1 = rank[order]
        r2 = key2[order]
        diff = np.empty(n, dtype=np.int64)
        diff[0] = 0
        diff[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        tmp[order] = np.cumsum(diff)
        rank, tmp = tmp, rank
        if rank[order[-1]] == n - 1:
            return order
        k <<= 1


def _lcp_kernel(arr, sa, rank):
    n = arr.shape[0]
    lcp = np.zeros(n - 1 if n > 1 else 0, dtype=np.int64)
    k = 0
    for i in range(n):
        r = rank[i]
        if r == n - 1:
            k = 0
            continue
        j = sa[r + 1]
        while i + k < n and j + k < n and arr[i + k] == arr[j + k]:
            k += 1
        lcp[r] = k
        if k > 0:
            k -= 1
    return lcp


_lcp_kernel = _jit(_lcp_kernel)


def _sparse_min_table(vals: np.ndarray) -> list[np.ndarray]:
    levels = [vals]
    span = 1
    while 2 * span <= vals.size:
        prev = levels[-1]
        levels.append(np.minimum(prev[: prev.size - span], prev[span:]))
        span <<= 1
    return levels


@dataclass(eq=False)
class SuffixIndex:
    """Suffix array over a (possibly joined) text.

    ``su[r]`` is the 1-indexed start of the rank-``r`` suffix, ``rank`` its
    inverse, ``lcp[r]`` the common-prefix length of the suffixes at ranks
    ``r`` and ``r+1`` (valid for ``1 <= r <= n-1``), and ``owner[pos]`` the
    1-based owning input text (0 on separator positions). All four arrays are
    padded at index 0.
    """

    text: Text
    su: np.ndarray
    rank: np.ndarray
    lcp: np.ndarray
    owner: np.ndarray
    rmq: list[np.ndarray] = field(repr=False)
    n_texts: int = 1

    def __len__(self) -> int:
        return len(self.text)


def build_suffix_index(texts: Sequence[Text],
                       alphabet_size: int | None = None) -> SuffixIndex:
    """Build the suffix array, LCP array, and RMQ table of the joined texts."""
    if not texts:
        raise ValueError("empty input")
    if all(len(t) == 0 for t in texts):
        raise ValueError("empty input")
    joined, owner = join_texts(texts, alphabet_size)
    arr = joined.as_array()
    n = arr.size
    sa0 = _suffix_order(arr)
    rank0 = np.empty(n, dtype=np.int64)
    rank0[sa0] = np.arange(n, dtype=np.int64)
    lcp0 = _lcp_kernel(arr, sa0, rank0)
    su = np.concatenate(([0], sa0 + 1))
    rank = np.concatenate(([0], rank0 + 1))
    lcp = np.concatenate(([0], lcp0))
    return SuffixIndex(joined, su, rank, lcp, owner,
                       _sparse_min_table(lcp0), len(texts))


def lcp_range(idx: SuffixIndex, i: int, j: int) -> int:
    """Common-prefix length of the suffixes at ranks ``i < j`` in O(1)."""
    n = len(idx)
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    lo, hi = i - 1, j - 2  # 0-indexed inclusive window into the lcp array
    t = (hi - lo + 1).bit_length() - 1
    level = idx.rmq[t]
    return int(min(level[lo], level[hi - (1 << t) + 1]))


# ---------------------------------------------------------------------------
# Rolling hash


@dataclass(eq=False)
class RollingHash:
    """Prefix hashes ``h[i] = (base^(i-1) * s[i] + h[i-1]) mod modulus``.

    ``inv_pows[i]`` holds ``base^(-i) mod modulus`` so any substring hash is
    one multiplication away.
    """

    length: int
    h: list[int]
    base: int
    modulus: int
    inv_pows: list[int]

    def value(self, i: int, j: int) -> int:
        """Position-independent hash of the substring ``i..j`` (1-indexed)."""
        if not 1 <= i <= j <= self.length:
            raise ValueError(f"bad substring bounds ({i}, {j})")
        return ((self.h[j] - self.h[i - 1]) % self.modulus
                * self.inv_pows[i - 1] % self.modulus)


def build_rolling_hash(s: Text, base: int = HASH_BASE,
                       modulus: int = HASH_MOD) -> RollingHash:
    if len(s) == 0:
        raise ValueError("empty input")
    n = len(s)
    h = [0] * (n + 1)
    power = 1
    for i in range(1, n + 1):
        h[i] = (power * int(s.symbols[i - 1]) + h[i - 1]) % modulus
        power = power * base % modulus
    inv = pow(base, -1, modulus)
    inv_pows = [1] * (n + 1)
    for i in range(1, n + 1):
        inv_pows[i] = inv_pows[i - 1] * inv % modulus
    return RollingHash(n, h, base, modulus, inv_pows)


def hash_lcp(h: RollingHash, a: int, b: int) -> int:
    """Length of the longest common prefix of the suffixes at ``a`` and ``b``.

    Binary search over hash comparisons; exact unless the two primes collide,
    which the 61-bit modulus makes negligible at any tested scale.
    """
    n = h.length
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"positions out of range ({a}, {b})")
    lo, hi = 0, n - max(a, b) + 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if h.value(a, a + mid - 1) == h.value(b, b + mid - 1):
            lo = mid
        else:
            hi = mid - 1
    return lo


# ---------------------------------------------------------------------------
# Substring trie


class Trie:
    """Prefix tree over symbol sequences, stored as flat node arrays."""

    def __init__(self) -> None:
        self.children: list[dict[int, int]] = [{}]
        self.parent: list[int] = [-1]
        self.label: list[int] = [0]
        self.depth: list[int] = [0]

    def node_count(self) -> int:
        return len(self.children)

    def insert(self, seq: Sequence[int]) -> int:
        node = 0
        for sym in seq:
            sym = int(sym)
            nxt = self.children[node].get(sym)
            if nxt is None:
                nxt = len(self.children)
                self.children.append({})
                self.parent.append(node)
                self.label.append(sym)
                self.depth.append(self.depth[node] + 1)
                self.children[node][sym] = nxt
            node = nxt
        return node

    def path(self, node: int) -> tuple[int, ...]:
        out = []
        while node > 0:
            out.append(self.label[node])
            node = self.parent[node]
        return tuple(reversed(out))


def build_substring_trie(z: Text, depth_limit: int) -> Trie:
    """Trie of every window ``z[i : i + depth_limit]``, separators pruned.

    After inserting all windows, every edge labeled with a separator symbol
    (id above ``z.alphabet_size``) is removed together with its subtree.
    """
    if depth_limit < 1:
        raise ValueError("depth limit must be at least 1")
    full = Trie()
    n = len(z)
    syms = [int(x) for x in z.symbols]
    for i in range(n):
        full.insert(syms[i: i + depth_limit])
    # Prune separator-labeled edges: rebuild keeping reachable nodes only.
    pruned = Trie()
    base = z.alphabet_size
    stack = [(0, 0)]
    while stack:
        old, new = stack.pop()
        for sym in sorted(full.children[old]):
            if sym > base:
                continue
            child_old = full.children[old][sym]
            child_new = len(pruned.children)
            pruned.children.append({})
            pruned.parent.append(new)
            pruned.label.append(sym)
            pruned.depth.append(pruned.depth[new] + 1)
            pruned.children[new][sym] = child_new
            stack.append((child_old, child_new))
    return pruned


# ---------------------------------------------------------------------------
# Multi-pattern automaton


class PatternAutomaton:
    """Totalized multi-pattern matching automaton.

    ``step[q][c]`` is defined for every state and every symbol ``1..M``
    (failure-link closure precomputed). A state is forbidden when its spelled
    string ends with a pattern from the first list; ``ending[q]`` holds the
    1-based indices of second-list patterns that are suffixes of the spelled
    string, collected by chasing output links.
    """

    def __init__(self, alphabet_size: int) -> None:
        self.alphabet_size = alphabet_size
        self.step: list[list[int]] = [[0] * (alphabet_size + 1)]
        self.fail: list[int] = [0]
        self.parent: list[int] = [-1]
        self.label: list[int] = [0]
        self.depth: list[int] = [0]
        self.forbidden: list[bool] = [False]
        self.ending: list[tuple[int, ...]] = [()]

    @property
    def n_states(self) -> int:
        return len(self.fail)

    def spelled(self, q: int) -> tuple[int, ...]:
        out = []
        while q > 0:
            out.append(self.label[q])
            q = self.parent[q]
        return tuple(reversed(out))

    def scan(self, symbols: Sequence[int]) -> list[int]:
        """States visited after each consumed symbol, starting from the root."""
        q = 0
        out = []
        for c in symbols:
            q = self.step[q][int(c)]
            out.append(q)
        return out


def build_pattern_automaton(l1: Sequence[Text], l2: Sequence[Text],
                            alphabet_size: int | None = None) -> PatternAutomaton:
    """Build the automaton of both pattern lists.

    ``l1`` patterns mark forbidden states; ``l2`` patterns populate the
    per-state ending sets. Both lists may share patterns.
    """
    pats = list(l1) + list(l2)
    if alphabet_size is None:
        if not pats:
            raise ValueError("alphabet size required when both lists are empty")
        alphabet_size = max(t.alphabet_size for t in pats)
    for t in pats:
        if len(t) == 0:
            raise ValueError("empty pattern")
        if max(int(x) for x in t.symbols) > alphabet_size:
            raise ValueError("pattern symbol exceeds the alphabet")
    m = alphabet_size
    ac = PatternAutomaton(m)
    trie_next: list[dict[int, int]] = [{}]
    l1_end = [False]
    own: list[list[int]] = [[]]

    def add_node(parent: int, sym: int) -> int:
        trie_next.append({})
        l1_end.append(False)
        own.append([])
        ac.step.append([0] * (m + 1))
        ac.fail.append(0)
        ac.parent.append(parent)
        ac.label.append(sym)
        ac.depth.append(ac.depth[parent] + 1)
        ac.forbidden.append(False)
        ac.ending.append(())
        return len(trie_next) - 1

    def insert(t: Text) -> int:
        node = 0
        for sym in t.symbols:
            sym = int(sym)
            nxt = trie_next[node].get(sym)
            if nxt is None:
                nxt = add_node(node, sym)
                trie_next[node][sym] = nxt
            node = nxt
        return node

    for t in l1:
        l1_end[insert(t)] = True
    for i, t in enumerate(l2, start=1):
        own[insert(t)].append(i)

    # Breadth-first failure links, then totalize transitions and propagate
    # forbidden flags and ending sets along output links.
    olink = [0] * len(trie_next)
    queue: deque[int] = deque()
    for c in range(1, m + 1):
        child = trie_next[0].get(c)
        if child is None:
            ac.step[0][c] = 0
        else:
            ac.step[0][c] = child
            ac.fail[child] = 0
            queue.append(child)
    ac.forbidden[0] = l1_end[0]
    ac.ending[0] = tuple(own[0])
    while queue:
        q = queue.popleft()
        f = ac.fail[q]
        ac.forbidden[q] = l1_end[q] or ac.forbidden[f]
        olink[q] = f if (own[f] or l1_end[f]) else olink[f]
        se = list(own[q])
        link = olink[q]
        while link > 0:
            se.extend(own[link])
            link = olink[link]
        ac.ending[q] = tuple(sorted(se))
        for c in range(1, m + 1):
            child = trie_next[q].get(c)
            if child is None:
                ac.step[q][c] = ac.step[f][c]
            else:
                ac.fail[child] = ac.step[f][c]
                ac.step[q][c] = child
                queue.append(child)
    return ac
