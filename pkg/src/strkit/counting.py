"""Counting and constructing strings under substring occurrence constraints.

The first and third operations run layered dynamic programs over the
totalized multi-pattern automaton of the forbidden plus counted patterns,
extending strings one symbol at a time while tracking how often each counted
pattern has occurred (overlaps included). Occurrence components saturate one
past the cap into an absorbing overflow value, so strings that exceed the
cap stay tracked but can never satisfy a constraint. Counts are exact
arbitrary-precision integers.

The second operation counts accepting runs of an automaton whose edges may
consume no input symbol: per symbol, the non-absorbing edges form a
functional graph whose cycle edges are deleted, and consuming a symbol means
an acyclic chain of non-absorbing edges followed by one absorbing edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .primitives import Text, build_pattern_automaton

_WEIGHT_AGG = {
    "sum": (lambda x, y: x + y, 0),
    "max": (lambda x, y: x if x >= y else y, float("-inf")),
}

_NEG_INF = float("-inf")


@dataclass(frozen=True)
class CountedPattern:
    """A pattern whose occurrence count is constrained and/or weighted.

    ``occ`` lists the admissible occurrence counts (each within ``0..k`` of
    the owning spec). ``dont_care`` patterns contribute weight but are not
    tracked, so ``occ`` may then be omitted.
    """

    pattern: Text
    occ: frozenset[int] | None = None
    weight: float | None = None
    dont_care: bool = False


@dataclass(eq=False)
class OccurrenceSpec:
    """Forbidden patterns, counted patterns, the occurrence cap ``k``, and
    the admissible string lengths."""

    forbidden: Sequence[Text] = field(default_factory=tuple)
    counted: Sequence[CountedPattern] = field(default_factory=tuple)
    k: int = 0
    slen: Sequence[int] = field(default_factory=tuple)


def _tracked(spec: OccurrenceSpec) -> list[int]:
    if spec.k < 0:
        raise ValueError("occurrence cap must be non-negative")
    if any(length < 0 for length in spec.slen):
        raise ValueError("lengths must be non-negative")
    out = []
    for i, cp in enumerate(spec.counted):
        if cp.dont_care:
            continue
        if cp.occ is None:
            raise ValueError("tracked pattern needs an occurrence set")
        if any(v < 0 for v in cp.occ):
            raise ValueError("occurrence counts must be non-negative")
        if cp.occ and max(cp.occ) > spec.k:
            raise ValueError("occurrence cap k below a requested count")
        out.append(i)
    return out


class _VectorSpace:
    """Mixed-radix occurrence vectors with one absorbing overflow value.

    Component values run ``0..k+1`` where ``k+1`` means "more than k";
    transitions adding an occurrence saturate there.
    """

    def __init__(self, n_slots: int, k: int, cap: int) -> None:
        self.n_slots = n_slots
        self.radix = k + 2
        self.k = k
        self.size = self.radix ** n_slots
        if self.size > cap:
            raise ValueError("state-space cap exceeded")
        self.place = [self.radix ** s for s in range(n_slots)]

    def bump_table(self, slots: Sequence[int]) -> list[int] | None:
        """vector -> vector with the given components incremented (saturating),
        or None when no component moves."""
        if not slots:
            return None
        table = list(range(self.size))
        for s in slots:
            p = self.place[s]
            table = [
                v + p if (v // p) % self.radix <= self.k else v
                for v in table
            ]
        return table

    def encode(self, values: Sequence[int]) -> int:
        return sum(v * p for v, p in zip(values, self.place))

    def admissible(self, occ_sets: Sequence[Sequence[int]]) -> list[int]:
        if not occ_sets:
            return [0]
        return [self.encode(combo) for combo in product(*occ_sets)]


def _automaton_setup(spec: OccurrenceSpec, alphabet_size: int, cap: int):
    tracked = _tracked(spec)
    ac = build_pattern_automaton(
        list(spec.forbidden), [cp.pattern for cp in spec.counted], alphabet_size)
    space = _VectorSpace(len(tracked), spec.k, cap)
    slot_of = {counted_i + 1: slot for slot, counted_i in enumerate(tracked)}
    bump = []
    for q in range(ac.n_states):
        slots = sorted(slot_of[i] for i in ac.ending[q] if i in slot_of)
        bump.append(space.bump_table(slots))
    occ_sets = [sorted(spec.counted[i].occ) for i in tracked]
    admissible = space.admissible(occ_sets)
    return ac, space, bump, admissible, tracked


def count_constrained(spec: OccurrenceSpec, alphabet_size: int,
                      state_cap: int = 4_000_000) -> int:
    """Number of strings whose length is admissible, that avoid every
    forbidden pattern, and whose tracked occurrence counts all lie in their
    patterns' occurrence sets."""
    ac, space, bump, admissible, _ = _automaton_setup(spec, alphabet_size, state_cap)
    n_states = ac.n_states
    m = alphabet_size
    want = set(spec.slen)
    if not want:
        return 0
    lmax = max(want)
    cur = [[0] * space.size for _ in range(n_states)]
    if not ac.forbidden[0]:
        cur[0][0] = 1
    total = 0
    if 0 in want:
        total += sum(cur[q][vec] for q in range(n_states)
                     if not ac.forbidden[q] for vec in admissible)
    for length in range(1, lmax + 1):
        nxt = [[0] * space.size for _ in range(n_states)]
        for src in range(n_states):
            if ac.forbidden[src]:
                continue
            row = cur[src]
            if not any(row):
                continue
            for c in range(1, m + 1):
                dst = ac.step[src][c]
                if ac.forbidden[dst]:
                    continue
                table = bump[dst]
                out = nxt[dst]
                if table is None:
                    for vec, val in enumerate(row):
                        if val:
                            out[vec] += val
                else:
                    for vec, val in enumerate(row):
                        if val:
                            out[table[vec]] += val
        cur = nxt
        if length in want:
            total += sum(cur[q][vec] for q in range(n_states)
                         if not ac.forbidden[q] for vec in admissible)
    return total


def max_weight_string(spec: OccurrenceSpec, alphabet_size: int,
                      agg: str = "sum",
                      state_cap: int = 4_000_000) -> tuple[float, Text] | None:
    """Best-weight string satisfying the spec, or None when none exists.

    A string's weight folds ``agg`` over the weights of every occurrence of
    every counted pattern (don't-care ones included), seeded with 0. One
    witness is rebuilt from stored predecessor edges.
    """
    if agg not in _WEIGHT_AGG:
        raise ValueError(f"unknown agg {agg!r}; options: {sorted(_WEIGHT_AGG)}")
    agg_fn, agg_neutral = _WEIGHT_AGG[agg]
    ac, space, bump, admissible, tracked = _automaton_setup(
        spec, alphabet_size, state_cap)
    n_states = ac.n_states
    m = alphabet_size
    weights = [0 if cp.weight is None else cp.weight for cp in spec.counted]
    ws = []
    for q in range(n_states):
        acc = agg_neutral
        for i in ac.ending[q]:
            acc = agg_fn(acc, weights[i - 1])
        ws.append(acc)

    want = set(spec.slen)
    if not want:
        return None
    lmax = max(want)
    cur = [[_NEG_INF] * space.size for _ in range(n_states)]
    if not ac.forbidden[0]:
        cur[0][0] = 0
    prevs: list = [None]  # prevs[length][state][vector] = (prev state, symbol)
    best = None  # (weight, length, state, vector)
    if 0 in want and cur[0][0] == 0 and 0 in admissible:
        best = (0, 0, 0, 0)
    for length in range(1, lmax + 1):
        nxt = [[_NEG_INF] * space.size for _ in range(n_states)]
        back = [[None] * space.size for _ in range(n_states)]
        for src in range(n_states):
            if ac.forbidden[src]:
                continue
            row = cur[src]
            for c in range(1, m + 1):
                dst = ac.step[src][c]
                if ac.forbidden[dst]:
                    continue
                gain = ws[dst]
                table = bump[dst]
                out = nxt[dst]
                bk = back[dst]
                for vec, val in enumerate(row):
                    if val == _NEG_INF:
                        continue
                    cand = agg_fn(val, gain)
                    tv = vec if table is None else table[vec]
                    if cand > out[tv]:
                        out[tv] = cand
                        bk[tv] = (src, c)
        cur = nxt
        prevs.append(back)
        if length in want:
            for q in range(n_states):
                if ac.forbidden[q]:
                    continue
                for vec in admissible:
                    val = cur[q][vec]
                    if val != _NEG_INF and (best is None or val > best[0]):
                        best = (val, length, q, vec)
    if best is None:
        return None
    weight, length, q, vec = best
    slot_of = {ci + 1: slot for slot, ci in enumerate(tracked)}
    syms: list[int] = []
    while length > 0:
        src, c = prevs[length][q][vec]
        syms.append(c)
        # admissible end vectors never saturate, so the rollback is exact
        for i in ac.ending[q]:
            if i in slot_of:
                vec -= space.place[slot_of[i]]
        q = src
        length -= 1
    syms.reverse()
    return weight, Text(tuple(syms), alphabet_size)


# ---------------------------------------------------------------------------
# Counting with non-absorbing edges


@dataclass(frozen=True)
class DfaEdge:
    src: int
    dst: int
    symbol: int
    absorbing: bool = True


@dataclass(eq=False)
class EpsilonDfa:
    """Automaton whose edges each carry a symbol and may be non-absorbing
    (consume no input). Per state and symbol at most one outgoing
    non-absorbing edge is allowed."""

    n_states: int
    initial: int
    finals: frozenset[int]
    edges: tuple[DfaEdge, ...]


def _validate_dfa(dfa: EpsilonDfa, alphabet_size: int) -> None:
    seen = set()
    for e in dfa.edges:
        if not (0 <= e.src < dfa.n_states and 0 <= e.dst < dfa.n_states):
            raise ValueError("edge endpoint out of range")
        if not 1 <= e.symbol <= alphabet_size:
            raise ValueError("edge symbol outside the alphabet")
        if not e.absorbing:
            if (e.src, e.symbol) in seen:
                raise ValueError(
                    "two non-absorbing edges with one symbol out of one state")
            seen.add((e.src, e.symbol))
    if not 0 <= dfa.initial < dfa.n_states:
        raise ValueError("initial state out of range")
    if any(not 0 <= f < dfa.n_states for f in dfa.finals):
        raise ValueError("final state out of range")


def remove_cycle_edges(dfa: EpsilonDfa, alphabet_size: int) -> EpsilonDfa:
    """Drop every non-absorbing edge lying on a same-symbol cycle.

    Per symbol the non-absorbing edges form a functional graph, so the set
    of edges on cycles is canonical: exactly the out-edges of states lying
    on a cycle.
    """
    _validate_dfa(dfa, alphabet_size)
    on_cycle: set[tuple[int, int]] = set()
    for c in range(1, alphabet_size + 1):
        nxt = {e.src: e.dst for e in dfa.edges
               if not e.absorbing and e.symbol == c}
        color = [0] * dfa.n_states  # 0 new, 1 on current walk, 2 settled
        for start in range(dfa.n_states):
            if color[start]:
                continue
            path = []
            u: int | None = start
            while u is not None and color[u] == 0:
                color[u] = 1
                path.append(u)
                u = nxt.get(u)
            if u is not None and color[u] == 1:
                for w in path[path.index(u):]:
                    on_cycle.add((w, c))
            for w in path:
                color[w] = 2
    kept = tuple(e for e in dfa.edges
                 if e.absorbing or (e.src, e.symbol) not in on_cycle)
    return EpsilonDfa(dfa.n_states, dfa.initial, dfa.finals, kept)


def count_epsilon_dfa(dfa: EpsilonDfa, slen: Sequence[int],
                      alphabet_size: int) -> int:
    """Number of accepting runs of admissible length.

    Consuming one symbol means following any (possibly empty) acyclic chain
    of that symbol's non-absorbing edges and then exactly one absorbing edge
    with the same symbol. Runs and strings coincide when no two runs accept
    the same string.
    """
    if any(length < 0 for length in slen):
        raise ValueError("lengths must be non-negative")
    pruned = remove_cycle_edges(dfa, alphabet_size)
    n = dfa.n_states
    m = alphabet_size
    chain_in: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(m + 1)]
    hop_in: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(m + 1)]
    out_deg = [[0] * n for _ in range(m + 1)]
    for e in pruned.edges:
        if e.absorbing:
            hop_in[e.symbol][e.dst].append(e.src)
        else:
            chain_in[e.symbol][e.dst].append(e.src)
            out_deg[e.symbol][e.src] += 1

    topo: list[list[int]] = [[]]
    for c in range(1, m + 1):
        indeg = [len(chain_in[c][v]) for v in range(n)]
        order = [v for v in range(n) if indeg[v] == 0]
        head = 0
        nxt_map = {e.src: e.dst for e in pruned.edges
                   if not e.absorbing and e.symbol == c}
        while head < len(order):
            v = order[head]
            head += 1
            w = nxt_map.get(v)
            if w is not None:
                indeg[w] -= 1
                if indeg[w] == 0:
                    order.append(w)
        if len(order) != n:
            raise RuntimeError("cycle survived pruning")
        topo.append(order)

    want = set(slen)
    if not want:
        return 0
    lmax = max(want)
    cnt = [0] * n
    cnt[dfa.initial] = 1
    total = 0
    if 0 in want:
        total += sum(cnt[f] for f in dfa.finals)
    for length in range(1, lmax + 1):
        new = [0] * n
        for c in range(1, m + 1):
            reach = [0] * n
            for v in topo[c]:
                acc = cnt[v]
                for u in chain_in[c][v]:
                    acc += reach[u]
                reach[v] = acc
            for v in range(n):
                for u in hop_in[c][v]:
                    new[v] += reach[u]
        cnt = new
        if length in want:
            total += sum(cnt[f] for f in dfa.finals)
    return total
