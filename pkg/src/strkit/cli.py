"""Command-line front door.

Parses text and JSON inputs, dispatches to the library, and prints one JSON
object per run on stdout. Domain errors exit 1 with ``{"error": ...}``;
usage errors exit 2. Counts are printed as decimal strings so arbitrary
precision survives JSON.

Set files are newline-delimited UTF-8 (one string per line) or a JSON object
``{"alphabet": M, "texts": [[1, 2, ...], ...]}`` with explicit symbol ids.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass

from . import oracles
from .concatenation import (
    min_lex_concat,
    shortest_common_concat,
    shortest_palindrome_concat,
)
from .counting import (
    CountedPattern,
    DfaEdge,
    EpsilonDfa,
    OccurrenceSpec,
    count_constrained,
    count_epsilon_dfa,
    max_weight_string,
)
from .prefix_queries import build_failure_tree
from .primitives import (
    LATIN,
    Text,
    build_suffix_index,
    failure_function,
    text_from_str,
)
from .subsequences import (
    AggPair,
    de_bruijn_superstring,
    lccs_constrained,
    max_weight_common_subsequence,
    shortest_non_substring_lexicographic,
    shortest_non_substring_trie,
)

DEFAULT_SEED = 0xC0FFEE


@dataclass(frozen=True)
class AlphabetTable:
    """Deterministic bijection between characters and symbol ids 1..M."""

    chars: str

    def __post_init__(self):
        if len(set(self.chars)) != len(self.chars):
            raise ValueError("alphabet contains duplicate characters")

    @classmethod
    def from_texts(cls, lines: list[str]) -> "AlphabetTable":
        return cls("".join(sorted({ch for line in lines for ch in line})))

    def encode(self, s: str) -> Text:
        return text_from_str(s, self.chars)

    def decode(self, t: Text) -> str:
        return "".join(self.chars[int(x) - 1] for x in t.symbols)


@dataclass
class RunReport:
    """Single-object JSON report for a command run."""

    command: str
    digest: str
    parameters: dict
    result: dict
    wall_time_ms: float | None = None

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "digest": self.digest,
            "parameters": self.parameters,
            "result": self.result,
        }
        if self.wall_time_ms is not None:
            payload["wall_time_ms"] = self.wall_time_ms
        return json.dumps(payload, sort_keys=True)


def _digest(parts: list[str]) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode("utf-8"))
        h.update(b"\0")
    return h.hexdigest()[:16]


def _load_set(path: str, alphabet: str | None) -> tuple[list[Text], AlphabetTable | None]:
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    stripped = raw.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = json.loads(raw)
        if isinstance(data, list):
            data = {"alphabet": max((max(t) for t in data if t), default=1),
                    "texts": data}
        m = int(data["alphabet"])
        texts = [Text(tuple(int(x) for x in seq), m) for seq in data["texts"]]
        for t in texts:
            t.validate()
        return texts, None
    lines = [line for line in raw.splitlines() if line]
    if not lines:
        raise ValueError(f"no strings in {path}")
    table = AlphabetTable(alphabet) if alphabet else AlphabetTable.from_texts(lines)
    return [table.encode(line) for line in lines], table


def _render(t: Text, table: AlphabetTable | None):
    if table is not None:
        return table.decode(t)
    if t.alphabet_size <= len(LATIN) and all(1 <= int(x) <= 26 for x in t.symbols):
        return "".join(LATIN[int(x) - 1] for x in t.symbols)
    return [int(x) for x in t.symbols]


def _pattern_from_json(obj, m: int) -> Text:
    if isinstance(obj, str):
        return text_from_str(obj, LATIN[:m])
    return Text(tuple(int(x) for x in obj), m)


def _spec_from_json(data: dict) -> tuple[OccurrenceSpec, int]:
    m = int(data["alphabet"])
    forbidden = [_pattern_from_json(p, m) for p in data.get("forbidden", [])]
    counted = []
    for item in data.get("counted", []):
        counted.append(CountedPattern(
            pattern=_pattern_from_json(item["pattern"], m),
            occ=frozenset(int(v) for v in item["occ"]) if "occ" in item else None,
            weight=item.get("weight"),
            dont_care=bool(item.get("dont_care", False)),
        ))
    spec = OccurrenceSpec(
        forbidden=forbidden,
        counted=counted,
        k=int(data.get("k", 0)),
        slen=tuple(int(v) for v in data["slen"]),
    )
    return spec, m


def _dfa_from_json(data: dict) -> tuple[EpsilonDfa, int]:
    edges = tuple(
        DfaEdge(int(e["from"]), int(e["to"]), int(e["symbol"]),
                bool(e.get("absorbing", True)))
        for e in data["edges"]
    )
    dfa = EpsilonDfa(
        n_states=int(data["states"]),
        initial=int(data["initial"]),
        finals=frozenset(int(f) for f in data["finals"]),
        edges=edges,
    )
    m = int(data.get("alphabet", max((e.symbol for e in edges), default=1)))
    return dfa, m


def _ints(csv: str) -> list[int]:
    return [int(x) for x in csv.split(",") if x != ""]


# ---------------------------------------------------------------------------
# Command handlers


def _cmd_prefix_query(args) -> dict:
    t = text_from_str(args.text)
    tree = build_failure_tree(t, stride=args.stride)
    vals = _ints(args.args)
    if len(vals) != 2:
        raise ValueError("--args takes two comma-separated integers")
    if args.op == "pq":
        return {"op": "pq", "result": tree.pq(vals[0], vals[1])}
    if args.stride is not None:
        return {"op": args.op, "result": tree.lpq_strided(vals[0], vals[1])}
    return {"op": args.op, "result": tree.lpq(vals[0], vals[1])}


def _cmd_concat(args) -> dict:
    if args.mode == "min-lex":
        texts, table = _load_set(args.set, args.alphabet_file_chars)
        return {"result": _render(min_lex_concat(texts), table)}
    if args.mode == "palindrome":
        texts, table = _load_set(args.set, args.alphabet_file_chars)
        got = shortest_palindrome_concat(texts)
        if got is None:
            return {"length": None, "witness": None}
        return {"length": got[0], "witness": _render(got[1], table)}
    set_a, table_a = _load_set(args.set_a, args.alphabet_file_chars)
    set_b, table_b = _load_set(args.set_b, args.alphabet_file_chars)
    if table_a is not None and table_b is not None and table_a != table_b:
        merged = AlphabetTable.from_texts([table_a.chars + table_b.chars])
        set_a = [merged.encode(table_a.decode(t)) for t in set_a]
        set_b = [merged.encode(table_b.decode(t)) for t in set_b]
        table_a = merged
    got = shortest_common_concat(set_a, set_b)
    if got is None:
        return {"length": None, "witness": None}
    return {"length": got[0], "witness": _render(got[1], table_a)}


def _cmd_subseq(args) -> dict:
    if args.mode == "debruijn":
        t = de_bruijn_superstring(args.alphabet, args.order)
        return {"length": len(t), "witness": _render(t, None)}
    texts, table = _load_set(args.texts, args.alphabet_file_chars)
    if args.mode == "lccs":
        length, witness = lccs_constrained(texts, _ints(args.thresholds), args.f)
        return {"length": length, "witness": _render(witness, table)}
    if args.mode == "mwcs":
        weights = None
        if args.weights:
            with open(args.weights, "r", encoding="utf-8") as fh:
                weights = json.load(fh)
        aggs = AggPair(args.agg1, args.agg2)
        weight, chain = max_weight_common_subsequence(texts, weights, aggs)
        return {"weight": weight, "chain": [list(tup) for tup in chain]}
    # absent
    m = args.alphabet or max(t.alphabet_size for t in texts)
    fn = (shortest_non_substring_trie if args.method == "trie"
          else shortest_non_substring_lexicographic)
    witness = fn(texts, m)
    return {"length": len(witness), "witness": _render(witness, table)}


def _cmd_count(args) -> dict:
    with open(args.spec or args.dfa, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if args.mode == "edfa":
        dfa, m = _dfa_from_json(data)
        count = count_epsilon_dfa(dfa, _ints(args.lens), m)
        return {"count": str(count)}
    if args.mode == "constrained":
        spec, m = _spec_from_json(data)
        count = count_constrained(spec, m)
        if args.modulus:
            count %= args.modulus
        return {"count": str(count)}
    spec, m = _spec_from_json(data)
    got = max_weight_string(spec, m, agg=args.agg)
    if got is None:
        return {"weight": None, "witness": None}
    return {"weight": got[0], "witness": _render(got[1], None)}


def _cmd_oracle(args) -> dict:
    if args.mode == "lpq":
        t = text_from_str(args.text)
        vals = _ints(args.args)
        return {"op": "lpq", "result": oracles.oracle_lpq(t, vals[0], vals[1])}
    if args.mode == "shortest-common":
        set_a, table = _load_set(args.set_a, None)
        set_b, _ = _load_set(args.set_b, None)
        got = oracles.oracle_shortest_common_concat(set_a, set_b, args.cap)
        if got is None:
            return {"length": None, "witness": None}
        return {"length": got[0], "witness": _render(got[1], table)}
    if args.mode == "min-lex":
        texts, table = _load_set(args.set, None)
        return {"result": _render(oracles.oracle_min_lex(texts), table)}
    if args.mode == "lccs":
        texts, _ = _load_set(args.texts, None)
        return {"length": oracles.oracle_lccs(texts, _ints(args.thresholds), args.f)}
    if args.mode == "mwcs":
        texts, _ = _load_set(args.texts, None)
        weights = [[1] * len(t) for t in texts]
        if args.weights:
            with open(args.weights, "r", encoding="utf-8") as fh:
                weights = json.load(fh)
        aggs = AggPair(args.agg1, args.agg2)
        got = oracles.oracle_mwcs(texts, weights, aggs.combine1, aggs.neutral1,
                                  lambda *vals: aggs.combine2(vals))
        return {"weight": got}
    if args.mode == "absent":
        texts, table = _load_set(args.texts, None)
        m = args.alphabet or max(t.alphabet_size for t in texts)
        got = oracles.oracle_absent(texts, m)
        return {"length": len(got), "witness": _render(got, table)}
    if args.mode == "count":
        with open(args.spec, "r", encoding="utf-8") as fh:
            spec, m = _spec_from_json(json.load(fh))
        return {"count": str(oracles.oracle_count(spec, m))}
    raise ValueError(f"unknown oracle {args.mode!r}")


# ---------------------------------------------------------------------------
# Self-test battery


def _random_text(rng: random.Random, max_len: int, m: int) -> Text:
    n = rng.randint(1, max_len)
    return Text(tuple(rng.randint(1, m) for _ in range(n)), m)


def _naive_borders(t: Text) -> list[int]:
    syms = t.key()
    out = [0]
    for i in range(1, len(syms) + 1):
        best = 0
        for b in range(i - 1, 0, -1):
            if syms[:b] == syms[i - b: i]:
                best = b
                break
        out.append(best)
    return out


def _selftest_checks(seed: int, inject_fault: str | None):
    rng = random.Random(seed)
    checks = []

    def run(name: str, instances) -> None:
        failures = []
        count = 0
        for payload, ok in instances:
            count += 1
            if not ok and len(failures) < 1:
                failures.append(payload)
        checks.append({
            "name": name,
            "instances": count,
            "status": "ok" if not failures else "fail",
            **({"failing_instance": failures[0]} if failures else {}),
        })

    def failure_cases():
        for _ in range(40):
            t = _random_text(rng, 40, rng.randint(1, 3))
            got = failure_function(t)
            yield {"text": t.key()}, list(got) == _naive_borders(t)

    run("failure-function", failure_cases())

    def suffix_cases():
        for case in range(30):
            texts = [_random_text(rng, 12, 3)
                     for _ in range(rng.randint(1, 3))]
            idx = build_suffix_index(texts)
            if inject_fault == "lcp-flip" and case == 0 and len(idx) > 1:
                idx.lcp[1] += 1
            n = len(idx)
            z = idx.text.key()
            suffixes = sorted(range(1, n + 1), key=lambda p: z[p - 1:])
            order_ok = [int(idx.su[r]) for r in range(1, n + 1)] == suffixes
            lcp_ok = True
            for r in range(1, n):
                a, b = z[int(idx.su[r]) - 1:], z[int(idx.su[r + 1]) - 1:]
                naive = 0
                while naive < min(len(a), len(b)) and a[naive] == b[naive]:
                    naive += 1
                if int(idx.lcp[r]) != naive:
                    lcp_ok = False
            yield {"texts": [t.key() for t in texts]}, order_ok and lcp_ok

    run("suffix-index", suffix_cases())

    def prefix_cases():
        for _ in range(30):
            t = _random_text(rng, 30, rng.randint(1, 3))
            n = len(t)
            trees = {c: build_failure_tree(t, stride=c) for c in (1, 2, 3, 8)}
            tree = trees[1]
            ok = True
            syms = t.key()
            for _ in range(30):
                j = rng.randint(0, n)
                i = rng.randint(0, j)
                if tree.pq(i, j) != (syms[:i] == syms[j - i: j]):
                    ok = False
                k = rng.randint(0, j)
                want = oracles.oracle_lpq(t, j, k)
                if tree.lpq(j, k) != want:
                    ok = False
                if any(trees[c].lpq_strided(j, k) != want for c in trees):
                    ok = False
            yield {"text": syms}, ok

    run("prefix-queries", prefix_cases())

    def concat_cases():
        for _ in range(40):
            a = [_random_text(rng, 3, 2) for _ in range(rng.randint(1, 3))]
            b = [_random_text(rng, 3, 2) for _ in range(rng.randint(1, 3))]
            want = oracles.oracle_shortest_common_concat(a, b, 12)
            got = shortest_common_concat(a, b)
            if want is None:
                ok = got is None or got[0] > 12
            else:
                ok = got is not None and got[0] == want[0]
            yield {"a": [t.key() for t in a], "b": [t.key() for t in b]}, ok

    run("concat-shortest-common", concat_cases())

    def palindrome_cases():
        for _ in range(40):
            a = [_random_text(rng, 3, 2) for _ in range(rng.randint(1, 3))]
            closure = oracles.concat_closure(a, 12)
            pals = [s for s in closure if s == s[::-1]]
            want = min((len(s) for s in pals), default=None)
            got = shortest_palindrome_concat(a)
            if want is None:
                ok = got is None or got[0] > 12
            else:
                witness = got[1].key() if got else None
                ok = (got is not None and got[0] == want
                      and witness == witness[::-1])
            yield {"a": [t.key() for t in a]}, ok

    run("concat-palindrome", palindrome_cases())

    def min_lex_cases():
        for _ in range(60):
            texts = [_random_text(rng, 4, 2) for _ in range(rng.randint(1, 6))]
            ok = min_lex_concat(texts) == oracles.oracle_min_lex(texts)
            yield {"texts": [t.key() for t in texts]}, ok

    run("min-lex", min_lex_cases())

    def lccs_cases():
        for _ in range(50):
            n = rng.randint(1, 4)
            texts = [_random_text(rng, 10, rng.randint(1, 3)) for _ in range(n)]
            thresholds = [rng.randint(0, 3) for _ in range(n)]
            f = rng.randint(0, n)
            want = oracles.oracle_lccs(texts, thresholds, f)
            got, _w = lccs_constrained(texts, thresholds, f)
            yield {"texts": [t.key() for t in texts],
                   "thresholds": thresholds, "f": f}, got == want

    run("lccs", lccs_cases())

    def mwcs_cases():
        for _ in range(40):
            k = rng.randint(2, 3)
            texts = [_random_text(rng, 6, 3) for _ in range(k)]
            weights = [[rng.randint(0, 9) for _ in range(len(t))] for t in texts]
            aggs = AggPair("sum", "min")
            want = oracles.oracle_mwcs(texts, weights,
                                       aggs.combine1, aggs.neutral1, min)
            got, _chain = max_weight_common_subsequence(texts, weights, aggs)
            yield {"texts": [t.key() for t in texts]}, got == want

    run("mwcs", mwcs_cases())

    def absent_cases():
        for _ in range(50):
            m = rng.randint(1, 3)
            texts = [_random_text(rng, 20, m) for _ in range(rng.randint(1, 3))]
            want = oracles.oracle_absent(texts, m, max_len=25 if m == 1 else 12)
            via_trie = shortest_non_substring_trie(texts, m)
            via_lex = shortest_non_substring_lexicographic(texts, m)
            hay = [t.key() for t in texts]

            def absent(s: Text) -> bool:
                needle = s.key()
                return not any(
                    h[i: i + len(needle)] == needle
                    for h in hay for i in range(len(h) - len(needle) + 1))

            ok = (len(via_trie) == len(want) == len(via_lex)
                  and absent(via_trie) and absent(via_lex))
            yield {"texts": hay, "m": m}, ok

    run("absent", absent_cases())

    def debruijn_cases():
        for m in (2, 3):
            for q in (1, 2, 3):
                t = de_bruijn_superstring(m, q)
                syms = t.key()
                grams = {syms[i: i + q] for i in range(len(syms) - q + 1)}
                ok = len(syms) == m ** q + q - 1 and len(grams) == m ** q
                yield {"m": m, "q": q}, ok

    run("debruijn", debruijn_cases())

    def count_cases():
        for _ in range(40):
            m = rng.randint(1, 3)
            spec = _random_spec(rng, m, weighted=False)
            ok = count_constrained(spec, m) == oracles.oracle_count(spec, m)
            yield {"m": m, "slen": list(spec.slen)}, ok

    run("count-constrained", count_cases())

    def edfa_cases():
        for _ in range(30):
            m = rng.randint(1, 2)
            dfa = _random_edfa(rng, m)
            lens = sorted(rng.sample(range(0, 7), rng.randint(1, 2)))
            want = oracles.oracle_count_epsilon_dfa(dfa, lens, m)
            ok = count_epsilon_dfa(dfa, lens, m) == want
            yield {"m": m, "lens": lens}, ok

    run("count-edfa", edfa_cases())

    def maxweight_cases():
        for _ in range(30):
            m = rng.randint(1, 3)
            spec = _random_spec(rng, m, weighted=True)
            want = oracles.oracle_max_weight(spec, m, lambda x, y: x + y)
            got = max_weight_string(spec, m, agg="sum")
            ok = (got is None and want is None) or (
                got is not None and want is not None and got[0] == want)
            yield {"m": m, "slen": list(spec.slen)}, ok

    run("max-weight", maxweight_cases())

    return checks


def _random_spec(rng: random.Random, m: int, weighted: bool) -> OccurrenceSpec:
    k = rng.randint(0, 2)
    forbidden = [_random_text(rng, 2, m) for _ in range(rng.randint(0, 1))]
    counted = []
    for _ in range(rng.randint(0, 2)):
        dont_care = weighted and rng.random() < 0.25
        counted.append(CountedPattern(
            pattern=_random_text(rng, 2, m),
            occ=None if dont_care else frozenset(
                rng.sample(range(0, k + 1), rng.randint(1, k + 1))),
            weight=rng.randint(0, 5) if weighted else None,
            dont_care=dont_care,
        ))
    slen = tuple(sorted(rng.sample(range(0, 8), rng.randint(1, 2))))
    return OccurrenceSpec(forbidden=forbidden, counted=counted, k=k, slen=slen)


def _random_edfa(rng: random.Random, m: int) -> EpsilonDfa:
    n = rng.randint(1, 5)
    edges = []
    used = set()
    for _ in range(rng.randint(0, 2 * n)):
        src, dst = rng.randrange(n), rng.randrange(n)
        sym = rng.randint(1, m)
        absorbing = rng.random() < 0.6
        if not absorbing:
            if (src, sym) in used:
                continue
            used.add((src, sym))
        edges.append(DfaEdge(src, dst, sym, absorbing))
    finals = frozenset(q for q in range(n) if rng.random() < 0.5)
    return EpsilonDfa(n, rng.randrange(n), finals, tuple(edges))


def selftest(seed: int = DEFAULT_SEED, inject_fault: str | None = None) -> RunReport:
    """Seed-deterministic oracle-equivalence battery across all modules."""
    started = time.perf_counter()
    checks = _selftest_checks(seed, inject_fault)
    elapsed = (time.perf_counter() - started) * 1000.0
    status = "ok" if all(c["status"] == "ok" for c in checks) else "fail"
    report = RunReport(
        command="selftest",
        digest=_digest([str(seed), inject_fault or ""]),
        parameters={"seed": seed, "inject_fault": inject_fault},
        result={"status": status, "checks": checks},
        wall_time_ms=None,  # kept out of the report so bytes are reproducible
    )
    print(f"selftest finished in {elapsed:.0f} ms", file=sys.stderr)
    return report


# ---------------------------------------------------------------------------
# Parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strkit",
        description="String algorithm toolkit: prefix queries, optimal "
                    "concatenations, constrained subsequences, and counting.")
    parser.add_argument("--report", action="store_true",
                        help="wrap the result in a run-report object with an "
                             "input digest (timing goes to stderr)")
    sub = parser.add_subparsers(dest="command", required=True)

    pq = sub.add_parser("prefix-query", help="prefix queries on one string")
    pq.add_argument("--text", required=True)
    pq.add_argument("--op", choices=["pq", "lpq"], required=True)
    pq.add_argument("--args", required=True, help="i,j for pq; j,k for lpq")
    pq.add_argument("--stride", type=int, default=None)
    pq.set_defaults(handler=_cmd_prefix_query)

    concat = sub.add_parser("concat", help="optimal concatenations")
    csub = concat.add_subparsers(dest="mode", required=True)
    sc = csub.add_parser("shortest-common")
    sc.add_argument("--set-a", required=True)
    sc.add_argument("--set-b", required=True)
    pal = csub.add_parser("palindrome")
    pal.add_argument("--set", required=True)
    ml = csub.add_parser("min-lex")
    ml.add_argument("--set", required=True)
    for p in (sc, pal, ml):
        p.add_argument("--alphabet-file", dest="alphabet_file", default=None)
        p.set_defaults(handler=_cmd_concat)

    subseq = sub.add_parser("subseq", help="common subsequences and absences")
    ssub = subseq.add_subparsers(dest="mode", required=True)
    lccs = ssub.add_parser("lccs")
    lccs.add_argument("--texts", required=True)
    lccs.add_argument("--thresholds", required=True)
    lccs.add_argument("--f", type=int, required=True)
    mwcs = ssub.add_parser("mwcs")
    mwcs.add_argument("--texts", required=True)
    mwcs.add_argument("--weights", default=None)
    mwcs.add_argument("--agg1", default="sum")
    mwcs.add_argument("--agg2", default="min")
    absent = ssub.add_parser("absent")
    absent.add_argument("--texts", required=True)
    absent.add_argument("--alphabet", type=int, default=None)
    absent.add_argument("--method", choices=["trie", "lex"], default="trie")
    debruijn = ssub.add_parser("debruijn")
    debruijn.add_argument("--alphabet", type=int, required=True)
    debruijn.add_argument("--order", type=int, required=True)
    for p in (lccs, mwcs, absent, debruijn):
        p.add_argument("--alphabet-file", dest="alphabet_file", default=None)
        p.set_defaults(handler=_cmd_subseq)

    count = sub.add_parser("count", help="counting under occurrence constraints")
    cnt_sub = count.add_subparsers(dest="mode", required=True)
    constrained = cnt_sub.add_parser("constrained")
    constrained.add_argument("--spec", required=True)
    constrained.add_argument("--modulus", type=int, default=None)
    edfa = cnt_sub.add_parser("edfa")
    edfa.add_argument("--dfa", required=True)
    edfa.add_argument("--lens", required=True)
    maxweight = cnt_sub.add_parser("maxweight")
    maxweight.add_argument("--spec", required=True)
    maxweight.add_argument("--agg", default="sum")
    for p in (constrained, edfa, maxweight):
        p.set_defaults(handler=_cmd_count)
    constrained.set_defaults(dfa=None)
    maxweight.set_defaults(dfa=None)
    edfa.set_defaults(spec=None)

    oracle = sub.add_parser("oracle", help="brute-force reference answers")
    osub = oracle.add_subparsers(dest="mode", required=True)
    olpq = osub.add_parser("lpq")
    olpq.add_argument("--text", required=True)
    olpq.add_argument("--args", required=True)
    osc = osub.add_parser("shortest-common")
    osc.add_argument("--set-a", required=True)
    osc.add_argument("--set-b", required=True)
    osc.add_argument("--cap", type=int, default=12)
    oml = osub.add_parser("min-lex")
    oml.add_argument("--set", required=True)
    olccs = osub.add_parser("lccs")
    olccs.add_argument("--texts", required=True)
    olccs.add_argument("--thresholds", required=True)
    olccs.add_argument("--f", type=int, required=True)
    omwcs = osub.add_parser("mwcs")
    omwcs.add_argument("--texts", required=True)
    omwcs.add_argument("--weights", default=None)
    omwcs.add_argument("--agg1", default="sum")
    omwcs.add_argument("--agg2", default="min")
    oabs = osub.add_parser("absent")
    oabs.add_argument("--texts", required=True)
    oabs.add_argument("--alphabet", type=int, default=None)
    ocnt = osub.add_parser("count")
    ocnt.add_argument("--spec", required=True)
    for p in (olpq, osc, oml, olccs, omwcs, oabs, ocnt):
        p.set_defaults(handler=_cmd_oracle)

    st = sub.add_parser("selftest", help="seeded oracle-equivalence battery")
    st.add_argument("--seed", type=int, default=DEFAULT_SEED)
    st.add_argument("--inject-fault", choices=["lcp-flip"], default=None,
                    help="test hook: corrupt one lcp entry to force a failure")
    st.set_defaults(handler=None)

    return parser


_FILE_ARGS = ("set", "set_a", "set_b", "texts", "spec", "dfa", "weights",
              "alphabet_file")


def _input_digest(args) -> str:
    parts = [f"{k}={v}" for k, v in sorted(vars(args).items())
             if k not in ("handler", "report", "alphabet_file_chars")]
    for name in _FILE_ARGS:
        path = getattr(args, name, None)
        if path:
            try:
                with open(path, "rb") as fh:
                    parts.append(fh.read().decode("utf-8", "replace"))
            except OSError:
                parts.append(f"<unreadable {path}>")
    return _digest(parts)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "selftest":
        report = selftest(args.seed, args.inject_fault)
        print(report.to_json())
        return 0 if report.result["status"] == "ok" else 1
    if getattr(args, "alphabet_file", None):
        with open(args.alphabet_file, "r", encoding="utf-8") as fh:
            args.alphabet_file_chars = fh.read().strip()
    else:
        args.alphabet_file_chars = None
    started = time.perf_counter()
    try:
        payload = args.handler(args)
    except json.JSONDecodeError as exc:
        print(json.dumps({"error": f"malformed JSON: {exc.msg}",
                          "line": exc.lineno, "column": exc.colno}))
        return 1
    except (ValueError, KeyError, OSError) as exc:
        print(json.dumps({"error": str(exc)}))
        return 1
    if args.report:
        params = {k: v for k, v in vars(args).items()
                  if k not in ("handler", "report", "alphabet_file_chars")
                  and v is not None}
        report = RunReport(command=args.command, digest=_input_digest(args),
                           parameters=params, result=payload)
        print(f"{args.command} finished in "
              f"{(time.perf_counter() - started) * 1000:.0f} ms",
              file=sys.stderr)
        print(report.to_json())
    else:
        print(json.dumps(payload))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
