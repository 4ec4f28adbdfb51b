"""String-algorithm toolkit: prefix queries on failure trees, optimal
concatenations, constrained common substrings and subsequences, shortest
absent substrings, and counting under substring occurrence constraints."""

from .primitives import (
    Text,
    SuffixIndex,
    RollingHash,
    Trie,
    PatternAutomaton,
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
from .prefix_queries import FailureTree, build_failure_tree
from .concatenation import (
    MatchTable,
    build_match_table,
    min_lex_concat,
    shortest_common_concat,
    shortest_palindrome_concat,
)
from .subsequences import (
    AggPair,
    RangeMaxIndex,
    de_bruijn_superstring,
    lccs_constrained,
    max_weight_common_subsequence,
    shortest_non_substring_lexicographic,
    shortest_non_substring_trie,
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

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
