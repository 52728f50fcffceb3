"""Counting and uniform sampling of positive braids as Artin words."""

from .automaton import LexAutomaton, build_automaton, check_minimality
from .counting import count_with_prefix, reference_count
from .growth import GrowthTables, get_tables
from .perm_braids import PermBraid, lcm
from .prefixes import f_for_word, f_to_set, step_f
from .sampler import RandomSource, SampleRequest, naive_sample, rank, sample, unrank
from .words import ArtinWord, BraidError, format_word, lex_compare, parse_word

__all__ = [
    "ArtinWord",
    "BraidError",
    "GrowthTables",
    "LexAutomaton",
    "PermBraid",
    "RandomSource",
    "SampleRequest",
    "build_automaton",
    "check_minimality",
    "count_with_prefix",
    "f_for_word",
    "f_to_set",
    "format_word",
    "get_tables",
    "lcm",
    "lex_compare",
    "naive_sample",
    "parse_word",
    "rank",
    "reference_count",
    "sample",
    "step_f",
    "unrank",
]
