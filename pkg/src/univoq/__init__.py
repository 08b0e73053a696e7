"""Exact tools for unique expansions in non-integer bases."""

__version__ = "0.1.0"

from .words import EPWord, Word, complement, format_word, lex_compare, parse_epword, parse_word
from .exact import (AlgebraicBase, FieldElement, IntervalApprox, base_from_word, make_base,
                    parse_base, poly_root_base, rational_base, sign_of)
from .expansion import (alpha_ep, alpha_of, alpha_prefix, count_expansion_branches,
                        detect_eventual_periodicity, greedy_digits, greedy_finite_to_quasi,
                        quasi_greedy_digits, value_of)
from .classify import (BaseClassification, Verdict3, base_in_U, base_in_U_closure, base_in_V,
                       classify_base, is_alpha_admissible, is_greedy_admissible,
                       is_quasi_greedy_admissible, is_univoque_sequence, is_V_sequence,
                       point_in_Vq)
from .enumeration import (CountSeries, SurvivorAutomaton, build_automaton,
                          count_univoque_prefixes, decomposition_check, diff_prefixes,
                          enumerate_Vq_minus_Uq, find_base_with_beta_prefix, find_V_elements,
                          g_prime_equals_v_prime_check, survivors)
from .constants import alpha_prefix_interval, komornik_loreti, named_base, thue_morse
from .config import Config
