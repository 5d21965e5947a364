"""Exact arithmetic for automorphisms of the rooted m-ary tree."""

from .automaton import (
    DEFAULT_MEMO_BUDGET,
    DEFAULT_STATE_BOUND,
    Automaton,
    Automorphism,
    LazyAutomaton,
    act,
    commutator,
    compose,
    conjugate,
    equal,
    equal_at_depth,
    finite,
    from_recursion,
    from_rule,
    identity,
    inverse,
    is_trivial_at_depth,
    minimize,
    parse_word,
    power,
    power_recursion,
    PowerAutomaton,
    section,
    state_list,
    states,
    wreath,
)
from .permutation import Permutation
from .portrait import (
    Portrait,
    ambient_order,
    iter_ambient,
    portrait,
    tree_conj,
    tree_identity,
    tree_inv,
    tree_is_identity,
    tree_leaf_perm,
    tree_from_leaf_perm,
    tree_mul,
    tree_pow,
    tree_str,
)
from .textio import format_automaton, parse_automaton

__all__ = [
    "DEFAULT_MEMO_BUDGET",
    "DEFAULT_STATE_BOUND",
    "Automaton",
    "Automorphism",
    "LazyAutomaton",
    "Permutation",
    "Portrait",
    "act",
    "ambient_order",
    "commutator",
    "compose",
    "conjugate",
    "equal",
    "equal_at_depth",
    "finite",
    "format_automaton",
    "from_recursion",
    "from_rule",
    "identity",
    "inverse",
    "is_trivial_at_depth",
    "iter_ambient",
    "minimize",
    "parse_automaton",
    "parse_word",
    "portrait",
    "power",
    "power_recursion",
    "PowerAutomaton",
    "section",
    "state_list",
    "states",
    "tree_conj",
    "tree_from_leaf_perm",
    "tree_identity",
    "tree_inv",
    "tree_is_identity",
    "tree_leaf_perm",
    "tree_mul",
    "tree_pow",
    "tree_str",
    "wreath",
]
