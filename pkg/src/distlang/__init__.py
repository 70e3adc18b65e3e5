"""Distinguishability languages of regular languages: D, E, F, minimal distinguishing words and learning."""
from .automata import (
    AND,
    DIFF,
    OR,
    XOR,
    AlphabetMismatch,
    Dfa,
    Nfa,
    canonical,
    complement,
    complete,
    determinize,
    equivalent,
    has_empty_quotient,
    isomorphic,
    minimize,
    product,
    quotients,
    reverse,
    state_complexity,
    trim,
)
from .closures import ClosureKind, closure, combinator, is_closed
from .distinguish import (
    DistKind,
    InvariantViolation,
    IterationTrace,
    NoFixedPoint,
    classify_fixed_point,
    dist,
    dist_direct,
    dist_pair,
    iterate,
)
from .learner import LearnError, LearnResult, MembershipOracle, cover_check, equivalent_words, learn
from .minwords import (
    atom_signatures,
    dist_min,
    dist_min_trace,
    infix_dist_min_bruteforce,
    iterate_min,
    pref_dist_min,
)
from .report import LangReport, report
from .witnesses import generate

__all__ = [name for name in dir() if not name.startswith("_")]
