"""Cross-check every construction on one automaton against the brute-force oracle."""
from __future__ import annotations

from dataclasses import dataclass

from .automata import Dfa, equivalent, minimize
from .closures import ClosureKind, closure
from .distinguish import dist, dist_by_quotients, dist_direct, right_dist_by_reversal
from .minwords import dist_min
from .oracle import (
    bounded,
    dist_bruteforce,
    dist_min_bruteforce,
    infix_bruteforce,
    infix_dist_bruteforce,
    pref_bruteforce,
    pref_dist_bruteforce,
    suff_bruteforce,
)
from .words import format_word


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""
    skipped: bool = False


def _bounded_check(name, built, reference, depth, names):
    got = bounded(built, depth)
    bad = got.mismatches(reference)
    detail = "" if not bad else f"{len(bad)} mismatches, first {format_word(bad[0], names)}"
    return Check(name, not bad, detail)


def cross_check(dfa: Dfa, depth: int = 6, product_limit: int = 6) -> list:
    """Bounded comparisons up to ``depth`` plus exact equivalences between alternative routes.

    The n-way quotient product can reach n^n states, so it is only run when
    sc(L) is at most ``product_limit``.
    """
    m = minimize(dfa)
    names = m.symbol_names
    d = dist(m, "left")
    e = dist(m, "right")
    checks = [
        _bounded_check("D", d, dist_bruteforce(m, depth), depth, names),
        _bounded_check("E", e, pref_dist_bruteforce(m, depth), depth, names),
        _bounded_check("F", dist(m, "two-sided"), infix_dist_bruteforce(m, depth), depth, names),
        _bounded_check("suff", closure(m, ClosureKind.SUFFIX), suff_bruteforce(m, depth), depth, names),
        _bounded_check("pref", closure(m, ClosureKind.PREFIX), pref_bruteforce(m, depth), depth, names),
        _bounded_check("infix", closure(m, ClosureKind.INFIX), infix_bruteforce(m, depth), depth, names),
        Check("D direct", equivalent(dist_direct(m), d)),
        Check("E by reversal", equivalent(right_dist_by_reversal(m), e)),
    ]
    if m.n <= product_limit:
        checks.append(Check("D by quotients", equivalent(dist_by_quotients(m), d)))
    else:
        checks.append(Check("D by quotients", True, f"sc {m.n} above product limit {product_limit}", True))
    fast, slow = dist_min(m), dist_min_bruteforce(m, max(m.n - 1, 0))
    checks.append(Check("dist_min", fast == slow, "" if fast == slow else f"{fast} vs {slow}"))
    return checks
