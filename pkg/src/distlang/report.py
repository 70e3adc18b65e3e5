from __future__ import annotations

from dataclasses import asdict, dataclass

from .automata import Dfa, dead_state, minimize
from .closures import ClosureKind, is_closed


@dataclass(frozen=True)
class LangReport:
    state_complexity: int
    has_empty_quotient: bool
    is_suffix_closed: bool
    is_prefix_closed: bool
    is_infix_closed: bool
    is_empty: bool
    is_universal: bool

    def as_dict(self) -> dict:
        return asdict(self)


def report(dfa: Dfa) -> LangReport:
    m = minimize(dfa)
    return LangReport(
        state_complexity=m.n,
        has_empty_quotient=dead_state(m) is not None,
        is_suffix_closed=is_closed(m, ClosureKind.SUFFIX),
        is_prefix_closed=is_closed(m, ClosureKind.PREFIX),
        is_infix_closed=is_closed(m, ClosureKind.INFIX),
        is_empty=not m.finals,
        is_universal=m.n == 1 and bool(m.finals),
    )
