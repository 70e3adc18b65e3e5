"""Table of state complexities and fixed-point indices over the witness families."""
from __future__ import annotations

import csv
import io
import random
from typing import Iterator, Optional

from .automata import Dfa, minimize
from .distinguish import dist, iterate
from .minwords import dist_min
from .oracle import random_reduced_dfa
from .witnesses import FAMILIES, generate

CSV_HEADER = ("family", "n", "sc_L", "sc_D", "sc_E", "sc_F", "dmin_size", "fix_D", "fix_E", "fix_F")


def row(family: str, n, dfa: Dfa) -> dict:
    m = minimize(dfa)
    return {
        "family": family,
        "n": "" if n is None else n,
        "sc_L": m.n,
        "sc_D": dist(m, "left").n,
        "sc_E": dist(m, "right").n,
        "sc_F": dist(m, "two-sided").n,
        "dmin_size": len(dist_min(m)),
        "fix_D": iterate(m, "left").fixed_point_index,
        "fix_E": iterate(m, "right").fixed_point_index,
        "fix_F": iterate(m, "two-sided").fixed_point_index,
    }


def _family_params(family: str, lowest, max_n: int):
    if lowest is None:
        return [None]
    if family == "suffix_Wm":
        # sc(W_m) = m + 3, so cap m to keep sc within max_n
        return range(0, max(max_n - 2, 0))
    if family == "example_6_pair":
        return [1, 2]
    return range(lowest, max_n + 1)


def reproduction_tables(max_n: int = 8, seed: int = 0, random_rows: int = 10,
                        max_random_n: Optional[int] = None) -> Iterator[dict]:
    """Rows for every family up to ``max_n``, then ``random_rows`` seeded random DFAs."""
    for family, (_, lowest) in FAMILIES.items():
        if family.startswith("example_6_pair_"):
            continue
        for n in _family_params(family, lowest, max_n):
            yield row(family, n, generate(family, n))
    rng = random.Random(seed)
    top = max_random_n or min(max_n, 6)
    for _ in range(random_rows):
        s = rng.randrange(2**32)
        n = rng.randint(1, top)
        yield row(f"random:{s}", n, random_reduced_dfa(s, n, 2))


def to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
