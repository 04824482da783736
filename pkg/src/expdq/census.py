"""Cospectral classes over a list of graphs, for D_q, A and D.

D_q candidates are bucketed by their characteristic polynomials at q = 2 and
q = 3 (integer arithmetic), and every bucket is then split by the symbolic
polynomial, so a pre-filter collision can never produce a false class.  The
distance matrix is only used for connected graphs.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .expdist import adjacency_charpoly, charpoly, charpoly_at_q, distance_charpoly
from .graph import is_connected, parse_graph6

MATRICES = ("dq", "a", "d")


def _keys(g6: str, matrices: tuple[str, ...]) -> dict:
    g = parse_graph6(g6)
    out = {}
    if "dq" in matrices:
        out["dq"] = (charpoly_at_q(g, 2), charpoly_at_q(g, 3))
    if "a" in matrices:
        out["a"] = adjacency_charpoly(g)
    if "d" in matrices and is_connected(g):
        out["d"] = distance_charpoly(g)
    return out


def _symbolic(g6: str) -> str:
    return str(charpoly(parse_graph6(g6)))


@dataclass
class CensusReport:
    count: int
    classes: dict[str, list[list[str]]] = field(default_factory=dict)

    def pairs(self, matrix: str) -> set[tuple[str, str]]:
        out = set()
        for cls in self.classes.get(matrix, []):
            out.update(itertools.combinations(cls, 2))
        return out

    def crosstab(self) -> dict[str, int]:
        """Pair counts for every matrix, and for D_q against D."""
        out = {f"{m}_pairs": len(self.pairs(m)) for m in self.classes}
        if "dq" in self.classes and "d" in self.classes:
            dq, d = self.pairs("dq"), self.pairs("d")
            out["dq_and_d"] = len(dq & d)
            out["dq_not_d"] = len(dq - d)
            out["d_not_dq"] = len(d - dq)
        return out


def _group(items: Iterable[tuple[str, object]]) -> list[list[str]]:
    buckets: dict = {}
    for g6, key in items:
        buckets.setdefault(key, []).append(g6)
    return [sorted(v) for v in buckets.values() if len(v) > 1]


def census(
    graph6_lines: Sequence[str], matrices: Iterable[str] = MATRICES, jobs: int = 1
) -> CensusReport:
    """Cospectral classes per matrix; inputs are assumed pairwise non-isomorphic.

    The result does not depend on input order or on ``jobs``.
    """
    matrices = tuple(m for m in MATRICES if m in set(matrices))
    lines = list(graph6_lines)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            keys = list(pool.map(_keys, lines, itertools.repeat(matrices), chunksize=32))
    else:
        keys = [_keys(s, matrices) for s in lines]

    report = CensusReport(count=len(lines))
    for m in matrices:
        classes = _group((s, k[m]) for s, k in zip(lines, keys) if m in k)
        if m == "dq" and classes:
            members = sorted({s for c in classes for s in c})
            if jobs > 1:
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    sym = dict(zip(members, pool.map(_symbolic, members)))
            else:
                sym = {s: _symbolic(s) for s in members}
            classes = [c2 for c in classes for c2 in _group((s, sym[s]) for s in c)]
        report.classes[m] = sorted(classes)
    return report
