"""Exact Gaussian elimination over the Gaussian rationals.

Rows are sparse ``{column: ComplexRational}`` dicts; the polynomial coefficient
matrices handled here are mostly zero.
"""
from __future__ import annotations

from typing import Sequence

from .rational import ComplexRational


class InconsistentSystem(ValueError):
    pass


def _eliminate(rows: list[dict], ncols: int | None = None) -> tuple[list[dict], list[int]]:
    """Reduced row-echelon form.  Returns (pivot rows, pivot columns)."""
    work = [dict(r) for r in rows if r]
    pivots: list[int] = []
    reduced: list[dict] = []
    cols = sorted({c for r in work for c in r}) if ncols is None else range(ncols)
    for col in cols:
        idx = next((i for i, r in enumerate(work) if col in r), None)
        if idx is None:
            continue
        prow = work.pop(idx)
        inv = prow[col].reciprocal()
        prow = {c: v * inv for c, v in prow.items()}
        for r in work + reduced:
            f = r.get(col)
            if f is None:
                continue
            for c, v in prow.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        work = [r for r in work if r]
        reduced.append(prow)
        pivots.append(col)
    return reduced, pivots


def rank(vectors: Sequence[dict]) -> int:
    """Rank of a family of sparse vectors."""
    return len(_eliminate(list(vectors))[1])


def solve(columns: Sequence[dict], target: dict) -> list[ComplexRational]:
    """Solve ``sum_k x_k columns[k] == target`` exactly.

    Raises :class:`InconsistentSystem` when no solution exists and
    ``ValueError`` when the columns are dependent (the solution is not unique).
    """
    n = len(columns)
    keys = sorted({k for col in columns for k in col} | set(target))
    rows = []
    for key in keys:
        row = {k: col[key] for k, col in enumerate(columns) if key in col}
        rhs = target.get(key)
        if rhs:
            row[n] = rhs
        if row:
            rows.append(row)
    reduced, pivots = _eliminate(rows, ncols=n + 1)
    if n in pivots:
        raise InconsistentSystem("target is not in the span of the columns")
    if len(pivots) < n:
        raise ValueError("columns are linearly dependent; solution not unique")
    x = [ComplexRational(0)] * n
    for row, col in zip(reduced, pivots):
        x[col] = row.get(n, ComplexRational(0))
    return x
