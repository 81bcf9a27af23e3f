"""Rank over F_2 with rows packed into Python ints."""

from __future__ import annotations

from typing import Iterable


def rank(rows: Iterable[int]) -> int:
    """Rank of a set of F_2 row vectors given as int bitmasks."""
    pivots: dict[int, int] = {}  # leading bit -> reduced row
    r = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            hit = pivots.get(lead)
            if hit is None:
                pivots[lead] = row
                r += 1
                break
            row ^= hit
    return r


def boundary_rank(boundaries: dict, index: dict) -> int:
    """Rank of a differential given as ``{basis_elt: iterable of basis_elts}``."""
    rows = []
    for targets in boundaries.values():
        mask = 0
        for t in targets:
            mask ^= 1 << index[t]
        rows.append(mask)
    return rank(rows)
