"""Exact sparse echelon forms over dict-vectors.

A vector is a ``dict`` mapping hashable coordinates to nonzero scalars.  The
coordinate order is supplied as a sort key; the *leading* coordinate of a
vector is its maximum under that key.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable

Vector = dict


def add_into(target: dict, source: dict, scale=1) -> dict:
    for k, c in source.items():
        v = target.get(k, 0) + scale * c
        if v == 0:
            target.pop(k, None)
        else:
            target[k] = v
    return target


def scaled(vec: dict, c) -> dict:
    if c == 0:
        return {}
    return {k: c * v for k, v in vec.items()}


class Echelon:
    """Incrementally maintained echelon basis with monic pivot rows.

    With ``track=True`` every row remembers the combination of inserted
    vectors (by insertion index) that produced it, so dependencies found by
    :meth:`insert` come back as explicit relations.
    """

    def __init__(self, key: Callable[[Hashable], object] = lambda k: k, track: bool = False):
        self.key = key
        self.track = track
        self.rows: dict = {}          # lead -> row vector
        self.combos: dict = {}        # lead -> tracker
        self.order: list = []         # leads in insertion order
        self._count = 0

    def __len__(self):
        return len(self.rows)

    def lead(self, vec: dict):
        return max(vec, key=self.key)

    def reduce(self, vec: dict, tracker: dict | None = None):
        """Top-reduce a copy of vec; returns (remainder, tracker)."""
        vec = dict(vec)
        tracker = dict(tracker) if tracker is not None else None
        while vec:
            lead = self.lead(vec)
            row = self.rows.get(lead)
            if row is None:
                break
            c = vec[lead]
            add_into(vec, row, -c)
            if tracker is not None:
                add_into(tracker, self.combos[lead], -c)
        return vec, tracker

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def insert(self, vec: dict):
        """Add vec to the span.

        Returns ``(True, None)`` when the rank grew and ``(False, relation)``
        otherwise; ``relation`` is the tracked combination of inserted vectors
        that vanishes (None when tracking is off).
        """
        idx = self._count
        self._count += 1
        tracker = {idx: Fraction(1)} if self.track else None
        rem, tracker = self.reduce(vec, tracker)
        if not rem:
            return False, tracker
        lead = self.lead(rem)
        inv = 1 / rem[lead]
        self.rows[lead] = scaled(rem, inv)
        if self.track:
            self.combos[lead] = scaled(tracker, inv)
        self.order.append(lead)
        return True, None

    def extend(self, vecs: Iterable[dict]) -> int:
        grown = 0
        for v in vecs:
            grown += self.insert(v)[0]
        return grown

    def reduced_rows(self) -> list[dict]:
        """Fully interreduced rows sorted by increasing leading coordinate."""
        leads = sorted(self.rows, key=self.key)
        out: dict = {}
        for lead in leads:
            row = dict(self.rows[lead])
            # lower rows are already reduced, so one pass clears every pivot
            for other in list(row):
                c = row.get(other, 0)
                if other != lead and c != 0 and other in out:
                    add_into(row, out[other], -c)
            out[lead] = row
        return [out[lead] for lead in leads]


def kernel(columns: list[dict], key=lambda k: k) -> list[dict]:
    """Basis of {c : sum_j c_j * columns[j] = 0}, as dicts index -> scalar."""
    ech = Echelon(key=key, track=True)
    relations = []
    for col in columns:
        grew, rel = ech.insert(col)
        if not grew:
            relations.append(rel)
    return relations


def dense_rank(rows: list[list]) -> int:
    """Rank of a dense matrix by plain Gaussian elimination (used as an oracle)."""
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank
