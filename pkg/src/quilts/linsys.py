"""Incremental exact linear algebra over the integers.

Equations arrive one at a time as integer coefficient rows.  Each row is
reduced against the rows already stored, keyed by earliest unknown, and
either contributes new information, is redundant, or exposes a
contradiction.  All arithmetic is exact; every stored or intermediate row
is divided through by the gcd of its entries (constant included) so
coefficients stay as small as possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

NEW_INFORMATION = "new-information"
REDUNDANT = "redundant"
INCONSISTENT = "inconsistent"

WIDTH_FIXED = "fixed"
WIDTH_ARBITRARY = "arbitrary"
WIDTH_AUTO = "auto"

# Budget for the simulated fixed-width mode.  Exceeding it never produces a
# wrong answer; the system just records the escalation to big integers.
FIXED_WIDTH_BUDGET = 1 << 63


@dataclass(frozen=True)
class UniqueSolution:
    """Exact solution vector, one Fraction in lowest terms per unknown."""

    values: tuple

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]


@dataclass(frozen=True)
class Underdetermined:
    """Unsolvable-as-unique outcome carrying the free unknown indices."""

    free_unknowns: tuple


def _gcd_reduce(coeffs: list, const: int) -> int:
    """Divide coeffs and const in place by their common gcd, return it."""
    g = abs(const)
    for c in coeffs:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                return const
    if g > 1:
        for i, c in enumerate(coeffs):
            if c:
                coeffs[i] = c // g
        const //= g
    return const


class LinearSystem:
    """Row store for incremental integer Gaussian elimination.

    Rows are kept in echelon form keyed by pivot column.  Stored rows are
    never modified, which makes rollback a matter of deleting the pivots
    recorded since a snapshot.

    Args:
        unknown_count: Number of columns (unknowns x_0 .. x_{k-1}).
        width_mode: "fixed", "arbitrary" or "auto".  Fixed and auto track
            the largest absolute entry ever produced and count escalations
            past the fixed-width budget; arbitrary skips the bookkeeping.
    """

    def __init__(self, unknown_count: int, width_mode: str = WIDTH_AUTO):
        if width_mode not in (WIDTH_FIXED, WIDTH_ARBITRARY, WIDTH_AUTO):
            raise ValueError("unknown width mode: %r" % (width_mode,))
        self.unknown_count = unknown_count
        self.width_mode = width_mode
        self.max_abs_entry = 0
        self.escalations = 0
        self._rows = {}          # pivot column -> (coeff tuple, const)
        self._journal = []       # pivots in insertion order, for rollback

    @property
    def row_count(self) -> int:
        return len(self._rows)

    @property
    def escalated(self) -> bool:
        return self.escalations > 0

    def _note_magnitudes(self, coeffs, const) -> None:
        m = max(max(abs(c) for c in coeffs), abs(const))
        if m > self.max_abs_entry:
            self.max_abs_entry = m
            if m >= FIXED_WIDTH_BUDGET:
                self.escalations += 1

    def add_equation(self, coeffs: Sequence[int], const: int) -> str:
        """Feed one equation sum(coeffs[i] * x_i) == const.

        Returns:
            NEW_INFORMATION, REDUNDANT or INCONSISTENT.  Only the first
            outcome changes the stored state.
        """
        if len(coeffs) != self.unknown_count:
            raise ValueError("expected %d coefficients, got %d"
                             % (self.unknown_count, len(coeffs)))
        row = list(coeffs)
        const = _gcd_reduce(row, const)
        track = self.width_mode != WIDTH_ARBITRARY
        rows = self._rows
        while True:
            pivot = -1
            for i, c in enumerate(row):
                if c:
                    pivot = i
                    break
            if pivot < 0:
                return REDUNDANT if const == 0 else INCONSISTENT
            stored = rows.get(pivot)
            if stored is None:
                if row[pivot] < 0:
                    row = [-c for c in row]
                    const = -const
                if track:
                    self._note_magnitudes(row, const)
                rows[pivot] = (tuple(row), const)
                self._journal.append(pivot)
                return NEW_INFORMATION
            srow, sconst = stored
            a = row[pivot]
            b = srow[pivot]
            row = [b * x - a * y for x, y in zip(row, srow)]
            const = b * const - a * sconst
            if track:
                self._note_magnitudes(row, const)
            const = _gcd_reduce(row, const)

    def snapshot(self) -> int:
        """Return a token for the current state, for use with rollback."""
        return len(self._journal)

    def rollback(self, token: int) -> None:
        """Discard every row stored since snapshot() returned token."""
        journal = self._journal
        while len(journal) > token:
            del self._rows[journal.pop()]

    def solve(self) -> Union[UniqueSolution, Underdetermined]:
        """Back-substitute the echelon rows.

        Returns:
            UniqueSolution when every unknown has a pivot row, otherwise
            Underdetermined listing the pivotless (free) unknowns.
        """
        rows = self._rows
        n = self.unknown_count
        if len(rows) < n:
            free = tuple(i for i in range(n) if i not in rows)
            return Underdetermined(free)
        values = [Fraction(0)] * n
        for pivot in sorted(rows, reverse=True):
            coeffs, const = rows[pivot]
            acc = Fraction(const)
            for j in range(pivot + 1, n):
                c = coeffs[j]
                if c:
                    acc -= c * values[j]
            values[pivot] = acc / coeffs[pivot]
        return UniqueSolution(tuple(values))

    def stored_rows(self):
        """Yield (pivot, coeffs, const) in pivot order, for inspection."""
        for pivot in sorted(self._rows):
            coeffs, const = self._rows[pivot]
            yield pivot, coeffs, const
