"""Exact algebra of eventually periodic subsets of the positive integers.

A PeriodicSet represents a set S by a finite part below a threshold T and
a residue pattern from T on: for n >= T, n is in S iff n mod p lies in a
fixed residue set.  Finite sets, tails {n : n >= m} and arithmetic
residue classes all live here, and the class is closed under the Boolean
operations, so every term over those atoms can be classified exactly:
the set is infinite iff the residue pattern is nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = ["PeriodicSet", "v2"]


def v2(n: int) -> int:
    """2-adic valuation of a positive integer."""
    assert n >= 1
    return (n & -n).bit_length() - 1


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@dataclass(frozen=True)
class PeriodicSet:
    """Invariants: threshold >= 1, period >= 1, below is a subset of
    [1, threshold), residues is a subset of [0, period)."""

    threshold: int
    period: int
    residues: frozenset
    below: frozenset

    # -- constructors ------------------------------------------------

    @staticmethod
    def empty() -> "PeriodicSet":
        return PeriodicSet(1, 1, frozenset(), frozenset())

    @staticmethod
    def full() -> "PeriodicSet":
        return PeriodicSet(1, 1, frozenset({0}), frozenset())

    @staticmethod
    def from_finite(elems) -> "PeriodicSet":
        elems = frozenset(elems)
        assert all(isinstance(n, int) and n >= 1 for n in elems)
        t = max(elems) + 1 if elems else 1
        return PeriodicSet(t, 1, frozenset(), elems)

    @staticmethod
    def from_tail(m: int) -> "PeriodicSet":
        assert m >= 1
        return PeriodicSet(m, 1, frozenset({0}), frozenset())

    @staticmethod
    def from_residue(modulus: int, r: int) -> "PeriodicSet":
        """The class {n >= 1 : n = r (mod modulus)}."""
        assert modulus >= 1
        return PeriodicSet(1, modulus, frozenset({r % modulus}), frozenset())

    # -- membership --------------------------------------------------

    def contains(self, n: int) -> bool:
        if n < self.threshold:
            return n in self.below
        return (n % self.period) in self.residues

    # -- Boolean algebra ---------------------------------------------

    def _combine(self, other: "PeriodicSet", op) -> "PeriodicSet":
        t = max(self.threshold, other.threshold)
        p = _lcm(self.period, other.period)
        residues = frozenset(
            r
            for r in range(p)
            if op((r % self.period) in self.residues, (r % other.period) in other.residues)
        )
        below = frozenset(
            n for n in range(1, t) if op(self.contains(n), other.contains(n))
        )
        return PeriodicSet(t, p, residues, below)._reduced()

    def union(self, other):
        return self._combine(other, lambda a, b: a or b)

    def inter(self, other):
        return self._combine(other, lambda a, b: a and b)

    def diff(self, other):
        return self._combine(other, lambda a, b: a and not b)

    def compl(self) -> "PeriodicSet":
        residues = frozenset(range(self.period)) - self.residues
        below = frozenset(range(1, self.threshold)) - self.below
        return PeriodicSet(self.threshold, self.period, residues, below)

    def _reduced(self) -> "PeriodicSet":
        # Shrink the period to the smallest divisor under which the
        # residue pattern is shift-invariant; keeps lcm growth in check.
        p, res = self.period, self.residues
        for d in sorted(_divisors(p)):
            if d == p:
                break
            if all(((r + d) % p in res) == (r in res) for r in range(p)):
                return PeriodicSet(
                    self.threshold, d, frozenset(r % d for r in res), self.below
                )
        return self

    # -- classification ----------------------------------------------

    def is_finite(self) -> bool:
        return not self.residues

    def is_empty(self) -> bool:
        return not self.residues and not self.below

    def elements(self):
        """Sorted members; only valid when the set is finite."""
        assert self.is_finite()
        return sorted(self.below)

    def truncate(self, bound: int):
        return [n for n in range(1, bound + 1) if self.contains(n)]

    # -- block incidence under the dyadic valuation partition ---------

    def ruler_incidence(self):
        """Which dyadic blocks {n : v2(n) = i-1} this set meets.

        Returns (finite, indices): indices is the exact set of met block
        indices when finite, else None.  A residue class r mod p meets a
        single block when r != 0 and v2(r) < v2(p), and infinitely many
        blocks otherwise.
        """
        indices = set()
        a = v2(self.period) if self.period % 2 == 0 else 0
        for r in self.residues:
            if r == 0 or v2(r) >= a:
                return (False, None)
            indices.add(v2(r) + 1)
        indices.update(v2(n) + 1 for n in self.below)
        return (True, frozenset(indices))


def _divisors(p: int):
    out = []
    d = 1
    while d * d <= p:
        if p % d == 0:
            out.append(d)
            out.append(p // d)
        d += 1
    return out
