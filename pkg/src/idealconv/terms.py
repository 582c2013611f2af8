"""Symbolic set terms over the two universes.

A term is built from a closed atom vocabulary (empty, full, explicit
finite sets, tails on NAT, upper quadrants, single rows and columns on
NATPAIR, and partition blocks) combined with complement, union,
intersection and difference.  Terms denote honest infinite subsets;
membership of any single element is decidable by a tree walk, and
classification (empty / finite with exact cardinality / infinite) is
decided exactly by evaluating the term into one of two closed normal
forms:

* NAT terms evaluate to eventually periodic sets (natset.PeriodicSet);
* NATPAIR terms are constant on the cells of the breakpoint grid spanned
  by their atoms (pairset.PairGrid).

Both routes are total for the shipped vocabulary, so classification
never answers "unknown"; a missing case raises UnsupportedCombination
and is a bug by contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import UniverseMismatch, UnsupportedCombination
from .natset import PeriodicSet
from .pairset import PairGrid
from .partitions import Partition, block_contains, block_of
from .universe import Universe, check_element, elements_upto

__all__ = [
    "SetTerm",
    "Empty",
    "Full",
    "FiniteSet",
    "Tail",
    "UpperQuad",
    "Row",
    "Col",
    "Block",
    "Compl",
    "Union",
    "Inter",
    "Diff",
    "empty",
    "full",
    "finite_set",
    "tail",
    "upper_quad",
    "row",
    "col",
    "block",
    "compl",
    "union",
    "inter",
    "diff",
    "member",
    "truncate",
    "classify",
    "ClassifyResult",
    "nat_value",
    "pair_grid",
    "interval_set_to_term",
    "periodic_set_to_term",
]


class SetTerm:
    """Base class; subclasses are frozen dataclasses with a universe."""

    universe: Universe

    def __hash__(self):  # cached per node, terms are immutable
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self._key())
            object.__setattr__(self, "_hash", h)
        return h

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(other) is type(self) and other._key() == self._key()

    def __ne__(self, other):
        return not self.__eq__(other)


def _same_universe(ts):
    u = ts[0].universe
    for t in ts[1:]:
        if t.universe is not u:
            raise UniverseMismatch("term operands live on different universes")
    return u


@dataclass(frozen=True, eq=False)
class Empty(SetTerm):
    universe: Universe

    def _key(self):
        return ("empty", self.universe)



@dataclass(frozen=True, eq=False)
class Full(SetTerm):
    universe: Universe

    def _key(self):
        return ("full", self.universe)



@dataclass(frozen=True, eq=False)
class FiniteSet(SetTerm):
    universe: Universe
    elements: frozenset

    def _key(self):
        return ("finite", self.universe, self.elements)



@dataclass(frozen=True, eq=False)
class Tail(SetTerm):
    """{n : n >= start} on NAT."""

    start: int
    universe: Universe = field(default=Universe.NAT, init=False)

    def _key(self):
        return ("tail", self.start)



@dataclass(frozen=True, eq=False)
class UpperQuad(SetTerm):
    """{(a, b) : a >= start and b >= start} on NATPAIR."""

    start: int
    universe: Universe = field(default=Universe.NATPAIR, init=False)

    def _key(self):
        return ("upperquad", self.start)



@dataclass(frozen=True, eq=False)
class Row(SetTerm):
    """{(a, index) : a >= 1}: all pairs with second coordinate index."""

    index: int
    universe: Universe = field(default=Universe.NATPAIR, init=False)

    def _key(self):
        return ("row", self.index)



@dataclass(frozen=True, eq=False)
class Col(SetTerm):
    """{(index, b) : b >= 1}: all pairs with first coordinate index."""

    index: int
    universe: Universe = field(default=Universe.NATPAIR, init=False)

    def _key(self):
        return ("col", self.index)



@dataclass(frozen=True, eq=False)
class Block(SetTerm):
    partition: Partition
    index: int

    @property
    def universe(self):
        return self.partition.universe

    def _key(self):
        return ("block", self.partition.pid, self.index)



@dataclass(frozen=True, eq=False)
class Compl(SetTerm):
    term: SetTerm

    @property
    def universe(self):
        return self.term.universe

    def _key(self):
        return ("compl", self.term)



@dataclass(frozen=True, eq=False)
class Union(SetTerm):
    terms: tuple

    @property
    def universe(self):
        return self.terms[0].universe

    def _key(self):
        return ("union", self.terms)



@dataclass(frozen=True, eq=False)
class Inter(SetTerm):
    terms: tuple

    @property
    def universe(self):
        return self.terms[0].universe

    def _key(self):
        return ("inter", self.terms)



@dataclass(frozen=True, eq=False)
class Diff(SetTerm):
    left: SetTerm
    right: SetTerm

    @property
    def universe(self):
        return self.left.universe

    def _key(self):
        return ("diff", self.left, self.right)



# -- constructors ------------------------------------------------------


def empty(universe: Universe) -> SetTerm:
    return Empty(universe)


def full(universe: Universe) -> SetTerm:
    return Full(universe)


def finite_set(universe: Universe, elems) -> SetTerm:
    elems = frozenset(elems)
    for e in elems:
        check_element(universe, e)
    return FiniteSet(universe, elems)


def tail(start: int) -> SetTerm:
    assert start >= 1
    return Tail(start)


def upper_quad(start: int) -> SetTerm:
    assert start >= 1
    return UpperQuad(start)


def row(index: int) -> SetTerm:
    assert index >= 1
    return Row(index)


def col(index: int) -> SetTerm:
    assert index >= 1
    return Col(index)


def block(partition: Partition, index: int) -> SetTerm:
    assert index >= 1
    if not partition.infinitely_many_infinite_blocks and partition.modulus is not None:
        assert index <= partition.modulus, "residue class index exceeds modulus"
    return Block(partition, index)


def compl(t: SetTerm) -> SetTerm:
    return Compl(t)


def union(*ts: SetTerm) -> SetTerm:
    assert ts
    _same_universe(ts)
    return Union(tuple(ts))


def inter(*ts: SetTerm) -> SetTerm:
    assert ts
    _same_universe(ts)
    return Inter(tuple(ts))


def diff(a: SetTerm, b: SetTerm) -> SetTerm:
    _same_universe((a, b))
    return Diff(a, b)


# -- pointwise membership ----------------------------------------------


def member(t: SetTerm, e) -> bool:
    """Decide e in t by structural recursion; total for the vocabulary."""
    check_element(t.universe, e)
    return _member(t, e)


def _member(t: SetTerm, e) -> bool:
    if isinstance(t, Empty):
        return False
    if isinstance(t, Full):
        return True
    if isinstance(t, FiniteSet):
        return e in t.elements
    if isinstance(t, Tail):
        return e >= t.start
    if isinstance(t, UpperQuad):
        return e[0] >= t.start and e[1] >= t.start
    if isinstance(t, Row):
        return e[1] == t.index
    if isinstance(t, Col):
        return e[0] == t.index
    if isinstance(t, Block):
        return block_contains(t.partition, t.index, e)
    if isinstance(t, Compl):
        return not _member(t.term, e)
    if isinstance(t, Union):
        return any(_member(s, e) for s in t.terms)
    if isinstance(t, Inter):
        return all(_member(s, e) for s in t.terms)
    if isinstance(t, Diff):
        return _member(t.left, e) and not _member(t.right, e)
    raise UnsupportedCombination(f"no membership rule for {type(t).__name__}")


def truncate(t: SetTerm, bound: int):
    """Members with every coordinate <= bound, in canonical order.

    Deliberately implemented by brute enumeration over the box so that it
    is an independent route against the symbolic classification.
    """
    return [e for e in elements_upto(t.universe, bound) if _member(t, e)]


# -- evaluation to closed normal forms ---------------------------------


@lru_cache(maxsize=None)
def nat_value(t: SetTerm) -> PeriodicSet:
    """Evaluate a NAT term to its eventually periodic set."""
    if t.universe is not Universe.NAT:
        raise UniverseMismatch("nat_value requires a NAT term")
    return _nat_value(t)


def _nat_value(t: SetTerm) -> PeriodicSet:
    if isinstance(t, Empty):
        return PeriodicSet.empty()
    if isinstance(t, Full):
        return PeriodicSet.full()
    if isinstance(t, FiniteSet):
        return PeriodicSet.from_finite(t.elements)
    if isinstance(t, Tail):
        return PeriodicSet.from_tail(t.start)
    if isinstance(t, Block):
        p = t.partition
        if p.pid == "ruler":
            return PeriodicSet.from_residue(1 << t.index, 1 << (t.index - 1))
        if p.modulus is not None:
            return PeriodicSet.from_residue(p.modulus, t.index % p.modulus)
        raise UnsupportedCombination(f"no NAT evaluation for partition {p.pid}")
    if isinstance(t, Compl):
        return _nat_value(t.term).compl()
    if isinstance(t, Union):
        acc = _nat_value(t.terms[0])
        for s in t.terms[1:]:
            acc = acc.union(_nat_value(s))
        return acc
    if isinstance(t, Inter):
        acc = _nat_value(t.terms[0])
        for s in t.terms[1:]:
            acc = acc.inter(_nat_value(s))
        return acc
    if isinstance(t, Diff):
        return _nat_value(t.left).diff(_nat_value(t.right))
    raise UnsupportedCombination(f"no NAT evaluation rule for {type(t).__name__}")


def _breaks(t: SetTerm, xs: set, ys: set):
    if isinstance(t, (Empty, Full)):
        return
    if isinstance(t, FiniteSet):
        for a, b in t.elements:
            xs.update((a, a + 1))
            ys.update((b, b + 1))
        return
    if isinstance(t, UpperQuad):
        xs.add(t.start)
        ys.add(t.start)
        return
    if isinstance(t, Row):
        ys.update((t.index, t.index + 1))
        return
    if isinstance(t, Col):
        xs.update((t.index, t.index + 1))
        return
    if isinstance(t, Block):
        pid = t.partition.pid
        if pid == "columns":
            xs.update((t.index, t.index + 1))
            return
        if pid == "corner":
            xs.update((t.index, t.index + 1))
            ys.update((t.index, t.index + 1))
            return
        raise UnsupportedCombination(f"partition {pid} has no pair-grid rule")
    if isinstance(t, Compl):
        _breaks(t.term, xs, ys)
        return
    if isinstance(t, (Union, Inter)):
        for s in t.terms:
            _breaks(s, xs, ys)
        return
    if isinstance(t, Diff):
        _breaks(t.left, xs, ys)
        _breaks(t.right, xs, ys)
        return
    raise UnsupportedCombination(f"no breakpoint rule for {type(t).__name__}")


@lru_cache(maxsize=None)
def pair_grid(t: SetTerm) -> PairGrid:
    """Evaluate a NATPAIR term to its breakpoint grid.

    Every atom's membership is constant on each grid cell (the cuts
    include every threshold an atom mentions), so sampling one
    representative per cell determines the term everywhere.
    """
    if t.universe is not Universe.NATPAIR:
        raise UniverseMismatch("pair_grid requires a NATPAIR term")
    xs, ys = {1}, {1}
    _breaks(t, xs, ys)
    xcuts = tuple(sorted(xs))
    ycuts = tuple(sorted(ys))
    truth = tuple(
        tuple(_member(t, (a, b)) for b in ycuts) for a in xcuts
    )
    return PairGrid(xcuts, ycuts, truth)


# -- classification -----------------------------------------------------

_ELEMENT_LIST_CAP = 10_000


@dataclass(frozen=True)
class ClassifyResult:
    kind: str  # "empty" | "finite" | "infinite"
    cardinality: int | None = None  # exact, finite case only
    elements: tuple | None = None  # present when small enough

    def is_empty(self):
        return self.kind == "empty"

    def is_finite(self):
        return self.kind != "infinite"


@lru_cache(maxsize=None)
def classify(t: SetTerm) -> ClassifyResult:
    """Exact classification of the term's denotation."""
    if t.universe is Universe.NAT:
        v = nat_value(t)
        if not v.is_finite():
            return ClassifyResult("infinite")
        elems = tuple(v.elements())
    else:
        g = pair_grid(t)
        if not g.is_finite():
            return ClassifyResult("infinite")
        elems = tuple(g.elements())
    if not elems:
        return ClassifyResult("empty", 0, ())
    if len(elems) > _ELEMENT_LIST_CAP:
        return ClassifyResult("finite", len(elems), None)
    return ClassifyResult("finite", len(elems), elems)


# -- conversions back to terms ------------------------------------------


def interval_set_to_term(iset) -> SetTerm:
    """Rebuild a NAT term from an IntervalSet (exact)."""
    finite_elems = []
    tail_start = None
    for lo, hi in iset.spans:
        if hi is None:
            tail_start = lo
        else:
            finite_elems.extend(range(lo, hi + 1))
    parts = []
    if finite_elems:
        parts.append(finite_set(Universe.NAT, finite_elems))
    if tail_start is not None:
        parts.append(tail(tail_start))
    if not parts:
        return empty(Universe.NAT)
    return parts[0] if len(parts) == 1 else union(*parts)


def periodic_set_to_term(v: PeriodicSet) -> SetTerm:
    """Rebuild a NAT term denoting exactly the given periodic set."""
    from .partitions import residues  # local to avoid cycle at import time

    parts = []
    if v.below:
        parts.append(finite_set(Universe.NAT, v.below))
    for r in sorted(v.residues):
        cls = block(residues(v.period), r if r != 0 else v.period)
        parts.append(inter(cls, tail(v.threshold)))
    if not parts:
        return empty(Universe.NAT)
    return parts[0] if len(parts) == 1 else union(*parts)
