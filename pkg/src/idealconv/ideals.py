"""Ideal catalog and decision procedures.

An ideal here is a symbolic descriptor; membership of a term is decided
by rules that are exact for every catalog combination (no sampling).
The catalog:

    fin(u)                  finite subsets of the universe
    improper(u)             the whole power set
    principal(t)            subsets of a fixed term t
    partition_ideal(p)      terms meeting finitely many blocks of p
    pringsheim()            terms avoiding some upper quadrant modulo a
                            bounded strip; equals partition_ideal(CORNER)
    uniform_product(l, k)   NATPAIR terms whose first k columns project
                            into a member of l, uniformly
    pointwise_product(l, k) every one of the first k column cuts lies in l
    pushforward(i, b)       images through a catalog bijection
    trace_ideal(j, m)       sets whose intersection with m lies in j

For partition ideals the partition must have infinitely many infinite
blocks; residue partitions are rejected with FinitePartition.

`known_subset` returns True only on a proven rule; False means "not
known", not "disproven".  `prefix_unions_in_ideal` is the three-valued
question whether every finite union of leading blocks of a partition
lies in the ideal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import terms as T
from .bijections import Bijection, invert, preimage_term
from .errors import FinitePartition, PreimageNotRepresentable, UniverseMismatch
from .partitions import CORNER, Partition
from .terms import SetTerm, classify, pair_grid
from .universe import Universe

__all__ = [
    "Ideal",
    "Tri",
    "fin",
    "improper",
    "principal",
    "partition_ideal",
    "pringsheim",
    "uniform_product",
    "pointwise_product",
    "pushforward",
    "trace_ideal",
    "in_ideal",
    "in_filter",
    "subseteq_mod",
    "equiv_mod",
    "admissible",
    "admissible_on",
    "proper",
    "has_maximum",
    "maximum_term",
    "known_subset",
    "prefix_unions_in_ideal",
    "partition_incidence",
    "quadrant_avoidance",
]


class Tri(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Ideal:
    kind: str
    universe: Universe
    set_term: Optional[SetTerm] = None
    partition: Optional[Partition] = None
    base: Optional["Ideal"] = None
    cutoff: Optional[int] = None
    bijection: Optional[Bijection] = None

    def __hash__(self):  # cached, ideals are hot cache keys
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(
                (
                    self.kind,
                    self.universe,
                    self.set_term,
                    self.partition,
                    self.base,
                    self.cutoff,
                    self.bijection,
                )
            )
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        bits = [self.kind, self.universe.value]
        if self.set_term is not None:
            bits.append(repr(self.set_term))
        if self.partition is not None:
            bits.append(self.partition.pid)
        if self.base is not None:
            bits.append(repr(self.base))
        if self.cutoff is not None:
            bits.append(str(self.cutoff))
        if self.bijection is not None:
            bits.append(repr(self.bijection))
        return "Ideal(" + ", ".join(bits) + ")"


def fin(universe: Universe = Universe.NAT) -> Ideal:
    return Ideal("fin", universe)


def improper(universe: Universe = Universe.NAT) -> Ideal:
    return Ideal("improper", universe)


def principal(t: SetTerm) -> Ideal:
    return Ideal("principal", t.universe, set_term=t)


def partition_ideal(p: Partition) -> Ideal:
    if not p.infinitely_many_infinite_blocks:
        raise FinitePartition(
            f"partition {p.pid} lacks infinitely many infinite blocks"
        )
    return Ideal("partition", p.universe, partition=p)


def pringsheim() -> Ideal:
    return Ideal("pringsheim", Universe.NATPAIR)


def uniform_product(base: Ideal, cutoff: int) -> Ideal:
    assert base.universe is Universe.NAT and cutoff >= 1
    return Ideal("uniform_product", Universe.NATPAIR, base=base, cutoff=cutoff)


def pointwise_product(base: Ideal, cutoff: int) -> Ideal:
    assert base.universe is Universe.NAT and cutoff >= 1
    return Ideal("pointwise_product", Universe.NATPAIR, base=base, cutoff=cutoff)


def pushforward(base: Ideal, b: Bijection) -> Ideal:
    if base.universe is not b.source:
        raise UniverseMismatch("pushforward: ideal universe differs from bijection source")
    return Ideal("pushforward", b.target, base=base, bijection=b)


def trace_ideal(base: Ideal, m: SetTerm) -> Ideal:
    if base.universe is not m.universe:
        raise UniverseMismatch("trace_ideal: term universe differs from ideal universe")
    return Ideal("trace", base.universe, base=base, set_term=m)


def _normalize(i: Ideal) -> Ideal:
    # pringsheim delegates membership to the corner partition
    if i.kind == "pringsheim":
        return partition_ideal(CORNER)
    return i


def quadrant_avoidance(t: SetTerm) -> bool:
    """Independent membership route for the pringsheim ideal: the term,
    viewed on its breakpoint grid, avoids some upper quadrant except for
    cells with a bounded side."""
    return pair_grid(t).avoids_some_quadrant()


def partition_incidence(p: Partition, t: SetTerm):
    """Indices of blocks of p the term meets: (finite, indices or None).

    indices is a sorted tuple when finite, None when infinitely many
    blocks are met.
    """
    if t.universe is not p.universe:
        raise UniverseMismatch("partition_incidence: universe mismatch")
    if p.universe is Universe.NATPAIR:
        g = pair_grid(t)
        if p.pid == "columns":
            inc = g.column_incidence()
            if inc.is_finite():
                return True, tuple(inc.members())
            return False, None
        if p.pid == "corner":
            inc = g.min_coord_incidence()
            if inc.is_finite():
                return True, tuple(inc.members())
            return False, None
        raise UniverseMismatch(f"no incidence rule for partition {p.pid}")
    v = T.nat_value(t)
    if p.pid == "ruler":
        finite, idx = v.ruler_incidence()
        return (True, tuple(sorted(idx))) if finite else (False, None)
    if p.modulus is not None:
        hit = set()
        for n in v.truncate(p.modulus * max(1, v.threshold)):
            r = n % p.modulus
            hit.add(r if r else p.modulus)
        for r in v.residues:
            rr = r % p.modulus if p.period % p.modulus == 0 else None
            if rr is None:
                # period and modulus interleave; the class meets several
                # residue blocks, enumerate one period worth of them
                for n in range(v.threshold, v.threshold + p.modulus * v.period):
                    if v.contains(n):
                        q = n % p.modulus
                        hit.add(q if q else p.modulus)
            else:
                hit.add(rr if rr else p.modulus)
        return True, tuple(sorted(hit))
    raise UniverseMismatch(f"no incidence rule for partition {p.pid}")


@lru_cache(maxsize=None)
def in_ideal(i: Ideal, t: SetTerm) -> bool:
    if t.universe is not i.universe:
        raise UniverseMismatch("in_ideal: term universe differs from ideal universe")
    k = i.kind
    if k == "improper":
        return True
    if k == "fin":
        return classify(t).is_finite()
    if k == "principal":
        return classify(T.diff(t, i.set_term)).is_empty()
    if k == "pringsheim":
        return in_ideal(_normalize(i), t)
    if k == "partition":
        finite, _ = partition_incidence(i.partition, t)
        return finite
    if k == "uniform_product":
        iv = pair_grid(t).project_second(i.cutoff)
        return in_ideal(i.base, T.interval_set_to_term(iv))
    if k == "pointwise_product":
        g = pair_grid(t)
        return all(
            in_ideal(i.base, T.interval_set_to_term(g.cut_at(x)))
            for x in range(1, i.cutoff + 1)
        )
    if k == "pushforward":
        return in_ideal(i.base, preimage_term(i.bijection, t))
    if k == "trace":
        return in_ideal(i.base, T.inter(t, i.set_term))
    raise AssertionError(f"unhandled ideal kind {k}")


def in_filter(i: Ideal, t: SetTerm) -> bool:
    """Membership in the dual filter: the complement lies in the ideal."""
    return in_ideal(i, T.compl(t))


def subseteq_mod(j: Ideal, a: SetTerm, b: SetTerm) -> bool:
    """a is contained in b modulo j: the part of a outside b lies in j."""
    return in_ideal(j, T.diff(a, b))


def equiv_mod(j: Ideal, a: SetTerm, b: SetTerm) -> bool:
    return subseteq_mod(j, a, b) and subseteq_mod(j, b, a)


@lru_cache(maxsize=None)
def proper(i: Ideal) -> bool:
    return not in_ideal(i, T.full(i.universe))


@lru_cache(maxsize=None)
def admissible(i: Ideal) -> bool:
    """All singletons belong to the ideal."""
    return admissible_on(i, T.full(i.universe))


def admissible_on(i: Ideal, m: SetTerm) -> bool:
    """Every singleton drawn from m belongs to the ideal."""
    if m.universe is not i.universe:
        raise UniverseMismatch("admissible_on: universe mismatch")
    k = i.kind
    if k in ("improper", "fin", "partition", "pringsheim"):
        return True
    if k == "principal":
        return classify(T.diff(m, i.set_term)).is_empty()
    if k in ("uniform_product", "pointwise_product"):
        # only columns up to the cutoff constrain singletons
        iv = pair_grid(m).project_second(i.cutoff)
        return admissible_on(i.base, T.interval_set_to_term(iv))
    if k == "pushforward":
        return admissible_on(i.base, preimage_term(i.bijection, m))
    if k == "trace":
        return admissible_on(i.base, T.inter(m, i.set_term))
    raise AssertionError(f"unhandled ideal kind {k}")


@lru_cache(maxsize=None)
def has_maximum(i: Ideal) -> bool:
    """Whether the ideal has a largest member (it is then principal as a
    family, whatever its descriptor)."""
    k = i.kind
    if k in ("improper", "principal"):
        return True
    if k in ("fin", "partition", "pringsheim"):
        return False
    if k in ("uniform_product", "pointwise_product", "pushforward"):
        return has_maximum(i.base)
    if k == "trace":
        return (not proper(i)) or has_maximum(i.base)
    raise AssertionError(f"unhandled ideal kind {k}")


def _lift_second(t: SetTerm) -> SetTerm:
    """NATPAIR term for {(a, b) : b in t} given a NAT term t."""
    if isinstance(t, T.Empty):
        return T.empty(Universe.NATPAIR)
    if isinstance(t, T.Full):
        return T.full(Universe.NATPAIR)
    if isinstance(t, T.FiniteSet):
        return T.union(*[T.row(b) for b in sorted(t.elements)]) if t.elements else T.empty(Universe.NATPAIR)
    if isinstance(t, T.Tail):
        return T.compl(T.union(*[T.row(b) for b in range(1, t.start)])) if t.start > 1 else T.full(Universe.NATPAIR)
    if isinstance(t, T.Compl):
        return T.compl(_lift_second(t.term))
    if isinstance(t, T.Union):
        return T.union(*[_lift_second(s) for s in t.terms])
    if isinstance(t, T.Inter):
        return T.inter(*[_lift_second(s) for s in t.terms])
    if isinstance(t, T.Diff):
        return T.diff(_lift_second(t.left), _lift_second(t.right))
    raise PreimageNotRepresentable(f"cannot lift {type(t).__name__} to the pair universe")


@lru_cache(maxsize=None)
def maximum_term(i: Ideal) -> Optional[SetTerm]:
    """A term for the largest member when one is representable, else None.

    has_maximum(i) may be True with maximum_term(i) None: existence of a
    maximum does not require the catalog to express it.
    """
    k = i.kind
    if k == "improper":
        return T.full(i.universe)
    if k == "principal":
        return i.set_term
    if k in ("fin", "partition", "pringsheim"):
        return None
    if k in ("uniform_product", "pointwise_product"):
        if not has_maximum(i.base):
            return None
        mt = maximum_term(i.base)
        if mt is None:
            return None
        low = T.union(*[T.col(x) for x in range(1, i.cutoff + 1)])
        try:
            lifted = _lift_second(mt)
        except PreimageNotRepresentable:
            return None
        return T.union(T.inter(low, lifted), T.compl(low))
    if k == "pushforward":
        mt = maximum_term(i.base) if has_maximum(i.base) else None
        if mt is None:
            return None
        try:
            return preimage_term(invert(i.bijection), mt)
        except PreimageNotRepresentable:
            return None
    if k == "trace":
        if not proper(i):
            return T.full(i.universe)
        mt = maximum_term(i.base) if has_maximum(i.base) else None
        if mt is None:
            return None
        return T.union(mt, T.compl(i.set_term))
    raise AssertionError(f"unhandled ideal kind {k}")


@lru_cache(maxsize=None)
def known_subset(a: Ideal, b: Ideal) -> bool:
    """True when a is provably contained in b by a catalog rule.

    False is a statement of ignorance, not of non-containment.
    """
    if a.universe is not b.universe:
        raise UniverseMismatch("known_subset: universe mismatch")
    an, bn = _normalize(a), _normalize(b)
    if an == bn:
        return True
    if not proper(bn):
        return True
    if an.kind == "principal":
        # exact: a principal ideal sits inside b iff its generator does
        return in_ideal(bn, an.set_term)
    if an.kind == "fin":
        return admissible(bn)
    if an.kind == "partition" and bn.kind == "partition":
        pa, pb = an.partition, bn.partition
        if pa.pid == pb.pid:
            return True
        if pa.pid == "columns" and pb.pid == "corner":
            # finitely many columns meet finitely many corner hooks
            return True
        return False
    if bn.kind == "trace" and known_subset(an, bn.base):
        # a subset of j is a subset of any trace of j
        return True
    if an.kind == "trace" and bn.kind == "trace" and an.set_term == bn.set_term:
        return known_subset(an.base, bn.base)
    if an.kind == "pushforward" and bn.kind == "pushforward":
        if an.bijection == bn.bijection:
            return known_subset(an.base, bn.base)
        return False
    if an.kind in ("uniform_product", "pointwise_product") and bn.kind in (
        "uniform_product",
        "pointwise_product",
    ):
        if an.cutoff != bn.cutoff:
            return False
        if an.kind == "pointwise_product" and bn.kind == "uniform_product":
            return False
        # uniform control implies pointwise control column by column
        return known_subset(an.base, bn.base) or an.base == bn.base
    return False


def _prefix_term(p: Partition, m: int) -> SetTerm:
    return T.union(*[T.block(p, i) for i in range(1, m + 1)])


def prefix_unions_in_ideal(i: Ideal, p: Partition) -> Tri:
    """Does every finite union of leading blocks of p lie in i?

    TRUE and FALSE are proven; UNKNOWN is an honest gap.  Small prefixes
    are probed first, so FALSE answers come with a concrete refuting
    prefix already checked.
    """
    if p.universe is not i.universe:
        raise UniverseMismatch("prefix_unions_in_ideal: universe mismatch")
    for m in (1, 2, 3, 4):
        if not in_ideal(i, _prefix_term(p, m)):
            return Tri.FALSE
    if not proper(i):
        return Tri.TRUE
    inorm = _normalize(i)
    k = inorm.kind
    if k == "principal":
        # prefixes exhaust the universe, so all of them fit iff the
        # generator is everything; proper principal ideals never qualify
        return Tri.TRUE if classify(T.compl(inorm.set_term)).is_empty() else Tri.FALSE
    if k == "fin":
        # catalog partitions have an infinite first block, so the probe
        # above already refuted; reaching here means something odd
        return Tri.UNKNOWN
    if k == "partition":
        q = inorm.partition
        if q.pid == p.pid:
            return Tri.TRUE
        if p.pid == "columns" and q.pid == "corner":
            return Tri.TRUE
        return Tri.UNKNOWN
    if k == "pushforward":
        pre1 = _try_preimage(inorm.bijection, T.block(p, 1))
        pre2 = _try_preimage(inorm.bijection, T.block(p, 2))
        if (
            isinstance(pre1, T.Block)
            and isinstance(pre2, T.Block)
            and pre1.partition == pre2.partition
            and (pre1.index, pre2.index) == (1, 2)
        ):
            return prefix_unions_in_ideal(inorm.base, pre1.partition)
        return Tri.UNKNOWN
    return Tri.UNKNOWN


def _try_preimage(b, t):
    try:
        return preimage_term(b, t)
    except PreimageNotRepresentable:
        return None
