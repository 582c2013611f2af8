"""Convergence along an ideal, and the two-ideal star variant.

A function f converges to x along the ideal i when every neighborhood
of x pulls the complement of its preimage into i.  Decisions are exact
for the catalog:

* finite codomains have a smallest neighborhood per point, so one escape
  check decides;
* on the metric line, escape sets grow as the ball shrinks and stabilize
  at an explicitly computable radius, so again one check decides.
  TailsTo pieces perturb escapes by finite sets only, which is why they
  require an admissible ideal (AdmissibilityRequired otherwise);
* diagonal families at the target reduce to the prefix-union question
  for the partition; away from the target the finitely many blocks whose
  values sit near x are computed exactly.

star_converges(f, i, j, x) asks for m in the dual filter of i with the
modification of f outside m j-convergent to x.  The decision ladder:

  (a) f already j-converges: witness is the full set.
  (b) j provably inside i and f fails i-convergence: impossible.
  (c) i has a largest member: modifying on exactly that member is the
      best possible move, so its outcome decides both ways.
  (d) additive transfer: the additive property for (i, j) plus
      i-convergence yields a witness built from the off-target pieces.
  (e) search over unions of whole pieces that lie in i, in ascending
      bitmask order over piece positions; the union of all eligible
      pieces is checked first since it dominates.
  (f) diagonal refutation: over a matching partition ideal with the
      finite ideal as auxiliary, a diagonal family never star-converges
      to its target: beyond the finite block incidence of any candidate
      complement, a whole block survives with values bounded away.

Witnesses returned by any branch re-verify by construction;
verify_witness re-runs the definition.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import terms as T
from .additivity import ApStatus, additive_property
from .errors import AdmissibilityRequired, NotStarConvergent, PreconditionViolated, UniverseMismatch
from .functions import (
    Const,
    DiagonalFamily,
    PiecewiseFn,
    TailsTo,
    has_tails_piece,
    modify_on,
    remainder_term,
    value_points,
)
from .ideals import (
    Ideal,
    Tri,
    admissible,
    has_maximum,
    in_filter,
    in_ideal,
    known_subset,
    maximum_term,
    prefix_unions_in_ideal,
)
from .partitions import Partition
from .spaces import FiniteTop, MetricLine, as_fraction
from .terms import SetTerm, classify
from .universe import Universe

__all__ = [
    "Verdict",
    "Witness",
    "StarResult",
    "converges",
    "limits",
    "star_converges",
    "verify_witness",
    "decompose",
    "gap_example",
    "diagonal_function",
]


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Witness:
    m: SetTerm
    note: str = ""


@dataclass(frozen=True)
class StarResult:
    verdict: Verdict
    witness: Optional[Witness]
    reason: str


def _check_target(f: PiecewiseFn, x):
    if type(x) is Fraction and type(f.codomain) is MetricLine:
        return x
    if isinstance(f.codomain, MetricLine):
        return as_fraction(x)
    if isinstance(f.codomain, FiniteTop):
        if x not in f.codomain.points:
            raise PreconditionViolated(f"{x!r} is not a point of the codomain")
        return x
    raise PreconditionViolated(f"unsupported codomain {f.codomain!r}")


def _union(universe, ts):
    return T.union(*ts) if ts else T.empty(universe)


def _finite_escape(f: PiecewiseFn, u) -> SetTerm:
    out = [t for t, s in f.pieces if s.value not in u]
    rem = remainder_term(f)
    if f.default is not None and not classify(rem).is_empty() and f.default not in u:
        out.append(rem)
    return _union(f.universe, out)


def _piece_stab_k(f: PiecewiseFn, x: Fraction) -> int:
    """Smallest k with 1/k strictly below every nonzero |value - x|."""
    k = 1
    vals = [s.value for _, s in f.pieces]
    if f.default is not None:
        vals.append(f.default)
    for v in vals:
        d = abs(as_fraction(v) - x)
        if d != 0:
            k = max(k, math.floor(1 / d) + 1)
    return k


def _piece_escape(f: PiecewiseFn, x: Fraction, k: int) -> list:
    """Piece terms escaping the 1/k ball around x; TailsTo pieces do so
    modulo a finite fuzz, which admissibility absorbs."""
    kf = Fraction(1, k)
    out = []
    for t, s in f.pieces:
        v = as_fraction(s.value)
        if v != x and abs(v - x) >= kf:
            out.append(t)
    rem = remainder_term(f)
    if f.default is not None and not classify(rem).is_empty():
        v = as_fraction(f.default)
        if v != x and abs(v - x) >= kf:
            out.append(rem)
    return out


def _inside_blocks(c: Fraction, delta: Fraction, k: int) -> set:
    """{i >= 1 : |c/i - delta| < 1/k}, requiring 1/k < |delta| so the set
    is finite."""
    kf = Fraction(1, k)
    assert abs(delta) > kf
    bound = abs(c) / (abs(delta) - kf)
    return {i for i in range(1, math.floor(bound) + 1) if abs(c / i - delta) < kf}


def _converges_metric(f: PiecewiseFn, i: Ideal, x: Fraction) -> Verdict:
    if has_tails_piece(f) and not admissible(i):
        raise AdmissibilityRequired("TailsTo pieces need an admissible ideal")
    kp = _piece_stab_k(f, x)
    if f.diagonal is None:
        esc = _union(f.universe, _piece_escape(f, x, kp))
        return Verdict.YES if in_ideal(i, esc) else Verdict.NO
    d = f.diagonal
    p = d.partition
    c = as_fraction(d.scale)
    tgt = as_fraction(d.target)
    pu_terms = [t for t, _ in f.pieces]
    pu = _union(f.universe, pu_terms)
    if x == tgt:
        # block values approach x, so escapes along the diagonal are the
        # leading blocks: the prefix-union question for the partition,
        # asked only on the region the pieces leave to the diagonal
        pesc = _union(f.universe, _piece_escape(f, x, kp))
        if not in_ideal(i, pesc):
            return Verdict.NO
        live = classify(T.diff(T.full(f.universe), pu))
        if live.is_empty():
            return Verdict.YES
        if live.is_finite() and admissible(i):
            return Verdict.YES
        pv = prefix_unions_in_ideal(i, p)
        if pv is Tri.TRUE:
            return Verdict.YES
        if pv is Tri.FALSE:
            cls = classify(pu)
            if cls.is_empty():
                return Verdict.NO
            if cls.is_finite() and admissible(i):
                return Verdict.NO
            return Verdict.UNKNOWN
        return Verdict.UNKNOWN
    # away from the target only finitely many blocks carry values near x
    delta = x - tgt
    q = c / delta
    exact = {int(q)} if q.denominator == 1 and q >= 1 else set()
    k = max(kp, math.floor(1 / abs(delta)) + 1)
    while not _inside_blocks(c, delta, k) <= exact:
        k *= 2
    keep = [T.block(p, n) for n in sorted(exact)]
    diag_escape = T.diff(T.diff(T.full(f.universe), _union(f.universe, keep)), pu)
    esc = _union(f.universe, _piece_escape(f, x, k) + [diag_escape])
    return Verdict.YES if in_ideal(i, esc) else Verdict.NO


def converges(f: PiecewiseFn, i: Ideal, x) -> Verdict:
    """Does f converge to x along the ideal i?  Exact on the catalog;
    UNKNOWN only through an undecided prefix-union question."""
    if f.universe is not i.universe:
        raise UniverseMismatch("converges: function and ideal universes differ")
    x = _check_target(f, x)
    return _converges_cached(f, i, x)


@lru_cache(maxsize=None)
def _converges_cached(f: PiecewiseFn, i: Ideal, x) -> Verdict:
    if isinstance(f.codomain, FiniteTop):
        esc = _finite_escape(f, f.codomain.min_nbhd(x))
        return Verdict.YES if in_ideal(i, esc) else Verdict.NO
    return _converges_metric(f, i, x)


def limits(f: PiecewiseFn, i: Ideal):
    """Limit points of f along i.

    For a finite codomain all points are candidates.  On the metric line
    the candidates are the declared values (piece values, default,
    diagonal target): an improper ideal makes every rational a limit,
    and any proper one confines limits to the closure of the value set,
    within which only declared values can be limits for catalog
    functions.  Entries with UNKNOWN verdicts are omitted.
    """
    if isinstance(f.codomain, FiniteTop):
        cands = list(f.codomain.points)
    else:
        cands = sorted({as_fraction(v) for v in value_points(f)})
    return tuple(x for x in cands if converges(f, i, x) is Verdict.YES)


_modified = lru_cache(maxsize=None)(modify_on)


def verify_witness(f: PiecewiseFn, i: Ideal, j: Ideal, x, w: Witness) -> bool:
    """Re-run the definition: w.m in the dual filter of i, and the
    modification of f outside w.m j-converges to x."""
    if not in_filter(i, w.m):
        return False
    return converges(_modified(f, w.m, x), j, x) is Verdict.YES


def _eligible_pieces(f: PiecewiseFn, i: Ideal):
    """Piece terms (plus the default region) individually inside i.  Any
    union of pieces lying in i consists of such pieces, by heredity."""
    terms = [t for t, _ in f.pieces]
    rem = remainder_term(f)
    if f.default is not None and not classify(rem).is_empty():
        terms.append(rem)
    return terms, [t for t in terms if in_ideal(i, t)]


def _subset_search(f: PiecewiseFn, i: Ideal, j: Ideal, x) -> Optional[StarResult]:
    """Search unions of whole eligible pieces as overwrite regions.

    Overwriting more of the function with x only shrinks escapes, so the
    union of all eligible pieces dominates: if it fails, every piece
    union fails.  On success the first working subset in ascending
    bitmask order (bit b = piece position b) is reported.
    """
    _, eligible = _eligible_pieces(f, i)
    if not eligible:
        return None
    a_max = _union(f.universe, eligible)
    try:
        vmax = converges(_modified(f, T.compl(a_max), x), j, x)
    except AdmissibilityRequired:
        return None
    if vmax is Verdict.UNKNOWN:
        return None
    if vmax is Verdict.NO:
        return StarResult(
            Verdict.UNKNOWN,
            None,
            "no union of pieces inside the base ideal works as an overwrite region",
        )
    for mask in range(1, 1 << len(eligible)):
        a = _union(f.universe, [t for b, t in enumerate(eligible) if mask >> b & 1])
        w = Witness(T.compl(a), "union of pieces inside the base ideal")
        try:
            if verify_witness(f, i, j, x, w):
                return StarResult(Verdict.YES, w, "piece-union overwrite region")
        except AdmissibilityRequired:
            return None
    return None


_CATALOG_PIDS = ("columns", "corner", "ruler")


def _diagonal_refutation(f: PiecewiseFn, i: Ideal, j: Ideal, x) -> Optional[StarResult]:
    if f.diagonal is None or not isinstance(f.codomain, MetricLine):
        return None
    d = f.diagonal
    if as_fraction(x) != as_fraction(d.target):
        return None
    if j.kind != "fin":
        return None
    inorm = i if i.kind == "partition" else None
    if i.kind == "pringsheim":
        from .partitions import CORNER

        inorm = Ideal("partition", Universe.NATPAIR, partition=CORNER)
    if inorm is None or inorm.partition.pid not in _CATALOG_PIDS:
        return None
    if d.partition.pid not in _CATALOG_PIDS:
        return None
    if f.pieces and not classify(_union(f.universe, [t for t, _ in f.pieces])).is_finite():
        return None
    return StarResult(
        Verdict.NO,
        None,
        "any candidate region misses only finitely many blocks of the "
        "partition, and a surviving block keeps infinitely many points "
        "whose values stay a fixed distance from the target, which the "
        "finite ideal cannot absorb",
    )


def as_fraction_safe(v):
    try:
        return as_fraction(v)
    except PreconditionViolated:
        return v


def star_converges(f: PiecewiseFn, i: Ideal, j: Ideal, x) -> StarResult:
    """Decide whether some m in the dual filter of i makes the
    modification of f outside m j-convergent to x."""
    if not (f.universe is i.universe is j.universe):
        raise UniverseMismatch("star_converges: universes differ")
    x = _check_target(f, x)
    seen_unknown = False

    try:
        v = converges(f, j, x)
    except AdmissibilityRequired:
        v = Verdict.UNKNOWN
    if v is Verdict.YES:
        return StarResult(
            Verdict.YES,
            Witness(T.full(f.universe), "no modification needed"),
            "already convergent along the auxiliary ideal",
        )
    if v is Verdict.UNKNOWN:
        seen_unknown = True

    if known_subset(j, i):
        try:
            vi = converges(f, i, x)
        except AdmissibilityRequired:
            vi = Verdict.UNKNOWN
        if vi is Verdict.NO:
            return StarResult(
                Verdict.NO,
                None,
                "the auxiliary ideal refines the base ideal, so star "
                "convergence would force base convergence, which fails",
            )
        if vi is Verdict.UNKNOWN:
            seen_unknown = True

    if has_maximum(i):
        mt = maximum_term(i)
        if mt is not None:
            w = Witness(T.compl(mt), "complement of the largest member")
            try:
                vm = converges(_modified(f, w.m, x), j, x)
            except AdmissibilityRequired:
                vm = Verdict.UNKNOWN
            if vm is Verdict.YES:
                return StarResult(Verdict.YES, w, "overwrite on the largest member")
            if vm is Verdict.NO:
                return StarResult(
                    Verdict.NO,
                    None,
                    "overwriting the largest member is the strongest "
                    "modification available, and it fails",
                )
            seen_unknown = True

    ap = additive_property(i, j)
    if ap.status is ApStatus.HOLDS:
        try:
            vi = converges(f, i, x)
        except AdmissibilityRequired:
            vi = Verdict.UNKNOWN
        if vi is Verdict.YES:
            off = [t for t, s in f.pieces if as_fraction_safe(s.value) != as_fraction_safe(x)]
            rem = remainder_term(f)
            if f.default is not None and not classify(rem).is_empty():
                if as_fraction_safe(f.default) != as_fraction_safe(x):
                    off.append(rem)
            if f.diagonal is not None:
                off.append(T.compl(_union(f.universe, [t for t, _ in f.pieces])))
            b = _union(f.universe, off)
            if in_ideal(i, b):
                w = Witness(T.compl(b), "complement of the off-target region")
                try:
                    if verify_witness(f, i, j, x, w):
                        return StarResult(
                            Verdict.YES, w, "additive transfer of base convergence"
                        )
                except AdmissibilityRequired:
                    pass
        elif vi is Verdict.UNKNOWN:
            seen_unknown = True

    res = _subset_search(f, i, j, x)
    if res is not None and res.verdict is Verdict.YES:
        return res

    ref = _diagonal_refutation(f, i, j, x)
    if ref is not None:
        return ref

    reason = "no decision rule applied"
    if res is not None:
        reason = res.reason
    if seen_unknown:
        reason += "; some subordinate convergence questions were undecided"
    return StarResult(Verdict.UNKNOWN, None, reason)


def decompose(f: PiecewiseFn, i: Ideal, j: Ideal, x):
    """Split f as g + h with g j-convergent to x and h supported inside
    a member of i (h vanishes on the witness region).

    Requires the metric codomain and a successful star decision;
    otherwise NotStarConvergent.  Returns (g, h, witness).
    """
    if not isinstance(f.codomain, MetricLine):
        raise PreconditionViolated("decompose needs the metric line codomain")
    x = as_fraction(x)
    res = star_converges(f, i, j, x)
    if res.verdict is not Verdict.YES:
        raise NotStarConvergent(res.reason)
    m = res.witness.m
    g = modify_on(f, m, x)
    # h = f - g: zero on m, f - x off m
    off = T.compl(m)
    pieces = [(T.inter(t, off), _shift_spec(s, x)) for t, s in f.pieces]
    diag = None
    if f.diagonal is not None:
        d = f.diagonal
        # off-m diagonal points keep target - x + scale/i; on-m points are
        # covered by the zero piece below, which takes priority
        diag = DiagonalFamily(d.partition, as_fraction(d.target) - x, as_fraction(d.scale))
    pieces.insert(0, (m, Const(Fraction(0))))
    default = None
    if f.default is not None:
        default = as_fraction(f.default) - x
    h = PiecewiseFn(f.universe, f.codomain, tuple(pieces), diag, default)
    return g, h, res.witness


def _shift_spec(s, x: Fraction):
    if isinstance(s, Const):
        return Const(as_fraction(s.value) - x)
    return TailsTo(as_fraction(s.value) - x, as_fraction(s.drift))


def gap_example(i: Ideal, j: Ideal, space, x, y, a: SetTerm) -> PiecewiseFn:
    """A function star-convergent to x over (i, j) yet not i-convergent:
    value y on the gap set a (a member of j outside i), x elsewhere.

    Preconditions: a in j, a not in i, and some neighborhood of x avoids
    y.  Postconditions are asserted before returning.
    """
    if a.universe is not i.universe or i.universe is not j.universe:
        raise UniverseMismatch("gap_example: universes differ")
    if not in_ideal(j, a):
        raise PreconditionViolated("the gap set must belong to the auxiliary ideal")
    if in_ideal(i, a):
        raise PreconditionViolated("the gap set must stay outside the base ideal")
    if isinstance(space, FiniteTop):
        if x not in space.points or y not in space.points:
            raise PreconditionViolated("x and y must be points of the space")
        if y in space.min_nbhd(x):
            raise PreconditionViolated("every neighborhood of x contains y")
    else:
        x, y = as_fraction(x), as_fraction(y)
        if x == y:
            raise PreconditionViolated("x and y must differ")
    f = PiecewiseFn(
        i.universe,
        space,
        ((a, Const(y)), (T.compl(a), Const(x))),
    )
    assert converges(f, j, x) is Verdict.YES
    assert converges(f, i, x) is Verdict.NO
    return f


def diagonal_function(p: Partition, target, scale=1) -> PiecewiseFn:
    """target + scale/i on block i of p, over the metric line."""
    from .errors import FinitePartition
    from .spaces import METRIC_LINE

    if not p.infinitely_many_infinite_blocks:
        raise FinitePartition(f"partition {p.pid} lacks infinitely many infinite blocks")
    d = DiagonalFamily(p, as_fraction(target), as_fraction(scale))
    return PiecewiseFn(p.universe, METRIC_LINE, (), d, None)
