"""Finite-universe oracle: exhaustive ground truth on small models.

Universes here are {0, ..., n-1}; subsets are bitmasks.  On a finite
universe the union of all members of an ideal is itself a member, so
every ideal is the full power set of its largest member: there are
exactly 2^n of them, one per generator mask.  enumerate_ideals builds
them directly; tests cross-validate against a brute closure filter.

Topologies are enumerated by filtering all families of subsets for the
closure axioms.  Convergence, star convergence, the additive property,
and the four property phrasings are evaluated by literal loops over the
definitions; nothing here consults the symbolic engine.

The encode_* helpers embed a finite model into the symbolic side: the
universe maps to 1..n inside NAT, the ideal to a principal ideal whose
generator also swallows the tail beyond n, and a sequence to singleton
pieces plus a constant tail at the candidate limit.  Modifications of
the embedded model only ever matter on 1..n, which is why the embedding
preserves both convergence and star verdicts.

lemma_suite evaluates the structural facts the toolkit relies on, each
quantified exhaustively over a small size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import terms as T
from .errors import SizeTooLarge
from .functions import Const, PiecewiseFn
from .ideals import Ideal, principal
from .spaces import FiniteTop
from .universe import Universe

__all__ = [
    "FiniteIdeal",
    "FiniteSpace",
    "enumerate_ideals",
    "enumerate_topologies",
    "brute_i_limits",
    "brute_ihj",
    "brute_ap",
    "brute_pi_conditions",
    "brute_metric_limits",
    "brute_metric_ihj",
    "continuous_tables",
    "encode_ideal",
    "encode_space",
    "encode_fn",
    "lemma_suite",
    "ClaimResult",
    "SuiteReport",
    "agreement_sweep",
    "AgreementReport",
    "crosscheck",
    "CrosscheckReport",
]


def _submasks(m: int):
    out = []
    s = m
    while True:
        out.append(s)
        if s == 0:
            return out
        s = (s - 1) & m


@dataclass(frozen=True)
class FiniteIdeal:
    """Ideal on {0..n-1}: the power set of the generator mask."""

    n: int
    gen: int

    def contains(self, mask: int) -> bool:
        return mask & ~self.gen == 0

    def family(self):
        return sorted(_submasks(self.gen))

    def is_proper(self) -> bool:
        return self.gen != (1 << self.n) - 1

    def is_admissible(self) -> bool:
        return self.gen == (1 << self.n) - 1

    def is_maximal(self) -> bool:
        full = (1 << self.n) - 1
        comp = full & ~self.gen
        return comp != 0 and comp & (comp - 1) == 0


def enumerate_ideals(n: int):
    """All ideals on an n-element set, one per generator mask, in mask
    order."""
    if n > 5:
        raise SizeTooLarge("ideal enumeration is supported up to 5 points")
    if n < 1:
        raise SizeTooLarge("need at least one point")
    return [FiniteIdeal(n, g) for g in range(1 << n)]


@dataclass(frozen=True)
class FiniteSpace:
    """Topology on {0..m-1}; opens are bitmasks including 0 and full."""

    m: int
    opens: tuple

    def opens_containing(self, x: int):
        return [u for u in self.opens if u >> x & 1]

    def min_nbhd(self, x: int) -> int:
        out = (1 << self.m) - 1
        for u in self.opens:
            if u >> x & 1:
                out &= u
        return out

    def is_hausdorff(self) -> bool:
        for x in range(self.m):
            for y in range(x + 1, self.m):
                if not any(
                    u >> x & 1 and v >> y & 1 and not u & v
                    for u in self.opens
                    for v in self.opens
                ):
                    return False
        return True

    def is_indiscrete(self) -> bool:
        return len(self.opens) == 2 or self.m == 0


@lru_cache(maxsize=None)
def enumerate_topologies(m: int):
    """All labeled topologies on m points, by filtering every family of
    subsets for the closure axioms."""
    if m > 4:
        raise SizeTooLarge("topology enumeration is supported up to 4 points")
    if m < 1:
        raise SizeTooLarge("need at least one point")
    full = (1 << m) - 1
    subsets = list(range(full + 1))
    out = []
    for fam_mask in range(1 << len(subsets)):
        if not (fam_mask >> 0 & 1 and fam_mask >> full & 1):
            continue
        fam = [s for s in subsets if fam_mask >> s & 1]
        ok = True
        for a in fam:
            for b in fam:
                if not (fam_mask >> (a | b) & 1 and fam_mask >> (a & b) & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(FiniteSpace(m, tuple(fam)))
    return tuple(out)


def brute_i_limits(fn: tuple, i: FiniteIdeal, sp: FiniteSpace):
    """Literal definition: x is a limit when every open around x has an
    escape set inside the ideal."""
    out = []
    for x in range(sp.m):
        good = True
        for u in sp.opens:
            if not (u >> x & 1):
                continue
            esc = 0
            for k, v in enumerate(fn):
                if not (u >> v & 1):
                    esc |= 1 << k
            if not i.contains(esc):
                good = False
                break
        if good:
            out.append(x)
    return out


def brute_ihj(fn: tuple, i: FiniteIdeal, j: FiniteIdeal, sp: FiniteSpace, x: int):
    """Literal search for a modification region: the first m (ascending
    as a bitmask) whose complement lies in the base ideal and whose
    modified sequence j-converges to x."""
    n = i.n
    full = (1 << n) - 1
    escs = []
    for u in sp.opens:
        if not (u >> x & 1):
            continue
        e = 0
        for k, v in enumerate(fn):
            if not (u >> v & 1):
                e |= 1 << k
        escs.append(e)
    gi_missing = ~i.gen
    gj_missing = ~j.gen
    for m in range(full + 1):
        if (~m & full) & gi_missing:
            continue
        ok = True
        for e in escs:
            # modified escape: original escapes surviving inside m (the
            # overwritten part sits at x, inside every open around x)
            if (e & m) & gj_missing:
                ok = False
                break
        if ok:
            return True, m
    return False, None


def brute_ap(i: FiniteIdeal, j: FiniteIdeal) -> bool:
    """Literal first phrasing: one member almost containing the whole
    family, quantified over the full family of the base ideal."""
    fam = i.family()
    for a in fam:
        if all((b & ~a) & ~j.gen == 0 for b in fam):
            return True
    return False


def _selection_exists(i: FiniteIdeal, j: FiniteIdeal, family) -> bool:
    """Is there a per-member replacement inside the base ideal, each
    within the aux ideal of its original, whose union stays in the base
    ideal?  Dynamic programming over achievable unions."""
    fam_i = i.family()
    reach = {0}
    for a in family:
        cands = [b for b in fam_i if (b ^ a) & ~j.gen == 0]
        if not cands:
            return False
        reach = {u | b for u in reach for b in cands}
    return any(u & ~i.gen == 0 for u in reach)


def _disjoint_families(masks):
    """All families of pairwise disjoint nonempty masks, as tuples in
    ascending order."""
    out = [()]
    masks = [m for m in masks if m]

    def rec(start: int, used: int, acc):
        for idx in range(start, len(masks)):
            m = masks[idx]
            if m & used:
                continue
            acc.append(m)
            out.append(tuple(acc))
            rec(idx + 1, used | m, acc)
            acc.pop()

    rec(0, 0, [])
    return out


def _chains(masks):
    """All nonempty chains of nonempty masks under inclusion, ascending."""
    out = []
    masks = sorted(m for m in masks if m)

    def rec(last: int, acc):
        for m in masks:
            if m > last and m & last == last and m != last:
                acc.append(m)
                out.append(tuple(acc))
                rec(m, acc)
                acc.pop()

    for m in masks:
        out.append((m,))
        rec(m, [m])
    return out


def brute_pi_conditions(i: FiniteIdeal, j: FiniteIdeal) -> dict:
    """The four phrasings of the additive property, evaluated literally:

    p1: a single member almost contains the full family;
    p3: any family admits an in-ideal selection with union in the ideal;
    p4: same, quantified over disjoint families;
    p6: same, quantified over nondecreasing families (chains).
    """
    fam = i.family()
    p1 = brute_ap(i, j)
    p3 = _selection_exists(i, j, fam)
    p4 = all(_selection_exists(i, j, d) for d in _disjoint_families(fam))
    p6 = all(_selection_exists(i, j, c) for c in _chains(fam))
    return {"p1": p1, "p3": p3, "p4": p4, "p6": p6}


def brute_metric_limits(values: tuple, i: FiniteIdeal):
    """Finite index set mapping into rationals: x is a limit iff the
    mask of entries differing from x lies in the ideal (escapes grow to
    exactly that mask as the ball shrinks)."""
    out = []
    for x in sorted(set(values)):
        esc = 0
        for k, v in enumerate(values):
            if v != x:
                esc |= 1 << k
        if i.contains(esc):
            out.append(x)
    return out


def brute_metric_ihj(values: tuple, i: FiniteIdeal, j: FiniteIdeal, x):
    full = (1 << i.n) - 1
    esc = 0
    for k, v in enumerate(values):
        if v != x:
            esc |= 1 << k
    for m in range(full + 1):
        if (~m & full) & ~i.gen:
            continue
        if (esc & m) & ~j.gen == 0:
            return True, m
    return False, None


@lru_cache(maxsize=None)
def continuous_tables(sp1: FiniteSpace, sp2: FiniteSpace):
    """All continuous maps sp1 -> sp2 as value tuples."""
    out = []
    for code in range(sp2.m ** sp1.m):
        tbl, c = [], code
        for _ in range(sp1.m):
            tbl.append(c % sp2.m)
            c //= sp2.m
        ok = True
        for u in sp2.opens:
            pre = 0
            for p in range(sp1.m):
                if u >> tbl[p] & 1:
                    pre |= 1 << p
            if pre not in sp1.opens:
                ok = False
                break
        if ok:
            out.append(tuple(tbl))
    return tuple(out)


# --- embedding into the symbolic engine ---


def encode_ideal(i: FiniteIdeal) -> Ideal:
    """Principal ideal on NAT generated by the generator's elements
    (shifted to 1..n) together with the whole tail beyond n."""
    elems = [k + 1 for k in range(i.n) if i.gen >> k & 1]
    gen = T.union(T.finite_set(Universe.NAT, elems), T.tail(i.n + 1))
    return principal(gen)


@lru_cache(maxsize=None)
def encode_space(sp: FiniteSpace) -> FiniteTop:
    pts = tuple(range(sp.m))
    opens = frozenset(
        frozenset(p for p in pts if u >> p & 1) for u in sp.opens
    )
    return FiniteTop(pts, opens)


def encode_fn(fn: tuple, sp_enc: FiniteTop, x: int) -> PiecewiseFn:
    """Singleton pieces for the finite entries, then a constant tail at
    the candidate limit: beyond n the model is already settled."""
    n = len(fn)
    pieces = [(T.finite_set(Universe.NAT, [k + 1]), Const(v)) for k, v in enumerate(fn)]
    pieces.append((T.tail(n + 1), Const(x)))
    return PiecewiseFn(Universe.NAT, sp_enc, tuple(pieces))


# --- structural fact suite ---


@dataclass(frozen=True)
class ClaimResult:
    name: str
    checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class SuiteReport:
    size: int
    claims: tuple

    @property
    def violations(self) -> int:
        return sum(len(c.violations) for c in self.claims)

    @property
    def ok(self) -> bool:
        return self.violations == 0


def _all_fns(n: int, m: int):
    out = [()]
    for _ in range(n):
        out = [f + (v,) for f in out for v in range(m)]
    return out


def _spaces_upto(pts: int):
    out = []
    for m in range(1, pts + 1):
        out.extend(enumerate_topologies(m))
    return out


def lemma_suite(n: int, max_points: int = 3) -> SuiteReport:
    """Exhaustively check the structural facts on universes of size n
    with codomain spaces of up to max_points points."""
    if n > 4:
        raise SizeTooLarge("the fact suite is supported up to 4 points")
    ideals = enumerate_ideals(n)
    spaces = _spaces_upto(max_points)
    full = (1 << n) - 1

    limits_tbl = {}

    def limits_of(sp, fn, i):
        key = (sp, fn, i.gen)
        if key not in limits_tbl:
            limits_tbl[key] = tuple(brute_i_limits(fn, i, sp))
        return limits_tbl[key]

    star_tbl = {}

    def star_of(sp, fn, i, j, x):
        key = (sp, fn, i.gen, j.gen, x)
        if key not in star_tbl:
            star_tbl[key] = brute_ihj(fn, i, j, sp, x)[0]
        return star_tbl[key]

    claims = []

    def claim(name):
        def deco(fnc):
            checked, bad = fnc()
            claims.append(ClaimResult(name, checked, tuple(bad)))
            return fnc

        return deco

    @claim("improper-ideal-absorbs-everything")
    def _c1():
        checked, bad = 0, []
        imp = FiniteIdeal(n, full)
        for sp in spaces:
            for fn in _all_fns(n, sp.m):
                lims = limits_of(sp, fn, imp)
                checked += 1
                if len(lims) != sp.m:
                    bad.append(f"sp={sp.opens} fn={fn}")
        return checked, bad

    @claim("limits-grow-with-the-ideal")
    def _c2():
        checked, bad = 0, []
        for i1 in ideals:
            for i2 in ideals:
                if i1.gen & ~i2.gen:
                    continue
                for sp in spaces:
                    for fn in _all_fns(n, sp.m):
                        checked += 1
                        if not set(limits_of(sp, fn, i1)) <= set(limits_of(sp, fn, i2)):
                            bad.append(f"gens={i1.gen},{i2.gen} sp={sp.opens} fn={fn}")
        return checked, bad

    @claim("hausdorff-limits-unique")
    def _c3():
        checked, bad = 0, []
        for sp in spaces:
            if not sp.is_hausdorff():
                continue
            for i in ideals:
                if not i.is_proper():
                    continue
                for fn in _all_fns(n, sp.m):
                    checked += 1
                    if len(limits_of(sp, fn, i)) > 1:
                        bad.append(f"gen={i.gen} sp={sp.opens} fn={fn}")
        return checked, bad

    @claim("continuous-image-of-limits")
    def _c4():
        checked, bad = 0, []
        for sp1 in spaces:
            for sp2 in spaces:
                for tbl in continuous_tables(sp1, sp2):
                    for fn in _all_fns(n, sp1.m):
                        mfn = tuple(tbl[v] for v in fn)
                        for i in ideals:
                            checked += 1
                            img = {tbl[x] for x in limits_of(sp1, fn, i)}
                            if not img <= set(limits_of(sp2, mfn, i)):
                                bad.append(
                                    f"map={tbl} gen={i.gen} sp={sp1.opens}->{sp2.opens} fn={fn}"
                                )
        return checked, bad

    @claim("maximal-ideal-limits-exist")
    def _c5():
        checked, bad = 0, []
        for i in ideals:
            if not i.is_maximal():
                continue
            for sp in spaces:
                for fn in _all_fns(n, sp.m):
                    checked += 1
                    if not limits_of(sp, fn, i):
                        bad.append(f"gen={i.gen} sp={sp.opens} fn={fn}")
        return checked, bad

    @claim("aux-convergence-gives-star")
    def _c6():
        checked, bad = 0, []
        for sp in spaces:
            for fn in _all_fns(n, sp.m):
                for j in ideals:
                    for x in limits_of(sp, fn, j):
                        for i in ideals:
                            checked += 1
                            if not star_of(sp, fn, i, j, x):
                                bad.append(
                                    f"gens={i.gen},{j.gen} sp={sp.opens} fn={fn} x={x}"
                                )
        return checked, bad

    @claim("star-monotone-in-both-ideals")
    def _c7():
        checked, bad = 0, []
        gens = [(a, b) for a in range(full + 1) for b in range(full + 1) if a & ~b == 0]
        for sp in spaces:
            for fn in _all_fns(n, sp.m):
                for x in range(sp.m):
                    for gi1, gi2 in gens:
                        i1, i2 = FiniteIdeal(n, gi1), FiniteIdeal(n, gi2)
                        for gj1, gj2 in gens:
                            checked += 1
                            if star_of(sp, fn, i1, FiniteIdeal(n, gj1), x) and not star_of(
                                sp, fn, i2, FiniteIdeal(n, gj2), x
                            ):
                                bad.append(
                                    f"gens={gi1}<{gi2},{gj1}<{gj2} sp={sp.opens} fn={fn} x={x}"
                                )
        return checked, bad

    @claim("star-forces-base-when-aux-refines")
    def _c8():
        checked, bad = 0, []
        for sp in spaces:
            for fn in _all_fns(n, sp.m):
                for i in ideals:
                    for j in ideals:
                        if j.gen & ~i.gen:
                            continue
                        for x in range(sp.m):
                            checked += 1
                            if star_of(sp, fn, i, j, x) and x not in limits_of(sp, fn, i):
                                bad.append(
                                    f"gens={i.gen},{j.gen} sp={sp.opens} fn={fn} x={x}"
                                )
        return checked, bad

    @claim("gap-function-when-aux-escapes-base")
    def _c9():
        checked, bad = 0, []
        for i in ideals:
            for j in ideals:
                extra = j.gen & ~i.gen
                if not extra:
                    continue
                a = extra & -extra
                for sp in spaces:
                    for x in range(sp.m):
                        mn = sp.min_nbhd(x)
                        ys = [y for y in range(sp.m) if not (mn >> y & 1)]
                        if not ys:
                            continue
                        y = ys[0]
                        fn = tuple(y if a >> k & 1 else x for k in range(n))
                        checked += 1
                        if not star_of(sp, fn, i, j, x):
                            bad.append(f"gens={i.gen},{j.gen} sp={sp.opens} x={x}")
                        elif x in limits_of(sp, fn, i):
                            bad.append(f"base-converges gens={i.gen},{j.gen} sp={sp.opens} x={x}")
        return checked, bad

    @claim("star-matches-trace-restriction")
    def _c10():
        checked, bad = 0, []
        for sp in spaces:
            for fn in _all_fns(n, sp.m):
                for i in ideals:
                    for j in ideals:
                        for x in range(sp.m):
                            checked += 1
                            via_trace = False
                            for m in range(full + 1):
                                if (~m & full) & ~i.gen:
                                    continue
                                if all(
                                    not (
                                        sum(
                                            1 << k
                                            for k in range(n)
                                            if m >> k & 1 and not (u >> fn[k] & 1)
                                        )
                                        & ~j.gen
                                    )
                                    for u in sp.opens
                                    if u >> x & 1
                                ):
                                    via_trace = True
                                    break
                            if via_trace != star_of(sp, fn, i, j, x):
                                bad.append(
                                    f"gens={i.gen},{j.gen} sp={sp.opens} fn={fn} x={x}"
                                )
        return checked, bad

    @claim("decomposition-recombines")
    def _c11():
        checked, bad = 0, []
        palette = (Fraction(0), Fraction(1), Fraction(1, 2))
        vals_list = [()]
        for _ in range(n):
            vals_list = [v + (p,) for v in vals_list for p in palette]
        for values in vals_list:
            for i in ideals:
                for j in ideals:
                    for x in palette:
                        found, m = brute_metric_ihj(values, i, j, x)
                        if not found:
                            continue
                        checked += 1
                        g = tuple(values[k] if m >> k & 1 else x for k in range(n))
                        h = tuple(values[k] - g[k] for k in range(n))
                        if any(values[k] != g[k] + h[k] for k in range(n)):
                            bad.append(f"recombine values={values} m={m}")
                            continue
                        supp = 0
                        for k in range(n):
                            if h[k] != 0:
                                supp |= 1 << k
                        if not i.contains(supp):
                            bad.append(f"support values={values} m={m}")
                        esc_g = sum(1 << k for k in range(n) if g[k] != x)
                        if not j.contains(esc_g):
                            bad.append(f"g-convergence values={values} m={m}")
        return checked, bad

    @claim("maximal-means-one-point-missing")
    def _c12():
        checked, bad = 0, []
        for i in ideals:
            checked += 1
            expect = i.is_proper() and bin(full & ~i.gen).count("1") == 1
            if i.is_maximal() != expect:
                bad.append(f"gen={i.gen}")
        return checked, bad

    return SuiteReport(n, tuple(claims))


# --- brute vs symbolic agreement ---


@dataclass(frozen=True)
class AgreementReport:
    size: int
    max_points: int
    conv_checked: int
    star_checked: int
    disagreements: tuple

    @property
    def ok(self) -> bool:
        return not self.disagreements


def agreement_sweep(n: int, max_points: int = 3) -> AgreementReport:
    """Every finite model up to the given sizes, decided twice: by the
    literal loops here and by the symbolic engine on the encoded model.
    Any mismatch, and any symbolic UNKNOWN, is a disagreement."""
    from .convergence import Verdict, converges, star_converges

    if n > 4:
        raise SizeTooLarge("the agreement sweep is supported up to size 4")
    disagreements = []
    conv_checked = star_checked = 0
    for s in range(1, n + 1):
        ideals = enumerate_ideals(s)
        enc = {i.gen: encode_ideal(i) for i in ideals}
        for sp in _spaces_upto(max_points):
            spe = encode_space(sp)
            for fn in _all_fns(s, sp.m):
                blim = {i.gen: brute_i_limits(fn, i, sp) for i in ideals}
                for x in range(sp.m):
                    fenc = encode_fn(fn, spe, x)
                    for i in ideals:
                        conv_checked += 1
                        want = x in blim[i.gen]
                        got = converges(fenc, enc[i.gen], x)
                        if got is not (Verdict.YES if want else Verdict.NO):
                            disagreements.append(
                                f"conv s={s} sp={sp.opens} fn={fn} x={x} "
                                f"gen={i.gen}: brute={want} symbolic={got.value}"
                            )
                        for j in ideals:
                            star_checked += 1
                            bres = brute_ihj(fn, i, j, sp, x)[0]
                            sres = star_converges(fenc, enc[i.gen], enc[j.gen], x)
                            if sres.verdict is not (
                                Verdict.YES if bres else Verdict.NO
                            ):
                                disagreements.append(
                                    f"star s={s} sp={sp.opens} fn={fn} x={x} "
                                    f"gens={i.gen},{j.gen}: brute={bres} "
                                    f"symbolic={sres.verdict.value}"
                                )
    return AgreementReport(n, max_points, conv_checked, star_checked, tuple(disagreements))


# --- symbolic claims vs truncation evidence ---


@dataclass(frozen=True)
class CrosscheckReport:
    bound: int
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def crosscheck(t, bound: int) -> CrosscheckReport:
    """Confront a term's symbolic classification and memberships with
    brute truncation evidence at the given bound and at five times it."""
    from .ideals import in_ideal, partition_incidence, partition_ideal, pringsheim
    from .partitions import CORNER, block_of
    from .universe import elements_upto

    checks = []
    cls = T.classify(t)
    small = T.truncate(t, bound)
    big = T.truncate(t, 5 * bound)
    ok = set(small) <= set(big)
    checks.append(("truncation-monotone", ok, f"{len(small)} then {len(big)} members"))
    if cls.is_empty():
        checks.append(("empty-has-no-members", not big, f"{len(big)} members"))
    elif cls.is_finite():
        ok = len(big) <= cls.cardinality and len(small) <= cls.cardinality
        checks.append(
            ("finite-within-cardinality", ok, f"card {cls.cardinality}, saw {len(big)}")
        )
    else:
        checks.append(
            ("infinite-keeps-appearing", len(big) >= len(small), f"{len(small)}->{len(big)}")
        )
    if t.universe is Universe.NATPAIR:
        g = T.pair_grid(t)
        ref = [e for e in elements_upto(Universe.NATPAIR, bound) if g.contains(e)]
        checks.append(
            ("normal-form-matches-member-loop", list(small) == ref, f"{len(ref)} members")
        )
        a = in_ideal(pringsheim(), t)
        b = in_ideal(partition_ideal(CORNER), t)
        checks.append(
            ("quadrant-vs-partition-membership", a == b, f"{a} vs {b}")
        )
        fin_inc, idx = partition_incidence(CORNER, t)
        seen_small = {block_of(CORNER, e) for e in small}
        seen_big = {block_of(CORNER, e) for e in big}
        ok = seen_small <= seen_big
        if fin_inc:
            ok = ok and seen_big <= set(idx)
        checks.append(
            (
                "block-incidence-consistent",
                ok,
                f"blocks {sorted(seen_small)} then {sorted(seen_big)}",
            )
        )
    else:
        v = T.nat_value(t)
        ref = [e for e in elements_upto(Universe.NAT, bound) if v.contains(e)]
        checks.append(
            ("normal-form-matches-member-loop", list(small) == ref, f"{len(ref)} members")
        )
    return CrosscheckReport(bound, tuple(checks))
