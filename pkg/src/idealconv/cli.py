"""Command-line front end.

Subcommands: ideal info, set classify, set member, conv decide,
conv witness, ap, oracle run.  Inputs are the module-level JSON formats,
inline or from a fixture file; outputs are byte-deterministic in both
text and JSON modes.

Exit codes: 0 decided/success, 1 oracle violation, 2 input error,
3 undecided under --strict.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import errors as E
from . import serialize as S
from . import terms as T
from .additivity import ApStatus, additive_property
from .convergence import Verdict, converges, star_converges
from .finite import agreement_sweep, crosscheck, lemma_suite
from .additivity import pi_condition_crosscheck
from .ideals import (
    Ideal,
    admissible,
    fin,
    has_maximum,
    improper,
    in_ideal,
    maximum_term,
    partition_ideal,
    principal,
    pringsheim,
    proper,
)
from .partitions import COLUMNS, RULER, partition_by_id
from .sampling import random_term
from .universe import Universe

__all__ = ["main"]

_ALIAS_HELP = (
    "fin[:nat|natpair], uni, prg, mac[:partition], improper[:nat|natpair], "
    "principal:<term json>, or a full ideal JSON object"
)


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fail(message: str):
    raise _Exit(2, message)


def _universe_arg(s: str) -> Universe:
    try:
        return Universe(s)
    except ValueError:
        _fail(f"unknown universe {s!r}")


def _load_json(s: str):
    try:
        return json.loads(s)
    except json.JSONDecodeError as e:
        _fail(f"bad JSON: {e}")


def parse_ideal(spec: str, default: Universe = Universe.NAT) -> Ideal:
    """Catalog alias or inline ideal JSON.

    Bare fin/improper land on the default universe so a pair like
    --I uni --J fin reads both ideals over the same index set."""
    spec = spec.strip()
    if spec.startswith("{"):
        try:
            return S.ideal_from_obj(_load_json(spec))
        except ValueError as e:
            _fail(str(e))
    name, _, arg = spec.partition(":")
    if name == "fin":
        return fin(_universe_arg(arg) if arg else default)
    if name == "improper":
        return improper(_universe_arg(arg) if arg else default)
    if name == "uni":
        return partition_ideal(COLUMNS)
    if name in ("prg", "pringsheim"):
        return pringsheim()
    if name == "mac":
        try:
            return partition_ideal(partition_by_id(arg) if arg else RULER)
        except (ValueError, E.FinitePartition) as e:
            _fail(str(e))
    if name == "principal":
        if not arg:
            _fail("principal needs a generator term: principal:<term json>")
        try:
            return principal(S.term_from_obj(_load_json(arg)))
        except ValueError as e:
            _fail(str(e))
    _fail(f"unknown ideal {spec!r}; expected {_ALIAS_HELP}")


def _parse_term(s: str) -> T.SetTerm:
    try:
        return S.term_from_obj(_load_json(s))
    except ValueError as e:
        _fail(str(e))


def _parse_value(s: str):
    """Target point: a rational like 3 or 1/2, a {num,den} object, or a
    bare label of a finite space."""
    s = s.strip()
    if s.startswith("{") or s.lstrip("-").isdigit():
        try:
            return S.value_from_obj(_load_json(s))
        except ValueError as e:
            _fail(str(e))
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            from fractions import Fraction

            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError):
            _fail(f"bad rational {s!r}")
    return s


_FIXTURE_KEYS = {"term", "element", "function", "ideal", "base", "aux", "point"}


def _load_fixture(path: str) -> dict:
    try:
        with open(path, "rb") as fh:
            doc = json.load(fh)
    except OSError as e:
        _fail(f"cannot read fixture file: {e}")
    except json.JSONDecodeError as e:
        _fail(f"fixture file is not valid JSON: {e}")
    if not isinstance(doc, dict):
        _fail("fixture file must hold a JSON object")
    unknown = set(doc) - _FIXTURE_KEYS
    if unknown:
        _fail(f"unknown fixture keys: {sorted(unknown)}")
    return doc


def _fixture(args) -> dict:
    return _load_fixture(args.fixture) if getattr(args, "fixture", None) else {}


def _need_fn(args):
    fx = _fixture(args)
    if getattr(args, "fn", None):
        obj = _load_json(args.fn)
    elif "function" in fx:
        obj = fx["function"]
    else:
        _fail("no function given: pass --fn or a fixture file with a 'function' key")
    try:
        return S.fn_from_obj(obj)
    except (ValueError, KeyError) as e:
        _fail(f"bad function: {e}")


def _need_ideal(args, flag: str, key: str, default: Universe) -> Ideal:
    spec = getattr(args, flag, None)
    if spec:
        return parse_ideal(spec, default)
    fx = _fixture(args)
    for k in (key, "ideal") if key == "base" else (key,):
        if k in fx:
            try:
                return S.ideal_from_obj(fx[k])
            except ValueError as e:
                _fail(f"bad {k} ideal: {e}")
    _fail(f"no {key} ideal given: pass --{flag}")


def _need_target(args):
    if getattr(args, "x", None) is not None:
        return _parse_value(args.x)
    fx = _fixture(args)
    if "point" in fx:
        try:
            return S.value_from_obj(fx["point"])
        except ValueError:
            if isinstance(fx["point"], str):
                return fx["point"]
            _fail(f"bad fixture point {fx['point']!r}")
    _fail("no target point given: pass --x")


def _emit(args, obj, lines):
    if args.output == "json":
        print(S.canonical_dumps(obj))
    else:
        for line in lines:
            print(line)


# --- subcommands ---


def _cmd_ideal_info(args) -> int:
    if args.name == "principal":
        if not args.set:
            _fail("principal needs --set '<term json>'")
        i = principal(_parse_term(args.set))
    else:
        spec = args.name
        if args.name in ("fin", "improper") and args.universe:
            spec = f"{args.name}:{args.universe}"
        if args.name == "mac" and args.partition:
            spec = f"mac:{args.partition}"
        i = parse_ideal(spec)
    obj = {
        "ideal": S.ideal_to_obj(i),
        "universe": i.universe.value,
        "admissible": admissible(i),
        "proper": proper(i),
        "has_maximum": has_maximum(i),
    }
    lines = [
        f"ideal: {i.kind}",
        f"universe: {i.universe.value}",
        f"admissible: {str(admissible(i)).lower()}",
        f"proper: {str(proper(i)).lower()}",
        f"has maximum: {str(has_maximum(i)).lower()}",
    ]
    if has_maximum(i):
        mt = maximum_term(i)
        if mt is not None:
            obj["maximum"] = S.term_to_obj(mt)
            lines.append(f"maximum: {S.canonical_dumps(S.term_to_obj(mt))}")
    _emit(args, obj, lines)
    return 0


def _cmd_set_classify(args) -> int:
    fx = _fixture(args)
    if args.term:
        t = _parse_term(args.term)
    elif "term" in fx:
        try:
            t = S.term_from_obj(fx["term"])
        except ValueError as e:
            _fail(str(e))
    else:
        _fail("no term given: pass --term or a fixture file with a 'term' key")
    try:
        cls = T.classify(t)
    except E.UnsupportedCombination as e:
        raise _Exit(3, str(e))
    obj = {"kind": cls.kind}
    lines = [f"kind: {cls.kind}"]
    if cls.cardinality is not None:
        obj["cardinality"] = cls.cardinality
        lines.append(f"cardinality: {cls.cardinality}")
    if cls.elements is not None:
        obj["elements"] = [S._element_to_obj(t.universe, e) for e in cls.elements]
        lines.append(f"elements: {S.canonical_dumps(obj['elements'])}")
    if args.ideal:
        i = parse_ideal(args.ideal, t.universe)
        if i.universe is not t.universe:
            _fail("the ideal lives on a different universe than the term")
        m = in_ideal(i, t)
        obj["in_ideal"] = m
        lines.append(f"in ideal: {str(m).lower()}")
    _emit(args, obj, lines)
    return 0


def _cmd_set_member(args) -> int:
    t = _parse_term(args.term)
    try:
        e = S.element_from_obj(t.universe, _load_json(args.element))
    except ValueError as err:
        _fail(str(err))
    m = T.member(t, e)
    _emit(args, {"member": m}, [f"member: {str(m).lower()}"])
    return 0


def _verdict_exit(args, v: Verdict) -> int:
    if v is Verdict.UNKNOWN and args.strict:
        return 3
    return 0


def _cmd_conv(args) -> int:
    f = _need_fn(args)
    i = _need_ideal(args, "I", "base", f.universe)
    x = _need_target(args)
    want_star = args.cmd == "witness" or args.J is not None or "aux" in _fixture(args)
    try:
        if not want_star:
            v = converges(f, i, x)
            _emit(args, {"verdict": v.value}, [f"verdict: {v.value}"])
            return _verdict_exit(args, v)
        j = _need_ideal(args, "J", "aux", f.universe)
        res = star_converges(f, i, j, x)
        obj = S.star_to_obj(res)
        lines = [f"verdict: {res.verdict.value}"]
        if res.witness is not None:
            lines.append(
                f"witness: {S.canonical_dumps(S.term_to_obj(res.witness.m))}"
            )
        lines.append(f"reason: {res.reason}")
        _emit(args, obj, lines)
        return _verdict_exit(args, res.verdict)
    except (E.UniverseMismatch, E.PreconditionViolated, E.AdmissibilityRequired) as e:
        _fail(str(e))


def _cmd_ap(args) -> int:
    i = _need_ideal(args, "I", "base", Universe.NAT)
    j = _need_ideal(args, "J", "aux", i.universe)
    try:
        v = additive_property(i, j)
    except E.UniverseMismatch as e:
        _fail(str(e))
    obj = {"status": v.status.value, "rule": v.rule}
    lines = [f"status: {v.status.value}", f"rule: {v.rule}"]
    if v.witness is not None:
        obj["witness_partition"] = v.witness.partition.pid
        lines.append(f"witness family: blocks of {v.witness.partition.pid}")
    _emit(args, obj, lines)
    if v.status is ApStatus.UNKNOWN and args.strict:
        return 3
    return 0


def _crosscheck_suite(bound: int):
    rng = random.Random(2026)
    rows = []
    bad = 0
    for universe in (Universe.NAT, Universe.NATPAIR):
        for _ in range(100):
            t = random_term(rng, universe)
            rep = crosscheck(t, bound)
            if not rep.ok:
                bad += 1
                rows.append(S.canonical_dumps(S.term_to_obj(t)))
    return bad, rows


def _cmd_oracle(args) -> int:
    size = args.size
    reports = []
    violations = 0
    if args.suite in ("lemma", "all"):
        rep = lemma_suite(min(size, 4))
        violations += rep.violations
        reports.append(
            {
                "suite": "lemma",
                "size": rep.size,
                "claims": [
                    {"claim": c.name, "instances": c.checked, "violations": list(c.violations)}
                    for c in rep.claims
                ],
            }
        )
    if args.suite in ("agreement", "all"):
        rep = agreement_sweep(min(size, 4))
        violations += len(rep.disagreements)
        reports.append(
            {
                "suite": "agreement",
                "size": rep.size,
                "convergence_instances": rep.conv_checked,
                "star_instances": rep.star_checked,
                "violations": list(rep.disagreements),
            }
        )
    if args.suite in ("pi", "all"):
        rep = pi_condition_crosscheck(min(size, 4))
        violations += len(rep.disagreements)
        reports.append(
            {
                "suite": "pi",
                "size": rep.size,
                "pairs": rep.pairs,
                "violations": [repr(d) for d in rep.disagreements],
            }
        )
    if args.suite in ("crosscheck", "all"):
        bad, rows = _crosscheck_suite(50)
        violations += bad
        reports.append({"suite": "crosscheck", "bound": 50, "violations": rows})
    obj = {"reports": reports, "violations": violations}
    lines = []
    for rep in reports:
        n_bad = len(rep.get("violations", [])) if "violations" in rep else sum(
            len(c["violations"]) for c in rep["claims"]
        )
        detail = ""
        if rep["suite"] == "lemma":
            detail = f" claims={len(rep['claims'])}"
        if rep["suite"] == "agreement":
            detail = f" conv={rep['convergence_instances']} star={rep['star_instances']}"
        if rep["suite"] == "pi":
            detail = f" pairs={rep['pairs']}"
        lines.append(f"suite {rep['suite']}:{detail} violations={n_bad}")
    lines.append(f"total violations: {violations}")
    _emit(args, obj, lines)
    return 1 if violations else 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="idealconv",
        description="convergence along ideals: inspect, classify, decide",
    )
    ap.add_argument("--output", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="group", required=True)

    g_ideal = sub.add_parser("ideal", help="ideal catalog")
    s_ideal = g_ideal.add_subparsers(dest="cmd", required=True)
    p = s_ideal.add_parser("info", help="descriptor and flags")
    p.add_argument("name", help=_ALIAS_HELP)
    p.add_argument("--set", help="generator term JSON for principal")
    p.add_argument("--partition", help="partition id for mac")
    p.add_argument("--universe", help="nat or natpair for fin/improper")
    p.set_defaults(run=_cmd_ideal_info)

    g_set = sub.add_parser("set", help="symbolic set terms")
    s_set = g_set.add_subparsers(dest="cmd", required=True)
    p = s_set.add_parser("classify", help="empty / finite / infinite, exactly")
    p.add_argument("--term", help="term JSON")
    p.add_argument("--fixture", help="fixture file with a 'term' key")
    p.add_argument("--ideal", help="also report membership in this ideal")
    p.set_defaults(run=_cmd_set_classify)
    p = s_set.add_parser("member", help="does the term contain the element")
    p.add_argument("--term", required=True, help="term JSON")
    p.add_argument("--element", required=True, help="element JSON: n or [a,b]")
    p.set_defaults(run=_cmd_set_member)

    g_conv = sub.add_parser("conv", help="convergence decisions")
    s_conv = g_conv.add_subparsers(dest="cmd", required=True)
    for name, helptext in (
        ("decide", "decide convergence (add --J for the star variant)"),
        ("witness", "decide the star variant and print the witness set"),
    ):
        p = s_conv.add_parser(name, help=helptext)
        p.add_argument("--fn", help="function JSON")
        p.add_argument("--fixture", help="fixture file")
        p.add_argument("--I", dest="I", help="base ideal")
        p.add_argument("--J", dest="J", help="auxiliary ideal")
        p.add_argument("--x", help="target point")
        p.add_argument("--strict", action="store_true", help="exit 3 on unknown")
        p.set_defaults(run=_cmd_conv)

    p = sub.add_parser("ap", help="additive property of an ideal pair")
    p.add_argument("--I", dest="I", help="base ideal")
    p.add_argument("--J", dest="J", help="auxiliary ideal")
    p.add_argument("--fixture", help="fixture file with base/aux keys")
    p.add_argument("--strict", action="store_true", help="exit 3 on unknown")
    p.set_defaults(run=_cmd_ap, cmd="ap")

    g_oracle = sub.add_parser("oracle", help="exhaustive finite oracles")
    s_oracle = g_oracle.add_subparsers(dest="cmd", required=True)
    p = s_oracle.add_parser("run", help="run an oracle suite")
    p.add_argument("--size", type=int, default=3)
    p.add_argument(
        "--suite",
        choices=("all", "lemma", "agreement", "pi", "crosscheck"),
        default="all",
    )
    p.set_defaults(run=_cmd_oracle)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except _Exit as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except E.SizeTooLarge as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
