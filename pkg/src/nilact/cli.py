"""Command-line front end with JSON input and output.

Parameter documents arrive on stdin; every command prints a single JSON
object.  Exit codes: 0 success (proper, for ``check``), 3 not proper (for
``check``), 2 invalid input, 4 internal contract violation (the return
oracle contradicted the exact criterion).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from random import Random

from .deformation import NotProperError, canonicalize, orbit_equivalent, stability_probe
from .homspace import Branch1Param, Branch2Param, branch1_approximant, branch1_generators, branch2_generators, in_branch1_closure
from .jsonio import (
    InputError,
    decode_fraction,
    decode_param,
    dumps,
    encode_canonical,
    encode_fraction,
    encode_oracle_report,
    encode_param,
    encode_stability_report,
    encode_verdict,
)
from .oracle import INCONCLUSIVE, InvalidScheduleError, oracle_verdict
from .properness import generic_dimension, is_generic, is_injective, is_proper
from .sampling import random_param

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_NOT_PROPER = 3
EXIT_CONTRACT_VIOLATION = 4


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _fail(message: str) -> int:
    _emit({"error": message})
    return EXIT_BAD_INPUT


def _read_document():
    raw = sys.stdin.read()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc


def _read_param():
    return decode_param(_read_document())


def _cmd_check(args) -> int:
    verdict = is_proper(_read_param())
    _emit(encode_verdict(verdict))
    return EXIT_OK if verdict.proper else EXIT_NOT_PROPER


def _cmd_classify(args) -> int:
    p = _read_param()
    verdict = is_proper(p)
    if isinstance(p, Branch2Param):
        generic = is_generic(p)
    else:
        # The regular locus is the open dense generic part of branch 1.
        generic = verdict.proper
    _emit(
        {
            "branch": p.branch,
            "proper": verdict.proper,
            "generic": generic,
            "injective": is_injective(p),
        }
    )
    return EXIT_OK


def _cmd_canon(args) -> int:
    p = _read_param()
    form = canonicalize(p)
    out = encode_canonical(form)
    out["proper"] = is_proper(p).proper
    _emit(out)
    return EXIT_OK


def _cmd_equiv(args) -> int:
    doc = _read_document()
    if not isinstance(doc, dict) or "a" not in doc or "b" not in doc:
        raise InputError('equiv expects an object with fields "a" and "b"')
    a = decode_param(doc["a"])
    b = decode_param(doc["b"])
    try:
        eq = orbit_equivalent(a, b)
    except NotProperError as exc:
        raise InputError(str(exc)) from exc
    _emit({"equivalent": eq})
    return EXIT_OK


def _cmd_oracle(args) -> int:
    p = _read_param()
    radius = decode_fraction(args.box_radius)
    try:
        schedule = tuple(int(s) for s in args.schedule.split(","))
    except ValueError as exc:
        raise InputError(f"bad schedule: {args.schedule!r}") from exc
    try:
        report = oracle_verdict(p, radius, schedule)
    except InvalidScheduleError as exc:
        raise InputError(str(exc)) from exc
    out = encode_oracle_report(report)
    criterion = is_proper(p).proper
    out["criterion_proper"] = criterion
    _emit(out)
    if report.verdict != INCONCLUSIVE:
        oracle_proper = report.verdict == "Proper"
        if oracle_proper != criterion:
            return EXIT_CONTRACT_VIOLATION
    return EXIT_OK


def _cmd_dim(args) -> int:
    dims = generic_dimension(args.k)
    _emit(
        {
            "dim_M1r": dims.branch1_regular,
            "dim_M2ro": dims.branch2_generic,
            "dim_T_prime": dims.deformation_generic,
        }
    )
    return EXIT_OK


def _cmd_sample(args) -> int:
    rng = Random(args.seed)
    summary = {"k": args.k, "count_per_branch": args.count, "seed": args.seed}
    for branch in (1, 2):
        proper = generic = injective = 0
        for _ in range(args.count):
            p = random_param(rng, args.k, branch)
            verdict = is_proper(p)
            if verdict.proper:
                proper += 1
            if is_injective(p):
                injective += 1
            if isinstance(p, Branch2Param):
                if is_generic(p):
                    generic += 1
            elif verdict.proper:
                generic += 1
        summary[f"branch{branch}"] = {
            "proper": proper,
            "generic": generic,
            "injective": injective,
            "proper_fraction": encode_fraction(Fraction(proper, args.count)),
        }
    _emit(summary)
    return EXIT_OK


def _max_entry_distance(p: Branch2Param, approx: Branch1Param) -> float:
    target = branch2_generators(p)
    moving = branch1_generators(approx)
    worst = 0.0
    for g, h in zip(target, moving):
        gm, hm = g.to_matrix(), h.to_matrix()
        for i in range(gm.nrows):
            for j in range(gm.ncols):
                worst = max(worst, abs(float(gm[i, j] - hm[i, j])))
    return worst


def _cmd_closure(args) -> int:
    p = _read_param()
    if not isinstance(p, Branch2Param):
        raise InputError("closure applies to type2 parameters")
    inside = in_branch1_closure(p)
    out = {"in_closure": inside}
    if inside:
        preview = []
        for l in (10, 100, 1000):
            approx = branch1_approximant(p, l)
            preview.append(
                {
                    "l": l,
                    "param": encode_param(approx),
                    "max_entry_distance": _max_entry_distance(p, approx),
                }
            )
        out["approximants"] = preview
    _emit(out)
    return EXIT_OK


def _cmd_probe(args) -> int:
    p = _read_param()
    radius = decode_fraction(args.radius)
    try:
        report = stability_probe(p, radius, args.trials, args.seed)
    except (NotProperError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    _emit(encode_stability_report(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilact",
        description="Classify and normalize properly discontinuous affine lattice actions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("check", help="properness verdict with witness").set_defaults(
        func=_cmd_check
    )
    sub.add_parser(
        "classify", help="branch, proper, generic, and injectivity flags"
    ).set_defaults(func=_cmd_classify)
    sub.add_parser("canon", help="canonical orbit representative").set_defaults(
        func=_cmd_canon
    )
    sub.add_parser(
        "equiv", help='orbit equivalence of documents "a" and "b"'
    ).set_defaults(func=_cmd_equiv)

    oracle = sub.add_parser("oracle", help="box return counts and verdict")
    oracle.add_argument("--box-radius", default="1", help="rational box radius")
    oracle.add_argument(
        "--schedule", default="8,16,32,64", help="comma-separated lattice radii"
    )
    oracle.set_defaults(func=_cmd_oracle)

    dim = sub.add_parser("dim", help="dimension table for rank k")
    dim.add_argument("--k", type=int, required=True)
    dim.set_defaults(func=_cmd_dim)

    sample = sub.add_parser("sample", help="classify random parameters")
    sample.add_argument("--k", type=int, required=True)
    sample.add_argument("--count", type=int, required=True)
    sample.add_argument("--seed", type=int, default=0)
    sample.set_defaults(func=_cmd_sample)

    closure = sub.add_parser(
        "closure", help="branch-1 closure membership and approximants"
    )
    closure.set_defaults(func=_cmd_closure)

    probe = sub.add_parser("probe", help="stability probe around a proper point")
    probe.add_argument("--radius", default="1/10", help="rational perturbation radius")
    probe.add_argument("--trials", type=int, default=200)
    probe.add_argument("--seed", type=int, default=0)
    probe.set_defaults(func=_cmd_probe)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        return _fail(str(exc))
    except (ValueError, TypeError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
