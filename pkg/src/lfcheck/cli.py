"""Command-line front end.

Exit codes: 0 all checks passed, 1 identity violated, 2 hypothesis not
satisfied (only with ``--require-hypothesis``), 3 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from typing import Any, Dict, List, Optional, TextIO

from .digraph import OracleLimitError
from .exactring import Scalar, format_scalar, parse_scalar
from .genlab import (DOMAINS, FAMILIES, GeneratorSpec, Sampler, gen_gauge_symmetric,
                     gen_random_acyclic, gen_random_dense, gen_symmetric, generate,
                     random_family_one, random_family_two, random_rank_one)
from .hypotheses import (check_acyclic_matrix, check_triangle_condition,
                         hypothesis_report, search_certificate)
from .matrix import ExactMatrix, IdentityInstance, mat_pow
from .verify import (check_reversal_bijection, random_instance, verify_identity,
                     walk_sums_from)

SCHEMA = "lfcheck.report/1"
EXIT_OK, EXIT_VIOLATION, EXIT_HYPOTHESIS, EXIT_INPUT = 0, 1, 2, 3
FULL_PRINT_LIMIT = 200


class InputError(ValueError):
    pass


class TheoremViolation(RuntimeError):
    """An identity failure on a matrix that satisfies a sufficient condition."""


# ---------------------------------------------------------------- parsing

def parse_matrix_text(text: str, plain: bool = False) -> ExactMatrix:
    if plain:
        rows = [line.split() for line in text.splitlines() if line.strip()]
        n = len(rows)
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
            raise InputError("matrix document needs keys 'n' and 'entries'")
        n, rows = doc["n"], doc["entries"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InputError("'n' must be a positive integer")
        if not isinstance(rows, list):
            raise InputError("'entries' must be an array of arrays")
    if n == 0:
        raise InputError("empty matrix")
    if len(rows) != n:
        raise InputError(f"expected {n} rows, found {len(rows)}")
    out: List[List[Scalar]] = []
    for r, row in enumerate(rows, 1):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"row {r}: expected {n} entries")
        parsed = []
        for c, cell in enumerate(row, 1):
            if not isinstance(cell, str):
                raise InputError(f"row {r}, column {c}: entries must be strings")
            try:
                parsed.append(parse_scalar(cell))
            except ValueError as exc:
                raise InputError(f"row {r}, column {c}: {exc}") from None
        out.append(parsed)
    try:
        return ExactMatrix.from_rows(out)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None


def parse_matrix_file(source, plain: bool = False) -> ExactMatrix:
    """Read from a path, ``'-'`` for stdin, or an open text stream."""
    if hasattr(source, "read"):
        return parse_matrix_text(source.read(), plain)
    if source == "-":
        return parse_matrix_text(sys.stdin.read(), plain)
    try:
        with open(source, encoding="utf-8") as fh:
            return parse_matrix_text(fh.read(), plain)
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from None


def matrix_document(a: ExactMatrix) -> Dict[str, Any]:
    return {"n": a.n, "entries": a.to_strings()}


def matrix_digest(a: ExactMatrix) -> str:
    canon = json.dumps(matrix_document(a), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


# ---------------------------------------------------------------- reports

def _short(x: Scalar) -> str:
    s = format_scalar(x)
    if len(s) <= FULL_PRINT_LIMIT:
        return s
    return f"{s[:60]}... ({len(s)} chars, sha256 {hashlib.sha256(s.encode()).hexdigest()[:16]})"


def _verification_json(res) -> Dict[str, Any]:
    return {"instance": str(res.instance), "lhs": format_scalar(res.lhs),
            "rhs": format_scalar(res.rhs), "equal": res.equal}


def _oracle_json(a: ExactMatrix, max_m: int) -> Dict[str, Any]:
    mismatches = []
    checked = 0
    for m in range(1, max_m + 1):
        p = mat_pow(a, m)
        for u in range(1, a.n + 1):
            sums = walk_sums_from(a, u, m)
            for v in range(1, a.n + 1):
                checked += 1
                if sums[v] != p.at(u, v):
                    mismatches.append({"m": m, "u": u, "v": v, "oracle": format_scalar(sums[v]),
                                       "power": format_scalar(p.at(u, v))})
    return {"max_m": max_m, "entries_checked": checked, "mismatches": mismatches}


def _write_report(report: Dict[str, Any], path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")


def strip_timing(report: Dict[str, Any]) -> Dict[str, Any]:
    return {k: v for k, v in report.items() if k != "timing"}


def _instances(a: ExactMatrix, args) -> List[IdentityInstance]:
    out = []
    for text in args.instance or []:
        try:
            inst = IdentityInstance.parse(text)
            inst.validate(a.n)
        except (ValueError, IndexError) as exc:
            raise InputError(str(exc)) from None
        out.append(inst)
    rng = random.Random(args.seed)
    out.extend(random_instance(rng, a.n) for _ in range(args.random))
    return out


def run_check(a: ExactMatrix, instances: List[IdentityInstance], *, hypotheses: bool = True,
              oracle: bool = False, seed: int = 0, out: TextIO = sys.stdout,
              command: str = "check") -> Dict[str, Any]:
    t0 = time.perf_counter()
    report: Dict[str, Any] = {"schema": SCHEMA, "command": command, "seed": seed,
                              "input": {"n": a.n, "domain": a.domain, "digest": matrix_digest(a)}}
    print(f"matrix of order {a.n} ({a.domain}), digest {report['input']['digest'][:16]}", file=out)
    hyp = None
    if hypotheses:
        hyp = hypothesis_report(a)
        report["hypotheses"] = hyp.to_json()
        for name in ("acyclic", "triangle", "certificate"):
            res = getattr(hyp, name)
            line = f"  {name:<12} {res.status.value}"
            if res.reason:
                line += f" ({res.reason})"
            if res.witness:
                line += f" witness={json.dumps(res.to_json()['witness'])}"
            print(line, file=out)
        if hyp.certificate.holds:
            cycles = [" -> ".join(map(str, list(c) + [c[0]])) for c in hyp.certificate.certificate]
            print("  certificate cycles: " + ("; ".join(cycles) if cycles else "(none needed)"), file=out)
    results = [verify_identity(a, inst) for inst in instances]
    report["verifications"] = [_verification_json(r) for r in results]
    for r in results:
        mark = "ok  " if r.equal else "FAIL"
        print(f"  {mark} {r.instance}: lhs={_short(r.lhs)} rhs={_short(r.rhs)}", file=out)
    if oracle:
        bij = []
        for inst in instances:
            try:
                b = check_reversal_bijection(a, inst)
            except OracleLimitError as exc:
                bij.append({"instance": str(inst), "skipped": str(exc)})
                continue
            bij.append({"instance": str(inst), "walks": b.walk_count,
                        "reversals_valid": b.reversals_valid, "weights_equal": b.weights_equal})
        try:
            report["oracle"] = _oracle_json(a, 4)
        except OracleLimitError as exc:
            report["oracle"] = {"skipped": str(exc)}
        report["oracle"]["bijection"] = bij
        mism = len(report["oracle"].get("mismatches", []))
        print(f"  oracle: {mism} power/walk-sum mismatches", file=out)
    violated = any(not r.equal for r in results)
    code = EXIT_OK
    if violated:
        code = EXIT_VIOLATION
    report["summary"] = {"instances": len(results), "violations": sum(not r.equal for r in results),
                         "hypothesis_holds": bool(hyp.any_holds) if hyp else None}
    report["timing"] = {"elapsed_s": time.perf_counter() - t0}
    report["exit_code"] = code
    return report


# ------------------------------------------------------------------- fuzz

def _fuzz_matrix(cls: str, rng: random.Random, max_order: int) -> ExactMatrix:
    n = rng.randint(1 if cls in ("acyclic", "adversarial") else 3, max_order)
    sampler = Sampler(rng)
    if cls == "acyclic":
        return gen_random_acyclic(n, rng, rng.random(), sampler)
    if cls == "triangle":
        return rng.choice([random_rank_one, lambda k, s: gen_symmetric(k, s)])(n, sampler)
    if cls == "certificate":
        pick = rng.randrange(3)
        if pick == 0:
            return random_family_one(n, sampler)
        if pick == 1:
            return random_family_two(n, sampler)
        return gen_gauge_symmetric(n, sampler, rng.random())
    return gen_random_dense(n, sampler, rng.uniform(0.2, 0.9))


def _holds(cls: str, a: ExactMatrix) -> bool:
    if cls == "acyclic":
        return check_acyclic_matrix(a).holds
    if cls == "triangle":
        return check_triangle_condition(a).holds
    return search_certificate(a).holds


def _delete_vertex(a: ExactMatrix, v: int) -> ExactMatrix:
    keep = [i for i in range(1, a.n + 1) if i != v]
    return ExactMatrix.from_rows([[a.at(i, j) for j in keep] for i in keep])


def shrink_counterexample(a: ExactMatrix, inst: IdentityInstance):
    """Greedy: drop segments, then lower exponents, then delete unused vertices."""

    def fails(m, i):
        return not verify_identity(m, i).equal

    changed = True
    while changed:
        changed = False
        for t in range(inst.k):
            if inst.k == 1:
                break
            cand = IdentityInstance(inst.exponents[:t] + inst.exponents[t + 1:],
                                    inst.indices[:t] + inst.indices[t + 1:])
            if fails(a, cand):
                inst, changed = cand, True
                break
        if changed:
            continue
        for t in range(inst.k):
            if inst.exponents[t] > 1:
                ms = list(inst.exponents)
                ms[t] -= 1
                cand = IdentityInstance(tuple(ms), inst.indices)
                if fails(a, cand):
                    inst, changed = cand, True
                    break
        if changed:
            continue
        for v in range(a.n, 0, -1):
            if v in inst.indices or a.n == 1:
                continue
            cand_a = _delete_vertex(a, v)
            cand = IdentityInstance(inst.exponents, tuple(i - (i > v) for i in inst.indices))
            if fails(cand_a, cand):
                a, inst, changed = cand_a, cand, True
                break
    return a, inst


def run_fuzz(cls: str, count: int, seed: int, max_order: int = 8, instances_per: int = 4,
             out: TextIO = sys.stdout) -> Dict[str, Any]:
    if cls not in ("acyclic", "triangle", "certificate", "adversarial"):
        raise InputError(f"unknown fuzz class {cls!r}")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    counterexamples = []
    cases = 0
    for case in range(count):
        case_rng = random.Random(rng.getrandbits(64))
        a = _fuzz_matrix(cls, case_rng, max_order)
        if cls != "adversarial" and not _holds(cls, a):
            raise TheoremViolation(f"generator for class {cls} produced a matrix outside it:\n{a}")
        for _ in range(instances_per):
            inst = random_instance(case_rng, a.n)
            cases += 1
            res = verify_identity(a, inst)
            if res.equal:
                continue
            if cls != "adversarial":
                raise TheoremViolation(
                    f"identity fails under the {cls} hypothesis (case {case}, instance {inst}):\n{a}")
            hyp = hypothesis_report(a)
            if hyp.any_holds:
                raise TheoremViolation(f"identity fails although a hypothesis holds:\n{a}")
            sa, si = shrink_counterexample(a, inst)
            small = verify_identity(sa, si)
            counterexamples.append({"case": case, "matrix": matrix_document(sa), "instance": str(si),
                                    "lhs": format_scalar(small.lhs), "rhs": format_scalar(small.rhs)})
            break
    report = {"schema": SCHEMA, "command": "fuzz", "class": cls, "count": count, "seed": seed,
              "max_order": max_order, "cases": cases, "violations": 0 if cls != "adversarial" else None,
              "counterexamples": counterexamples,
              "timing": {"elapsed_s": time.perf_counter() - t0}}
    print(f"fuzz {cls}: {count} matrices, {cases} instances, "
          f"{len(counterexamples)} counterexamples", file=out)
    for c in counterexamples[:5]:
        print(f"  n={c['matrix']['n']} {c['instance']}: lhs={c['lhs']} rhs={c['rhs']} "
              f"entries={c['matrix']['entries']}", file=out)
    report["exit_code"] = EXIT_OK
    return report


# -------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lfcheck", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def matrix_args(sp):
        sp.add_argument("matrix", help="matrix file (JSON, or whitespace with --plain); '-' for stdin")
        sp.add_argument("--plain", action="store_true", help="n lines of n entries")
        sp.add_argument("--json", metavar="OUT", help="write the JSON report here")

    def instance_args(sp):
        sp.add_argument("--instance", action="append", metavar="M;I",
                        help='instance "m1,m2,...;i1,i2,..." (repeatable)')
        sp.add_argument("--random", type=int, default=0, metavar="N", help="N random instances")
        sp.add_argument("--seed", type=int, default=0, metavar="S")

    sp = sub.add_parser("check", help="decide hypotheses and verify instances")
    matrix_args(sp)
    instance_args(sp)
    sp.add_argument("--oracle", action="store_true", help="cross-check with walk enumeration")
    sp.add_argument("--require-hypothesis", action="store_true")

    sp = sub.add_parser("verify", help="verify instances only")
    matrix_args(sp)
    instance_args(sp)

    sp = sub.add_parser("oracle", help="compare walk sums with matrix powers")
    matrix_args(sp)
    sp.add_argument("--max-m", type=int, default=6)

    sp = sub.add_parser("certificate", help="search a cycle-basis certificate")
    matrix_args(sp)

    sp = sub.add_parser("generate", help="emit a generated matrix")
    sp.add_argument("--family", required=True, choices=sorted(FAMILIES))
    sp.add_argument("--order", type=int, required=True, metavar="N")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--density", type=float, default=0.5, metavar="D")
    sp.add_argument("--domain", choices=DOMAINS, default="integer")
    sp.add_argument("--wide", action="store_true", help="entries from [-99, 99]")
    sp.add_argument("--random", type=int, default=0, metavar="N",
                    help="symbolic domain only: verify N random instances")
    sp.add_argument("--json", metavar="OUT")

    sp = sub.add_parser("fuzz", help="randomized conformance runs")
    sp.add_argument("--class", dest="cls", required=True,
                    choices=["acyclic", "triangle", "certificate", "adversarial"])
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--order", type=int, default=8, metavar="N", help="maximum order")
    sp.add_argument("--json", metavar="OUT")
    return p


def main(argv: Optional[List[str]] = None, out: TextIO = sys.stdout) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args, out)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION (implementation bug): {exc}", file=sys.stderr)
        return EXIT_VIOLATION


def _dispatch(args, out: TextIO) -> int:
    if args.command == "fuzz":
        report = run_fuzz(args.cls, args.count, args.seed, args.order, out=out)
        _write_report(report, args.json)
        return report["exit_code"]

    if args.command == "generate":
        try:
            spec = GeneratorSpec(args.family, args.order, args.seed, args.domain, args.density, args.wide)
            a = generate(spec)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if args.domain == "symbolic":
            rng = random.Random(args.seed)
            insts = [random_instance(rng, a.n) for _ in range(args.random)]
            print(a, file=out)
            report = run_check(a, insts, seed=args.seed, out=out, command="generate")
            report["generator"] = {"family": args.family, "order": args.order, "seed": args.seed,
                                   "domain": args.domain, "density": args.density}
            _write_report(report, args.json)
            return report["exit_code"]
        doc = matrix_document(a)
        if args.json:
            _write_report(doc, args.json)
        else:
            print(json.dumps(doc), file=out)
        return EXIT_OK

    a = parse_matrix_file(args.matrix, args.plain)

    if args.command == "oracle":
        try:
            body = _oracle_json(a, args.max_m)
        except OracleLimitError as exc:
            raise InputError(str(exc)) from None
        report = {"schema": SCHEMA, "command": "oracle", "input": {"n": a.n, "digest": matrix_digest(a)},
                  "oracle": body}
        print(f"oracle: {body['entries_checked']} entries, {len(body['mismatches'])} mismatches", file=out)
        report["exit_code"] = EXIT_VIOLATION if body["mismatches"] else EXIT_OK
        _write_report(report, args.json)
        return report["exit_code"]

    if args.command == "certificate":
        res = search_certificate(a)
        report = {"schema": SCHEMA, "command": "certificate",
                  "input": {"n": a.n, "digest": matrix_digest(a)}, "certificate": res.to_json()}
        if res.holds:
            print("certificate found:", file=out)
            for c in res.certificate:
                print("  " + " -> ".join(map(str, list(c) + [c[0]])), file=out)
            if not res.certificate:
                print("  (cycle space is trivial)", file=out)
        else:
            print(f"no certificate: {res.reason} {json.dumps(res.to_json().get('witness', {}))}", file=out)
        report["exit_code"] = EXIT_OK if res.holds else EXIT_HYPOTHESIS
        _write_report(report, args.json)
        return report["exit_code"]

    insts = _instances(a, args)
    try:
        report = run_check(a, insts, hypotheses=args.command == "check",
                           oracle=getattr(args, "oracle", False), seed=args.seed, out=out,
                           command=args.command)
    except IndexError as exc:
        raise InputError(str(exc)) from None
    if (report["exit_code"] == EXIT_OK and getattr(args, "require_hypothesis", False)
            and not report["summary"]["hypothesis_holds"]):
        report["exit_code"] = EXIT_HYPOTHESIS
    _write_report(report, args.json)
    return report["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
