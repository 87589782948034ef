"""Command-line surface.  Exit codes: 0 all checks pass, 1 a check failed, 2 bad usage or input."""

from __future__ import annotations

import argparse
import sys
import time

from .envelope import Envelope, check_dendriform_axioms, check_embedding, check_identities, check_lemma34, \
    check_rb_in_quotient
from .gsb import verify_gsb
from .prelie import PreLieError, build_hat, check_hat_lie_rb, prelie_violations
from .reducer import Reducer, ReductionLimitError, confluence_sample
from .report import Report
from .rules import Family
from .textio import AlgebraFileError, ParseError, dump_report, format_combo, format_letter, load_algebra, \
    parse_expr, print_expr

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path):
    try:
        return load_algebra(path)
    except FileNotFoundError:
        raise UsageError(f"{path}: no such file") from None
    except (AlgebraFileError, PreLieError) as e:
        raise UsageError(str(e)) from None


def _hat(path):
    A = _load(path)
    try:
        return A, build_hat(A)
    except PreLieError as e:
        raise UsageError(f"{path}: {e}") from None


def _finish(rep: Report, args) -> int:
    for line in rep.summary_lines():
        print(line)
    if getattr(args, "json", None):
        dump_report(rep, args.json)
    print("PASS" if rep.passed else "FAIL")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_check_prelie(args) -> int:
    A = _load(args.file)
    bad = prelie_violations(A)
    if not bad:
        print(f"pre-Lie: left-symmetry holds on all {A.n ** 3} basis triples")
        return EXIT_OK
    for i, j, k in bad:
        print(f"left-symmetry fails on (e{i}, e{j}, e{k})")
    return EXIT_FAIL


def cmd_hat(args) -> int:
    _, H = _hat(args.file)
    print("brackets:")
    for u in H.letters():
        for v in H.letters():
            print(f"  [{format_letter(u)}, {format_letter(v)}] = {format_combo(H.bracket_letters(u, v))}")
    print("operator:")
    for u in H.letters():
        print(f"  R({format_letter(u)}) = {format_combo(H.rb_combo({u: 1}))}")
    rep = check_hat_lie_rb(H)
    return _finish(rep, args)


def cmd_nf(args) -> int:
    _, H = _hat(args.file)
    try:
        p = parse_expr(args.expr, H.n)
    except ParseError as e:
        raise UsageError(str(e)) from None
    fams = [Family.STRAIGHTEN] if args.families == "straighten" else None
    red = Reducer(H, frozenset(fams) if fams else "all")
    try:
        q = red.normal_form(p, args.strategy)
    except ReductionLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    print(print_expr(q))
    return EXIT_OK


def cmd_gsb_verify(args) -> int:
    _, H = _hat(args.file)
    t0 = time.perf_counter()

    def progress(done):
        if args.progress:
            print(f"  {done} compositions checked", file=sys.stderr)

    rep = verify_gsb(H, args.max_deg, args.max_rdeg, jobs=args.jobs, progress=progress)
    rels = rep.params["relations"]
    print(f"relations: {sum(rels.values())} ({', '.join(f'{k} {v}' for k, v in rels.items())})")
    print(f"compositions: {rep.params['compositions']}")
    print(f"time: {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    return _finish(rep, args)


def cmd_envelope_verify(args) -> int:
    A, H = _hat(args.file)
    env = Envelope(H)
    rep = Report("envelope-verify", {"n": H.n, "samples": args.samples}, args.seed)
    rep.extend(check_rb_in_quotient(env, args.samples, args.seed))
    rep.extend(check_dendriform_axioms(env, args.samples, args.seed))
    rep.extend(check_embedding(A, args.samples, args.seed, env))
    rep.extend(check_identities(env, seed=args.seed))
    return _finish(rep, args)


def cmd_lemma34(args) -> int:
    _, H = _hat(args.file)
    rep = check_lemma34(H, args.max_l, max(args.max_l, 12))
    return _finish(rep, args)


def cmd_confluence(args) -> int:
    _, H = _hat(args.file)
    rep = confluence_sample(H, args.samples, args.max_deg, args.max_rdeg, args.seed)
    return _finish(rep, args)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rbenvelope", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="algebra file (JSON)")
        p.set_defaults(fn=fn)
        return p

    add("check-prelie", cmd_check_prelie, "check left-symmetry of the structure constants")
    add("hat", cmd_hat, "print and check the bracket and operator tables").add_argument("--json")

    p = add("nf", cmd_nf, "normal form of an expression")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("--families", choices=("straighten", "all"), default="all")
    p.add_argument("--strategy", choices=("outermost", "innermost"), default="outermost")

    p = add("gsb-verify", cmd_gsb_verify, "bounded check that every composition is trivial")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--max-rdeg", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json")
    p.add_argument("--progress", action="store_true")

    p = add("envelope-verify", cmd_envelope_verify, "sampled identities in the quotient")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json")

    p = add("lemma34", cmd_lemma34, "the enveloping-algebra lemma with straightening only")
    p.add_argument("--max-l", type=int, default=6)
    p.add_argument("--json")

    p = add("confluence", cmd_confluence, "compare two reduction strategies on random inputs")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-deg", type=int, default=6)
    p.add_argument("--max-rdeg", type=int, default=2)
    p.add_argument("--json")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    for name in ("samples", "max_deg", "max_rdeg", "jobs", "max_l"):
        v = getattr(args, name, None)
        if v is not None and v < (1 if name == "jobs" else 0):
            print(f"error: --{name.replace('_', '-')} out of range", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
