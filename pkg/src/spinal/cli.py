"""Command-line front end.

Exit codes: 0 success, 1 negative answer, 2 usage or parse error,
3 internal bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .checks import run_selftest
from .errors import BoundExceeded, SpinalError
from .families import build_recursion, build_sigma, find_lifting_witness
from .formats import export_gap, load_datum
from .hnn import HnnAction
from .notation import format_base, format_vertex, format_word, parse_vertex, parse_word
from .nucleus import compute_nucleus, quasinucleus_violations
from .portrait import format_portrait, portrait, portrait_to_dot

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _lift(d, T):
    w = find_lifting_witness(d, T)
    return w, (build_sigma(d, w, T) if w is not None else None)


def cmd_validate(args, d, T):
    print(f"valid datum: p = {d.p}, r = {list(d.r)}, generators = {len(d.bases)}")
    return EXIT_OK


def cmd_lift_check(args, d, T):
    w, sigma = _lift(d, T)
    report = {
        "liftable_certified": w is not None,
        "witness": w.to_json() if w is not None else None,
        "sigma": ({format_base(b, d): format_word(img, d) for b, img in sigma.images.items()}
                  if sigma is not None else {}),
    }
    if args.json:
        print(json.dumps(report, indent=2))
    elif w is None:
        print("liftability condition not satisfied (no witness found)")
    else:
        print(f"witness: m = {w.m}, k = {w.k}, j = {w.j}, f = {w.f}, s = {w.s}")
        for name, img in report["sigma"].items():
            print(f"sigma({name}) = {img}")
    return EXIT_OK if w is not None else EXIT_NO


def cmd_sigma(args, d, T):
    _, sigma = _lift(d, T)
    if sigma is None:
        print("liftability condition not satisfied; no lifting available", file=sys.stderr)
        return EXIT_NO
    w = parse_word(args.word, d)
    for _ in range(args.iterate):
        w = sigma(w)
    print(format_word(w, d))
    return EXIT_OK


def cmd_nucleus(args, d, T):
    N = compute_nucleus(d, T, args.max_size)
    sys.stdout.write(N.to_text(d))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(N.to_dot(d))
    if args.verify_quasinucleus is not None:
        bad = quasinucleus_violations(N, args.verify_quasinucleus, T)
        print(f"# quasinucleus with k = {args.verify_quasinucleus}: {'yes' if not bad else 'no'}")
        if bad:
            n1, n2, v, s = bad[0]
            print(f"# ({format_word(n1, d)}) * ({format_word(n2, d)}) at {format_vertex(v)} "
                  f"gives {format_word(s, d)}")
            return EXIT_NO
    return EXIT_OK


def cmd_wp(args, d, T):
    trivial = T.is_trivial(parse_word(args.word, d))
    print("trivial" if trivial else "nontrivial")
    return EXIT_OK if trivial else EXIT_NO


def cmd_eq(args, d, T):
    equal = T.are_equal(parse_word(args.left, d), parse_word(args.right, d))
    print("equal" if equal else "distinct")
    return EXIT_OK if equal else EXIT_NO


def cmd_section(args, d, T):
    print(format_word(T.section_at(parse_word(args.word, d), parse_vertex(args.vertex, d.p)), d))
    return EXIT_OK


def cmd_act(args, d, T):
    print(format_vertex(T.apply(parse_word(args.word, d), parse_vertex(args.on, d.p))))
    return EXIT_OK


def cmd_portrait(args, d, T):
    N = compute_nucleus(d, T)
    P = portrait(parse_word(args.word, d), N, T)
    if args.format == "dot":
        sys.stdout.write(portrait_to_dot(P, d))
    else:
        print(format_portrait(P, d))
    return EXIT_OK


def cmd_orbit(args, d, T):
    _, sigma = _lift(d, T)
    if sigma is None:
        print("liftability condition not satisfied; no lifting available", file=sys.stderr)
        return EXIT_NO
    rep = HnnAction(T, sigma).orbit_ball(args.kmax, args.lmax)
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(f"ball K = {args.kmax}, L = {args.lmax}: reached {rep.reached} of {rep.total}")
        for v in rep.missed:
            print(f"missed {v}")
    return EXIT_OK if rep.transitive_on_ball else EXIT_NO


def cmd_export_gap(args, d, T):
    sys.stdout.write(export_gap(d, T))
    return EXIT_OK


def cmd_selftest(args, d, T):
    results = run_selftest(d, args.seed, args.samples)
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinal", description="Computations in multi-EGS groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("datum", help="datum JSON file")
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "check a datum file")
    sp = add("lift-check", cmd_lift_check, "search for a liftability witness")
    sp.add_argument("--json", action="store_true")
    sp = add("sigma", cmd_sigma, "apply the lifting endomorphism")
    sp.add_argument("--word", required=True)
    sp.add_argument("--iterate", type=int, default=1)
    sp = add("nucleus", cmd_nucleus, "compute the nucleus")
    sp.add_argument("--verify-quasinucleus", type=int, metavar="K")
    sp.add_argument("--max-size", type=int)
    sp.add_argument("--dot", metavar="FILE")
    sp = add("wp", cmd_wp, "word problem")
    sp.add_argument("--word", required=True)
    sp = add("eq", cmd_eq, "element equality")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp = add("section", cmd_section, "section at a vertex")
    sp.add_argument("--word", required=True)
    sp.add_argument("--vertex", required=True)
    sp = add("act", cmd_act, "image of a vertex")
    sp.add_argument("--word", required=True)
    sp.add_argument("--on", required=True)
    sp = add("portrait", cmd_portrait, "nucleus portrait of an element")
    sp.add_argument("--word", required=True)
    sp.add_argument("--format", choices=("text", "dot"), default="text")
    sp = add("orbit", cmd_orbit, "orbit of the HNN extension on a ball of the unrooted tree")
    sp.add_argument("--kmax", type=int, default=2)
    sp.add_argument("--lmax", type=int, default=3)
    sp.add_argument("--json", action="store_true")
    add("export-gap", cmd_export_gap, "print the recursion as a GAP declaration")
    sp = add("selftest", cmd_selftest, "run the randomized property suites")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=100)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            d = load_datum(args.datum)
            T = build_recursion(d)
            code = args.fn(args, d, T)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return code
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (SpinalError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
