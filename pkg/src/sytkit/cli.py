"""Command-line surface: library operations plus the verification sweeps.

Exit codes: 0 success / check passed, 1 a verification check failed
(witnesses printed), 2 usage or parse error.  Text and DOT output are
byte-identical across runs and worker counts; JSON additionally carries
wall-clock ``elapsed_ms``, the one intentionally nondeterministic field.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hopf, verify, weakorder
from .knuthclass import knuth_class
from .permutation import ParseError, format_word, parse_word
from .report import VerificationReport
from .tableau import (
    evacuate,
    format_skew,
    format_tableau,
    jdt_slide,
    parse_skew,
    parse_tableau,
    restrict,
    rsk,
    skew_to_json,
    tableau_to_json,
    transpose,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

VERIFY_CHECKS = (
    "inner-translation",
    "inner-translation-fails",
    "special-cases",
    "hook-eta",
    "structural",
    "antisymmetry",
    "monotone",
    "interval-isomorphism",
)


def _add_output_flags(sub: argparse.ArgumentParser, formats=("text", "json")) -> None:
    sub.add_argument("--format", choices=formats, default="text")
    sub.add_argument("--out", metavar="PATH", help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sytkit",
        description="standard Young tableaux: insertion, classes, the weak order, checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rsk = sub.add_parser("rsk", help="insertion and recording tableaux of a word")
    p_rsk.add_argument("word")
    _add_output_flags(p_rsk)

    p_class = sub.add_parser("class", help="all words inserting to a tableau")
    p_class.add_argument("tableau")
    _add_output_flags(p_class)

    p_poset = sub.add_parser("poset", help="the weak order poset on size-n tableaux")
    p_poset.add_argument("--n", type=int, required=True)
    p_poset.add_argument("--jobs", type=int, default=1)
    _add_output_flags(p_poset, formats=("text", "json", "dot"))

    p_verify = sub.add_parser("verify", help="run an exhaustive check")
    p_verify.add_argument("check", choices=VERIFY_CHECKS)
    p_verify.add_argument("--n", type=int, default=6,
                          help="size swept (the hook length k for hook-eta)")
    p_verify.add_argument("--k", type=int, default=None,
                          help="first factor size for interval-isomorphism")
    p_verify.add_argument("--mode", choices=("cover", "order"), default="cover")
    p_verify.add_argument("--family", choices=("two-row", "two-col", "hook"),
                          default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    _add_output_flags(p_verify)

    p_product = sub.add_parser("product", help="shuffle product of two tableau classes")
    p_product.add_argument("left")
    p_product.add_argument("right")
    _add_output_flags(p_product)

    p_interval = sub.add_parser(
        "interval", help="order interval bounding the product of two tableaux"
    )
    p_interval.add_argument("left")
    p_interval.add_argument("right")
    p_interval.add_argument("--jobs", type=int, default=1)
    _add_output_flags(p_interval)

    p_restrict = sub.add_parser("restrict", help="restrict a tableau to a letter segment")
    p_restrict.add_argument("tableau")
    p_restrict.add_argument("i", type=int)
    p_restrict.add_argument("j", type=int)
    _add_output_flags(p_restrict)

    p_evac = sub.add_parser("evac", help="evacuation of a tableau")
    p_evac.add_argument("tableau")
    _add_output_flags(p_evac)

    p_transpose = sub.add_parser("transpose", help="transpose of a tableau")
    p_transpose.add_argument("tableau")
    _add_output_flags(p_transpose)

    p_jdt = sub.add_parser(
        "jdt",
        help="one jeu de taquin slide on a skew tableau (gaps written '.')",
    )
    p_jdt.add_argument("skew")
    p_jdt.add_argument("row", type=int)
    p_jdt.add_argument("col", type=int)
    p_jdt.add_argument("direction", choices=("forward", "backward"))
    _add_output_flags(p_jdt)

    return parser


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _report_text(reports: list[VerificationReport]) -> str:
    blocks = ["\n".join(r.text_lines()) for r in reports]
    return "\n\n".join(blocks) + "\n"


def _run_verify(args) -> tuple[int, str]:
    check = args.check
    if check == "inner-translation":
        reports = [verify.verify_inner_tableau_translation(args.n, args.mode, args.jobs)]
    elif check == "inner-translation-fails":
        reports = [verify.verify_inner_translation_fails(args.jobs)]
    elif check == "special-cases":
        if args.family is None:
            raise ValueError("special-cases needs --family")
        family = args.family.replace("-", "_")
        reports = [verify.verify_special_cases(args.n, family, args.mode, args.jobs)]
    elif check == "hook-eta":
        reports = [verify.verify_hook_eta(args.n)]
    elif check == "structural":
        reports = verify.verify_structural(args.n, jobs=args.jobs)
    elif check == "antisymmetry":
        reports = [verify.verify_antisymmetry(args.n, jobs=args.jobs)]
    elif check == "monotone":
        p = weakorder.cached_poset(args.n, jobs=args.jobs)
        reports = [
            weakorder.check_monotone_descent(p),
            weakorder.check_monotone_shape(p),
        ]
    else:  # interval-isomorphism
        k = args.k if args.k is not None else args.n // 2
        reports = [hopf.verify_interval_isomorphism(k, args.n - k, jobs=args.jobs)]
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATION
    if args.format == "json":
        payload = [r.to_json() for r in reports]
        return code, _dumps(payload[0] if len(payload) == 1 else payload)
    return code, _report_text(reports)


def _dispatch(args) -> tuple[int, str]:
    if args.command == "rsk":
        word = parse_word(args.word)
        insertion, recording = rsk(word)
        if args.format == "json":
            return EXIT_OK, _dumps(
                {
                    "word": format_word(word),
                    "insertion": tableau_to_json(insertion),
                    "recording": tableau_to_json(recording),
                }
            )
        return EXIT_OK, (
            f"I: {format_tableau(insertion)}\nR: {format_tableau(recording)}\n"
        )

    if args.command == "class":
        tab = parse_tableau(args.tableau)
        words = sorted(knuth_class(tab).words)
        if args.format == "json":
            return EXIT_OK, _dumps(
                {
                    "tableau": format_tableau(tab),
                    "words": [format_word(w) for w in words],
                }
            )
        return EXIT_OK, "".join(format_word(w) + "\n" for w in words)

    if args.command == "poset":
        p = weakorder.cached_poset(args.n, jobs=args.jobs)
        if args.format == "dot":
            return EXIT_OK, weakorder.to_dot(p)
        if args.format == "json":
            return EXIT_OK, _dumps(weakorder.poset_to_json(p))
        lines = [f"n: {p.n}", f"nodes: {len(p.nodes)}", f"covers: {len(p.covers)}"]
        for i, t in enumerate(p.nodes):
            lines.append(f"node {i}: {format_tableau(t)}")
        for a, b in p.covers:
            lines.append(f"cover: {a} -> {b}")
        return EXIT_OK, "\n".join(lines) + "\n"

    if args.command == "verify":
        return _run_verify(args)

    if args.command == "product":
        left = parse_tableau(args.left)
        right = parse_tableau(args.right)
        result = hopf.plactic_product(left, right)
        if args.format == "json":
            return EXIT_OK, _dumps(
                {
                    "terms": [
                        {"tableau": format_tableau(t), "multiplicity": m}
                        for t, m in sorted(
                            result.terms.items(),
                            key=lambda kv: weakorder.canonical_key(kv[0]),
                        )
                    ]
                }
            )
        return EXIT_OK, "".join(
            f"{format_tableau(t)} x{result.terms[t]}\n" for t in result.support()
        )

    if args.command == "interval":
        left = parse_tableau(args.left)
        right = parse_tableau(args.right)
        n = sum(len(r) for r in left) + sum(len(r) for r in right)
        p = weakorder.cached_poset(n, jobs=args.jobs)
        iv = hopf.product_interval(left, right, p)
        members = iv.member_tableaux()
        if args.format == "json":
            return EXIT_OK, _dumps(
                {
                    "bottom": format_tableau(p.nodes[iv.bottom]),
                    "top": format_tableau(p.nodes[iv.top]),
                    "members": [format_tableau(t) for t in members],
                    "covers": [list(e) for e in iv.covers],
                }
            )
        lines = [
            f"bottom: {format_tableau(p.nodes[iv.bottom])}",
            f"top: {format_tableau(p.nodes[iv.top])}",
        ]
        lines += [format_tableau(t) for t in members]
        return EXIT_OK, "\n".join(lines) + "\n"

    if args.command == "restrict":
        tab = restrict(parse_tableau(args.tableau), args.i, args.j)
        if args.format == "json":
            return EXIT_OK, _dumps(tableau_to_json(tab))
        return EXIT_OK, format_tableau(tab) + "\n"

    if args.command == "evac":
        tab = evacuate(parse_tableau(args.tableau))
        if args.format == "json":
            return EXIT_OK, _dumps(tableau_to_json(tab))
        return EXIT_OK, format_tableau(tab) + "\n"

    if args.command == "transpose":
        tab = transpose(parse_tableau(args.tableau))
        if args.format == "json":
            return EXIT_OK, _dumps(tableau_to_json(tab))
        return EXIT_OK, format_tableau(tab) + "\n"

    if args.command == "jdt":
        skew = parse_skew(args.skew)
        moved = jdt_slide(skew, (args.row, args.col), args.direction)
        if args.format == "json":
            return EXIT_OK, _dumps(skew_to_json(moved))
        return EXIT_OK, format_skew(moved) + "\n"

    raise ValueError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, text = _dispatch(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "out", None):
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
