"""Command-line front end.

Subcommands mirror the library layers: ``gr`` for Young-diagram analysis
of Grassmannian Schubert varieties, ``quiver`` for building and rendering
marked quivers, ``smt`` for standard-monomial section counts, and
``verify`` for the built-in cross-check suites.

Reports are plain text by default and a stable JSON envelope
``{"input", "result", "witnesses", "warnings"}`` under ``--json`` (keys
sorted, two-space indent, so identical queries produce identical bytes).
Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, criteria, grassmannian as gr, quiver as qv, smt, verify
from .rootdata import root_system
from .weyl import word_to_perm


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.replace(",", " ").split())


def _emit(args, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True, default=list))
    else:
        for line in _render_text(payload):
            print(line)


def _render_text(payload: dict):
    result = payload.get("result", {})
    for key in sorted(result):
        yield f"{key}: {_plain(result[key])}"
    for w in payload.get("warnings", []):
        yield f"warning: {w}"


def _plain(value):
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_plain(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}={_plain(v)}" for k, v in sorted(value.items())) + "}"
    return str(value)


# ---------------------------------------------------------------------------


def cmd_gr_analyze(args) -> int:
    w = _ints(args.w)
    try:
        gr.check_indexset(w, args.r, args.n)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    lam = gr.indexset_to_partition(w, args.r, args.n)
    ss = criteria.e_ss_gr(w, args.r, args.n)
    report = criteria.semistable_meets_singular_gr(w, args.r, args.n)
    quotient = gr.quotient_smoothness_report(w, args.r, args.n)
    warnings = list(report["warnings"])
    if report["semistable_nonempty"]:
        separated = report["separated"]
    else:
        separated = None
        warnings.append("no semistable points below this element")
    certificate = smt.semistable_nonempty_gr(w, args.r, args.n)
    witnesses = []
    if certificate["found"]:
        witnesses.append(
            {"degree": certificate["degree"], "chain": certificate["witness"]}
        )
    payload = {
        "input": {"n": args.n, "r": args.r, "w": w},
        "result": {
            "partition": lam,
            "corners": gr.corners(lam, args.r, args.n),
            "singular_components": gr.singular_components(lam, args.r, args.n),
            "smooth": gr.is_smooth(lam, args.r, args.n),
            "minimal_v": {
                "value": ss["minimal"],
                "formula": ss["formula"],
                "oracle": ss["oracle"],
                "agrees": ss["formula"] == ss["minimal"]
                and (ss["oracle"] is None or sorted(ss["oracle"]) == [ss["minimal"]]),
            },
            "semistable_nonempty": report["semistable_nonempty"],
            "ss_in_smooth": separated,
            "quotient_smooth": quotient["quotient_smooth"],
        },
        "witnesses": witnesses,
        "warnings": warnings,
    }
    _emit(args, payload)
    return 0


def _resolve_node(model, args):
    if args.w == "minimal":
        return criteria.minuscule_minimal_v_node(model)
    if args.w == "full":
        return model.poset.bottom
    values = _ints(args.w)
    if args.element_format == "indexset":
        return model.poset.node_of_indexset(values)
    if not model.poset.word_descends(values):
        raise SystemExit(f"error: {values} is not a reduced word in this orbit")
    return model.poset.node_from_word(values)


def cmd_quiver_build(args) -> int:
    rank = args.rank
    if args.family == "E6":
        rank = 6
    elif args.family == "E7":
        rank = 7
    elif rank is None:
        raise SystemExit("error: --rank is required for families A and D")
    try:
        model = criteria.minuscule_model(args.family, rank, args.weight)
        node = _resolve_node(model, args)
    except (ValueError, KeyError) as exc:
        raise SystemExit(f"error: {exc}")
    marked = model.quiver_of(node)
    holes = qv.classify_holes(marked)
    components = model.singular_components(node)
    payload = {
        "input": {
            "family": args.family,
            "rank": rank,
            "weight": args.weight,
            "w": args.w,
        },
        "result": {
            "word": model.poset.canonical_word(node),
            "length": model.poset.depth(node),
            "vertices": marked.n_vertices,
            "members": sorted(marked.members),
            "holes": {
                "real": holes.real,
                "virtual": holes.virtual,
                "essential": holes.essential,
            },
            "smooth": qv.is_smooth_quiver(marked),
            "singular_components": [
                model.poset.canonical_word(c) for c in components
            ],
        },
        "witnesses": [],
        "warnings": [],
    }
    if args.dot:
        with open(args.dot, "w", newline="") as handle:
            handle.write(qv.quiver_to_dot(marked))
        if not args.json:
            print(f"wrote {args.dot}")
    _emit(args, payload)
    return 0


def _smt_element(args):
    values = _ints(args.w)
    if args.element_format == "word":
        return word_to_perm(values, args.n)
    if sorted(values) != list(range(1, args.n + 1)):
        raise SystemExit(f"error: {values} is not a permutation of 1..{args.n}")
    return values


def cmd_smt_dim(args) -> int:
    w = _smt_element(args)
    witnesses = smt.invariant_witnesses(w, args.m)
    payload = {
        "input": {"n": args.n, "w": w, "m": args.m},
        "result": {"dim": len(witnesses), "m": args.m},
        "witnesses": [
            {"shorts": t.shorts, "missings": t.missings} for t in witnesses
        ],
        "warnings": [],
    }
    _emit(args, payload)
    return 0


def cmd_smt_minimal(args) -> int:
    elements = smt.minimal_borel_semistable(args.n)
    payload = {
        "input": {"n": args.n},
        "result": {"count": len(elements), "elements": elements},
        "witnesses": [],
        "warnings": [],
    }
    _emit(args, payload)
    return 0


def cmd_smt_pn_check(args) -> int:
    w = _smt_element(args)
    degrees = tuple(range(2, args.max_m + 1))
    report = smt.projective_normality_check(w, degrees)
    payload = {
        "input": {"n": args.n, "w": w, "max_m": args.max_m},
        "result": report,
        "witnesses": [],
        "warnings": [],
    }
    _emit(args, payload)
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "minima-sweep" and args.max_n:
        kwargs["max_n"] = args.max_n
    try:
        results = verify.run_suite(args.suite, **kwargs)
    except KeyError:
        raise SystemExit(f"error: unknown suite {args.suite!r}")
    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True, default=list))
    else:
        for res in results:
            status = "PASS" if res["passed"] else "FAIL"
            print(f"{res['suite']}: {status} ({res['checks']} checks)")
            for f in res["failures"]:
                print(f"  {f}")
    return 0 if all(r["passed"] for r in results) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusq",
        description="Torus quotients of minuscule Schubert varieties: "
        "smoothness, semistability, and section counts.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gr = sub.add_parser("gr", help="Grassmannian Schubert varieties")
    gr_sub = p_gr.add_subparsers(dest="gr_command", required=True)
    p_an = gr_sub.add_parser("analyze", help="full diagram report for one element")
    p_an.add_argument("--n", type=int, required=True)
    p_an.add_argument("--r", type=int, required=True)
    p_an.add_argument("--w", required=True, help="column set, e.g. 2,4")
    p_an.add_argument("--json", action="store_true")
    p_an.set_defaults(func=cmd_gr_analyze)

    p_q = sub.add_parser("quiver", help="minuscule quivers")
    q_sub = p_q.add_subparsers(dest="quiver_command", required=True)
    p_qb = q_sub.add_parser("build", help="build/mark a quiver, optionally as DOT")
    p_qb.add_argument("--family", choices=["A", "D", "E6", "E7"], required=True)
    p_qb.add_argument("--rank", type=int)
    p_qb.add_argument("--weight", type=int, required=True)
    p_qb.add_argument(
        "--w",
        default="minimal",
        help="'minimal', 'full', a reduced word, or an index set with --as indexset",
    )
    p_qb.add_argument("--as", dest="element_format", choices=["word", "indexset"],
                      default="word")
    p_qb.add_argument("--dot", help="write a Graphviz file here")
    p_qb.add_argument("--json", action="store_true")
    p_qb.set_defaults(func=cmd_quiver_build)

    p_s = sub.add_parser("smt", help="standard-monomial section counts")
    s_sub = p_s.add_subparsers(dest="smt_command", required=True)
    p_sd = s_sub.add_parser("dim", help="invariant section count on X(w)")
    p_sd.add_argument("--n", type=int, required=True)
    p_sd.add_argument("--w", required=True)
    p_sd.add_argument("--as", dest="element_format", choices=["oneline", "word"],
                      default="oneline")
    p_sd.add_argument("--m", type=int, required=True)
    p_sd.add_argument("--json", action="store_true")
    p_sd.set_defaults(func=cmd_smt_dim)
    p_sm = s_sub.add_parser("minimal", help="minimal semistable permutations")
    p_sm.add_argument("--n", type=int, required=True)
    p_sm.add_argument("--json", action="store_true")
    p_sm.set_defaults(func=cmd_smt_minimal)
    p_sp = s_sub.add_parser("pn-check", help="polynomial-ring growth of sections")
    p_sp.add_argument("--n", type=int, required=True)
    p_sp.add_argument("--w", required=True)
    p_sp.add_argument("--as", dest="element_format", choices=["oneline", "word"],
                      default="oneline")
    p_sp.add_argument("--max-m", type=int, default=3)
    p_sp.add_argument("--json", action="store_true")
    p_sp.set_defaults(func=cmd_smt_pn_check)

    p_v = sub.add_parser("verify", help="run a built-in verification suite")
    p_v.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p_v.add_argument("--max-n", type=int, help="cap for the minima sweep")
    p_v.add_argument("--json", action="store_true")
    p_v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
