"""Command-line interface.

Subcommands: gen, demazure, opposite, extremal, iota, kappa, star,
convert, scan-qdem, selftest.  Exit codes: 0 success, 1 usage error,
2 validation failure, 3 size gate exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import crystal, demazure, polytopes, strata
from .polytopes import LusztigDatum, change_word, datum_to_json, star, validate, vertices
from .weyl import SizeGateError, root_datum
from .words import ReducedWord

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_GATE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _int_csv(text):
    text = text.strip()
    if text in ("", "e"):
        return ()
    return tuple(int(x) for x in text.split(","))


def _build_parser():
    top = _Parser(prog="mvcrystal", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, lam=True, datum_args=False, x=False):
        p.add_argument("--type", required=True, help="root datum, e.g. A2, D4, E6")
        if lam:
            p.add_argument("--lambda", dest="lam", help="coroot coordinates, e.g. 1,1")
        if datum_args:
            p.add_argument("--word", required=True, help="reduced word of w0, e.g. 1,2,1")
            p.add_argument("--n", required=True, help="edge lengths, e.g. 0,1,0")
        if x:
            p.add_argument("--x", required=True, help="reduced word for x (empty or 'e' for identity)")
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("gen", help="generate a highest-weight crystal graph")
    common(p)
    p.add_argument("--format", choices=("json", "dot", "csv"), default="json")

    p = sub.add_parser("demazure", help="Demazure membership of a polytope")
    common(p, datum_args=True, x=True)
    p.add_argument("--method", choices=("fast", "oracle"), default="fast")

    p = sub.add_parser("opposite", help="opposite Demazure membership")
    common(p, datum_args=True, x=True)
    p.add_argument("--method", choices=("fast", "oracle", "fmax", "polytopal"), default="fast")

    p = sub.add_parser("extremal", help="extremal MV polytope of weight x.lambda")
    common(p, x=True)

    p = sub.add_parser("iota", help="finest Demazure stratum of a polytope")
    common(p, datum_args=True)

    p = sub.add_parser("kappa", help="finest opposite Demazure stratum")
    common(p, datum_args=True)

    p = sub.add_parser("star", help="Kashiwara involution on the infinity family")
    common(p, lam=False, datum_args=True)

    p = sub.add_parser("convert", help="re-coordinatize along another word")
    common(p, datum_args=True)
    p.add_argument("--to", required=True, help="target reduced word of w0")

    p = sub.add_parser("scan-qdem", help="scan for extremal-containment counterexamples")
    common(p)

    p = sub.add_parser("selftest", help="run the oracle-equivalence smoke suite")
    p.add_argument("--out", help="write output to this path instead of stdout")

    return top


def _load_datum(args, base_required=True):
    datum = root_datum(args.type)
    base = None
    lam_text = getattr(args, "lam", None)
    if lam_text is not None:
        base = datum.coweight(_int_csv(lam_text))
    elif base_required:
        raise ValueError("--lambda is required for this command")
    word = ReducedWord(datum, _int_csv(args.word))
    return LusztigDatum(word, _int_csv(args.n), base)


def _load_x(args, datum):
    return datum.evaluate(_int_csv(args.x))


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    if args.command == "gen":
        datum = root_datum(args.type)
        lam = datum.coweight(_int_csv(args.lam))
        graph = crystal.generate_crystal(datum, lam)
        if args.format == "json":
            _emit(args, json.dumps(graph.to_json_dict(), indent=2) + "\n")
        elif args.format == "dot":
            _emit(args, graph.to_dot())
        else:
            _emit(args, graph.to_csv())
        return EXIT_OK

    if args.command == "demazure":
        d = _load_datum(args, base_required=False)
        x = _load_x(args, d.datum)
        if args.method == "fast":
            report = demazure.in_demazure(d, x, with_witness=True)
            _emit(args, json.dumps(report.to_json()) + "\n")
        else:
            if d.base is None:
                raise ValueError("the oracle route needs --lambda")
            member = polytopes.canonicalize(d) in demazure.oracle_demazure_set(x, d.base)
            _emit(args, json.dumps({"member": member, "method": "OracleInductive", "witness": None}) + "\n")
        return EXIT_OK

    if args.command == "opposite":
        d = _load_datum(args)
        x = _load_x(args, d.datum)
        if args.method == "fast":
            report = demazure.in_opposite_demazure(d, x, with_witness=True)
        elif args.method == "fmax":
            report = demazure.MembershipReport(
                demazure.in_opposite_demazure_fmax(d, x), "FmaxChain", None
            )
        elif args.method == "polytopal":
            report = demazure.MembershipReport(
                demazure.in_opposite_demazure_polytopal(d, x), "Polytopal", None
            )
        else:
            member = polytopes.canonicalize(d) in demazure.oracle_opposite_set(x, d.base)
            report = demazure.MembershipReport(member, "OracleInductive", None)
        _emit(args, json.dumps(report.to_json()) + "\n")
        return EXIT_OK

    if args.command == "extremal":
        datum = root_datum(args.type)
        lam = datum.coweight(_int_csv(args.lam))
        x = datum.evaluate(_int_csv(args.x))
        d = demazure.extremal(x, lam)
        payload = datum_to_json(d)
        payload["vertices"] = vertices(d).to_json()
        _emit(args, json.dumps(payload, indent=2) + "\n")
        return EXIT_OK

    if args.command in ("iota", "kappa"):
        d = _load_datum(args, base_required=(args.command == "kappa"))
        report = validate(d)
        if not report.ok:
            raise ValueError("; ".join(report.issues))
        if args.command == "iota":
            z = strata.iota(d)
        else:
            try:
                z = strata.kappa(d)
            except SizeGateError:
                z = strata.kappa_predicate(d)
        _emit(args, json.dumps({args.command: ",".join(map(str, z.lex_word()))}) + "\n")
        return EXIT_OK

    if args.command == "star":
        d = _load_datum(args, base_required=False)
        _emit(args, json.dumps(datum_to_json(star(d))) + "\n")
        return EXIT_OK

    if args.command == "convert":
        d = _load_datum(args, base_required=False)
        out = change_word(d, _int_csv(args.to))
        _emit(args, json.dumps(datum_to_json(out)) + "\n")
        return EXIT_OK

    if args.command == "scan-qdem":
        datum = root_datum(args.type)
        lam = datum.coweight(_int_csv(args.lam))
        _emit(args, json.dumps(crystal.scan_question(datum, lam), indent=2) + "\n")
        return EXIT_OK

    if args.command == "selftest":
        return _selftest(args)

    raise AssertionError("unreachable")


def _selftest(args) -> int:
    """Oracle-equivalence smoke suite on A2; exits 2 on any discrepancy."""
    from .strata import iota, iota_shortcut, kappa, oracle_iota, oracle_kappa

    datum = root_datum("A2")
    lam = datum.coweight((1, 1))
    lines = []
    ok = True
    graph = crystal.generate_crystal(datum, lam, with_strata=False)
    for x in datum.full_group():
        dem_set = demazure.oracle_demazure_set(x, lam)
        opp_set = demazure.oracle_opposite_set(x, lam)
        for node in graph.nodes:
            d = node.datum
            if demazure.in_demazure(d, x).member != (d in dem_set):
                ok = False
                lines.append(f"FAIL demazure x={x!r} n={d.n}")
            fast = demazure.in_opposite_demazure(d, x).member
            if not (
                fast
                == demazure.in_opposite_demazure_fmax(d, x)
                == demazure.in_opposite_demazure_polytopal(d, x)
                == (d in opp_set)
            ):
                ok = False
                lines.append(f"FAIL opposite x={x!r} n={d.n}")
    for node in graph.nodes:
        d = node.datum
        if not iota(d) == iota_shortcut(d) == oracle_iota(d):
            ok = False
            lines.append(f"FAIL iota n={d.n}")
        if not kappa(d) == oracle_kappa(d):
            ok = False
            lines.append(f"FAIL kappa n={d.n}")
    lines.append("selftest OK" if ok else "selftest FAILED")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_VALIDATION


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _run(args)
    except SizeGateError as err:
        print(f"size gate exceeded: {err}", file=sys.stderr)
        return EXIT_GATE
    except (ValueError, KeyError) as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return EXIT_VALIDATION


def cli_main(argv=None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
