"""Command-line front end.

A thin client over the service handlers: every subcommand parses its
arguments into the same request models the HTTP endpoints accept, calls the
handler in process, and renders the response.  Partitions are written as
comma-separated parts, with '-' for the empty partition.

Exit codes: 0 success; 1 a verification suite failed; 2 unparseable input
or an exceeded budget; 3 a cross-check disagreement (oracle vs fast
containment, or closed vs enumerated series).
"""

from __future__ import annotations

import argparse
import csv as csv_mod
import io
import sys
from typing import Optional

from .errors import BudgetExceededError
from .partitions import Partition
from .series import DEFAULT_DEGREE_BOUND
from .service import handlers
from .service import schemas as s

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_DISAGREEMENT = 3


def _parts(text: str) -> list:
    return list(Partition.parse(text))


def _emit_json(model) -> None:
    print(model.model_dump_json(by_alias=True, indent=2))


def _emit_csv(rows) -> None:
    buf = io.StringIO()
    writer = csv_mod.writer(buf)
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(buf.getvalue())


def _series_rows(header: str, coeffs) -> list:
    return [["degree", header]] + [[n, c] for n, c in enumerate(coeffs)]


def cmd_contains(args) -> int:
    resp = handlers.contains_handler(
        s.ContainsRequest(sigma=_parts(args.sigma), mu=_parts(args.mu), oracle=args.oracle)
    )
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        rows = [["field", "value"], ["contains", resp.contains]]
        if resp.oracle is not None:
            rows += [["oracle", resp.oracle], ["agree", resp.agree]]
        _emit_csv(rows)
    else:
        print(str(resp.contains).lower())
        if resp.oracle is not None:
            print(f"oracle: {str(resp.oracle).lower()}  agree: {str(resp.agree).lower()}")
    if resp.agree is False:
        print("error: fast containment disagrees with the oracle", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_gf(args) -> int:
    resp = handlers.gf_handler(
        s.GfRequest(
            mu=_parts(args.mu), k=args.k, n_max=args.N, method=args.method, h=args.h
        )
    )
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        rows = [["degree", "enumerated", "closed"]]
        n = args.N + 1
        for d in range(n):
            rows.append(
                [
                    d,
                    resp.enumerated[d] if resp.enumerated else "",
                    resp.closed[d] if resp.closed else "",
                ]
            )
        _emit_csv(rows)
    else:
        if resp.notice:
            print(f"note: {resp.notice}")
        if resp.enumerated is not None:
            print("enumerated:", " ".join(resp.enumerated))
        if resp.closed is not None:
            print("closed:    ", " ".join(resp.closed))
        if resp.match is not None:
            print("match:", str(resp.match).lower())
    if resp.match is False:
        print("error: closed form disagrees with enumeration", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_wilf_series(args) -> int:
    resp = handlers.wilf_series_handler(
        s.WilfSeriesRequest(mu=_parts(args.mu), n_max=args.N)
    )
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        _emit_csv(_series_rows("coefficient", resp.coefficients))
    else:
        print(" ".join(resp.coefficients))
    return EXIT_OK


def cmd_equiv(args) -> int:
    resp = handlers.equiv_handler(
        s.EquivRequest(
            mu=_parts(args.mu), tau=_parts(args.tau), mode=args.mode, n_max=args.N
        )
    )
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        _emit_csv(
            [["field", "value"], ["mode", resp.mode], ["equivalent", resp.equivalent],
             ["verified_up_to", resp.verified_up_to]]
        )
    else:
        suffix = "" if resp.verified_up_to is None else f" (verified up to N={resp.verified_up_to})"
        print(f"{str(resp.equivalent).lower()}{suffix}")
    return EXIT_OK


def cmd_chain(args) -> int:
    resp = handlers.chain_handler(
        s.ChainRequest(mu=_parts(args.mu), tau=_parts(args.tau), max_steps=args.max_steps)
    )
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        rows = [["i", "j"]] + ([[st.i, st.j] for st in resp.steps] if resp.steps else [])
        _emit_csv(rows)
    else:
        if resp.found:
            print(" ".join(f"({st.i},{st.j})" for st in resp.steps) or "(identity)")
        else:
            print("no chain found")
    return EXIT_OK


def cmd_classes(args) -> int:
    resp = handlers.classes_handler(s.ClassesRequest(n=args.n))
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        rows = [["class", "partition"]]
        for idx, cls in enumerate(resp.classes):
            for p in cls:
                rows.append([idx, Partition(p).text()])
        _emit_csv(rows)
    else:
        for cls in resp.classes:
            print("  ".join(Partition(p).text() for p in cls))
    return EXIT_OK


def _entry_text(e: s.ProfileEntryModel) -> str:
    return f"({e.p},[{e.a},{e.b}])"


def cmd_profile(args) -> int:
    resp = handlers.profile_handler(
        s.PartitionSetRequest(partitions=[_parts(p) for p in args.partitions])
    )
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        _emit_csv([["p", "a", "b"]] + [[e.p, e.a, e.b] for e in resp.profile])
    else:
        print(" ".join(_entry_text(e) for e in resp.profile))
    return EXIT_OK


def cmd_closure(args) -> int:
    resp = handlers.closure_handler(
        s.PartitionSetRequest(partitions=[_parts(p) for p in args.partitions])
    )
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        _emit_csv([["partition"]] + [[Partition(p).text()] for p in resp.closure])
    else:
        for p in resp.closure:
            print(Partition(p).text())
    return EXIT_OK


def cmd_staircases(args) -> int:
    resp = handlers.staircases_handler(s.StaircasesRequest(h=args.h, k=args.k))
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        rows = [["staircase", "p", "a", "b"]]
        for idx, st in enumerate(resp.staircases):
            for e in st:
                rows.append([idx, e.p, e.a, e.b])
        _emit_csv(rows)
    else:
        print(f"{resp.count} staircases")
        for st in resp.staircases:
            print(" ".join(_entry_text(e) for e in st))
    return EXIT_OK


def cmd_augmented(args) -> int:
    resp = handlers.augmented_handler(
        s.AugmentedRequest(mu=_parts(args.mu), k=args.k, h=args.h, max_weight=args.max_weight)
    )
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        rows = [["mu", "lambda", "off", "weight", "sign"]]
        for st in resp.structures:
            rows.append(
                [
                    Partition(st.mu).text(),
                    Partition(st.lam).text(),
                    Partition(st.off).text(),
                    st.weight,
                    st.sign,
                ]
            )
        _emit_csv(rows)
    else:
        print(f"{resp.count} structures")
        for st in resp.structures:
            print(
                f"lambda={Partition(st.lam).text()} off={Partition(st.off).text()} "
                f"weight={st.weight} sign={st.sign:+d}"
            )
    return EXIT_OK


def cmd_verify(args) -> int:
    resp = handlers.verify_handler(
        s.VerifyRequest(suite=args.suite, seed=args.seed, n_max=args.N, quick=args.quick)
    )
    for check in resp.checks:
        status = "PASS" if check.ok else "FAIL"
        print(f"{status} {check.name} ({check.seconds:.2f}s)", file=sys.stderr)
    _emit_json(resp)
    return EXIT_OK if resp.passed else EXIT_CHECK_FAILED


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ferrers",
        description="Integer-partition pattern containment, q-series, and rook/Wilf equivalence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, with_format=True):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        if with_format:
            p.add_argument(
                "--format", choices=("plain", "json", "csv"), default="plain",
                help="output format (default plain)",
            )
        return p

    p = add("contains", cmd_contains, "decide whether sigma contains mu")
    p.add_argument("sigma")
    p.add_argument("mu")
    p.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")

    p = add("gf", cmd_gf, "width-offset containment series for mu")
    p.add_argument("mu")
    p.add_argument("--k", type=int, required=True, help="width offset")
    p.add_argument("--N", type=int, default=DEFAULT_DEGREE_BOUND, help="degree bound")
    p.add_argument("--h", type=int, default=None, help="height context (default: height of mu)")
    p.add_argument("--method", choices=("enum", "closed", "both"), default="both")

    p = add("wilf-series", cmd_wilf_series, "series counting all partitions containing mu")
    p.add_argument("mu")
    p.add_argument("--N", type=int, default=DEFAULT_DEGREE_BOUND)

    p = add("equiv", cmd_equiv, "rook / Wilf / width-Wilf equivalence decision")
    p.add_argument("mu")
    p.add_argument("tau")
    p.add_argument("--mode", choices=("rook", "wilf", "width-wilf"), default="rook")
    p.add_argument("--N", type=int, default=18, help="degree bound for the series modes")

    p = add("chain", cmd_chain, "search for a corner-transform chain between two boards")
    p.add_argument("mu")
    p.add_argument("tau")
    p.add_argument("--max-steps", type=int, default=8)

    p = add("classes", cmd_classes, "rook-equivalence classes of a given weight")
    p.add_argument("--n", type=int, required=True, help="weight")

    p = add("profile", cmd_profile, "profile of a set of partitions")
    p.add_argument("partitions", nargs="+")

    p = add("closure", cmd_closure, "splicing closure of a set of partitions")
    p.add_argument("partitions", nargs="+")

    p = add("staircases", cmd_staircases, "enumerate staircases for (h, k)")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("augmented", cmd_augmented, "enumerate augmented structures for mu")
    p.add_argument("mu")
    p.add_argument("--k", type=int, required=True, help="total width of the two added boards")
    p.add_argument("--h", type=int, default=None, help="height context (default: height of mu)")
    p.add_argument("--max-weight", type=int, default=None, help="drop structures above this weight")

    p = add("verify", cmd_verify, "run a verification suite; prints a JSON summary", with_format=False)
    p.add_argument(
        "--suite",
        choices=("core", "profiles", "staircases", "gf", "equivalence", "all"),
        default="all",
    )
    p.add_argument("--seed", type=int, default=None, help="seed for sampled checks")
    p.add_argument("--N", type=int, default=None, help="override the degree bound")
    p.add_argument("--quick", action="store_true", help="shrink every range for a smoke run")

    p = add("serve", cmd_serve, "run the HTTP service (requires uvicorn)", with_format=False)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except BudgetExceededError as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
