"""Command-line front end: construct, verify, bounds, code, oracle.

Exit codes: 0 success / verified, 1 a verification or integrity check
failed, 2 bad usage, unparsable input, or a size guard was hit.  All
files the commands write are byte-deterministic: provenance strings
carry construction parameters only, never timestamps.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bounds import (
    bound_table,
    builtin_k_table,
    parse_k_table_csv,
    render_bound_reports_csv,
    render_bound_reports_text,
)
from .errors import ConstructionError, IntegrityError, UsageError
from .forbidden import (
    code_from_parity,
    direct_sum,
    forbidden_coset_partition,
    format_forbidden_code_file,
    greedy_forbidden_matrix,
    tail_full_space,
)
from .gf2 import (
    format_code_file,
    min_hamming_weight,
    named_code,
    parse_code_file,
)
from .partitions import (
    coloring_to_partition,
    format_certificate,
    from_binary_linear,
    parity_coloring,
    parse_certificate,
    partition_to_coloring,
    product_partition,
    z4_coset_partition,
    z4_punctured_partition,
)
from .verify import (
    exact_A_small,
    exact_chi_small,
    exact_Q_small,
    verify_coloring,
)
from .z4 import preparata_code

CONSTRUCT_METHODS = (
    "preparata-coset", "preparata-punctured", "linear-coset",
    "forbidden-greedy", "forbidden-directsum", "product", "parity",
)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="ascii") as handle:
            return handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="ascii") as handle:
            handle.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _emit(text: str, output: str | None) -> None:
    if output:
        _write(output, text)
    else:
        sys.stdout.write(text)


def _resolve_code(token: str, n: int | None, force: bool):
    """A code named by its family or stored in a file."""
    if os.path.exists(token):
        code, _ = parse_code_file(_read(token))
        return code
    return named_code(token, n)


def _require(args, *names) -> None:
    for name in names:
        if getattr(args, name) is None:
            flag = "--" + name.replace("_", "-")
            raise UsageError(f"{flag} is required for this invocation")


def _parse_n_tokens(tokens) -> list[int]:
    """Dimension tokens: plain integers or inclusive ranges like 2..20."""
    ns: list[int] = []
    for token in tokens:
        try:
            if ".." in token:
                low, high = token.split("..", 1)
                start, stop = int(low), int(high)
                if start > stop:
                    raise UsageError(f"empty range {token!r}")
                ns.extend(range(start, stop + 1))
            else:
                ns.append(int(token))
        except ValueError:
            raise UsageError(f"bad dimension token {token!r}") from None
    return ns


# ---------------------------------------------------------------------------
# Subcommand handlers

def cmd_construct(args) -> int:
    method = args.method
    if method in ("preparata-coset", "preparata-punctured"):
        _require(args, "r")
        code = preparata_code(args.r)
        if method == "preparata-coset":
            partition = z4_coset_partition(code, force=args.force)
        else:
            partition = z4_punctured_partition(code, force=args.force)
        certificate = partition_to_coloring(partition)
    elif method == "linear-coset":
        _require(args, "code", "d")
        base = _resolve_code(args.code, args.n, args.force)
        partition = from_binary_linear(base, args.d, force=args.force)
        certificate = partition_to_coloring(partition)
    elif method == "forbidden-greedy":
        _require(args, "n", "d")
        code = code_from_parity(
            greedy_forbidden_matrix(args.n, args.d), args.d, force=args.force)
        partition = forbidden_coset_partition(code, force=args.force)
        certificate = partition_to_coloring(partition)
    elif method == "forbidden-directsum":
        _require(args, "base", "d")
        base = _resolve_code(args.base, args.n, args.force)
        code = direct_sum(base, tail_full_space(args.d), force=args.force)
        partition = forbidden_coset_partition(code, force=args.force)
        certificate = partition_to_coloring(partition)
    elif method == "product":
        _require(args, "left", "right")
        left = coloring_to_partition(parse_certificate(_read(args.left)))
        right = coloring_to_partition(parse_certificate(_read(args.right)))
        partition = product_partition(left, right)
        certificate = partition_to_coloring(partition)
    else:
        _require(args, "n", "d")
        certificate = parity_coloring(args.n, args.d)
    text = format_certificate(certificate)
    if args.output:
        _write(args.output, text)
        print(f"wrote {args.output}: n={certificate.n} d={certificate.d} "
              f"mode={certificate.mode} colors={certificate.color_count}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    certificate = parse_certificate(_read(args.path))
    report = verify_coloring(certificate, force=args.force,
                             strategy=args.strategy)
    if args.report_format == "csv":
        sys.stdout.write(report.render_csv())
        stored = report.render_csv(include_timing=False)
    else:
        sys.stdout.write(report.render_text())
        stored = report.render_text(include_timing=False)
    if args.output:
        _write(args.output, stored)
    return 0 if report.passed else 1


def cmd_bounds(args) -> int:
    ns = _parse_n_tokens(args.n)
    if not ns:
        raise UsageError("no dimensions given")
    table = builtin_k_table()
    if args.k_table:
        table.merge(parse_k_table_csv(_read(args.k_table)))
    reports = bound_table(args.quantity, args.d, ns, kt=table,
                          include_greedy=args.with_greedy,
                          include_oracle=args.with_oracle)
    if args.format == "csv":
        _emit(render_bound_reports_csv(reports), args.output)
    else:
        _emit(render_bound_reports_text(reports), args.output)
    return 0


def cmd_code(args) -> int:
    if args.action == "named":
        code = named_code(args.name, args.n)
        _emit(format_code_file(code), args.output)
        return 0
    if args.action == "greedy":
        code = code_from_parity(
            greedy_forbidden_matrix(args.n, args.d), args.d, force=args.force)
        _emit(format_forbidden_code_file(code), args.output)
        return 0
    if args.action == "directsum":
        base = _resolve_code(args.base, args.n, args.force)
        code = direct_sum(base, tail_full_space(args.d), force=args.force)
        _emit(format_forbidden_code_file(code), args.output)
        return 0
    base, forbidden_d = parse_code_file(_read(args.path))
    lines = [f"length: {base.length}", f"dimension: {base.dimension}",
             f"codewords: {1 << base.dimension}"]
    if base.dimension:
        lines.append(f"min-weight: {min_hamming_weight(base, force=args.force)}")
    status = 0
    if forbidden_d is not None:
        lines.append(f"forbidden-distance: {forbidden_d}")
        from .forbidden import forbidden_code

        try:
            forbidden_code(base, forbidden_d, force=args.force)
        except ConstructionError as exc:
            lines.append(f"forbidden-check: VIOLATED ({exc})")
            status = 1
        else:
            lines.append("forbidden-check: ok")
    print("\n".join(lines))
    return status


def cmd_oracle(args) -> int:
    if args.action == "chi":
        value = exact_chi_small(args.n, args.d, args.mode, force=args.force)
    elif args.action == "a":
        value = exact_A_small(args.n, args.d, force=args.force)
    else:
        value = exact_Q_small(args.n, args.d, force=args.force)
    print(value)
    return 0


# ---------------------------------------------------------------------------
# Parser

def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hychroma",
        description="Hypercube distance colorings from error-correcting codes")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser(
        "construct", help="build a verified coloring certificate")
    construct.add_argument("--method", required=True, choices=CONSTRUCT_METHODS)
    construct.add_argument("--r", type=int, help="quaternary family parameter")
    construct.add_argument("--n", type=int, help="cube dimension")
    construct.add_argument("--d", type=int, help="distance parameter")
    construct.add_argument("--code", help="named code or code file path")
    construct.add_argument("--base", help="named code or code file path")
    construct.add_argument("--left", help="certificate file, distance mode")
    construct.add_argument("--right", help="certificate file, exact mode")
    construct.add_argument("-o", "--output", help="certificate file to write")
    construct.add_argument("--force", action="store_true",
                           help="override exhaustive-size guards")
    construct.set_defaults(handler=cmd_construct)

    verify = sub.add_parser("verify", help="check a certificate file")
    verify.add_argument("path")
    verify.add_argument("--report-format", choices=("text", "csv"),
                        default="text")
    verify.add_argument("--strategy", choices=("auto", "neighbor", "pairwise"),
                        default="auto")
    verify.add_argument("-o", "--output", help="also store the report here")
    verify.add_argument("--force", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    bounds = sub.add_parser("bounds", help="evaluate bound tables")
    bounds.add_argument("--quantity", required=True,
                        choices=("chi", "chi_prime"))
    bounds.add_argument("--d", type=int, required=True)
    bounds.add_argument("--n", nargs="+", required=True,
                        help="dimensions: integers or ranges like 2..20")
    bounds.add_argument("--k-table", help="CSV of known code dimensions")
    bounds.add_argument("--format", choices=("text", "csv"), default="text")
    bounds.add_argument("--with-greedy", action="store_true",
                        help="also run the greedy construction per cell")
    bounds.add_argument("--with-oracle", action="store_true",
                        help="also run tiny-cube exact oracles per cell")
    bounds.add_argument("-o", "--output")
    bounds.set_defaults(handler=cmd_bounds)

    code = sub.add_parser("code", help="emit and inspect code files")
    code_sub = code.add_subparsers(dest="action", required=True)
    named = code_sub.add_parser("named", help="write a named code")
    named.add_argument("--name", required=True)
    named.add_argument("--n", type=int)
    named.add_argument("-o", "--output")
    greedy = code_sub.add_parser("greedy", help="greedy forbidden-distance code")
    greedy.add_argument("--n", type=int, required=True)
    greedy.add_argument("--d", type=int, required=True)
    greedy.add_argument("-o", "--output")
    greedy.add_argument("--force", action="store_true")
    directsum = code_sub.add_parser(
        "directsum", help="minimum-distance code stacked with a full space")
    directsum.add_argument("--base", required=True)
    directsum.add_argument("--n", type=int)
    directsum.add_argument("--d", type=int, required=True)
    directsum.add_argument("-o", "--output")
    directsum.add_argument("--force", action="store_true")
    info = code_sub.add_parser("info", help="describe a code file")
    info.add_argument("path")
    info.add_argument("--force", action="store_true")
    for p in (named,):
        p.set_defaults(force=False)
    code.set_defaults(handler=cmd_code)

    oracle = sub.add_parser("oracle", help="tiny-cube exact values")
    oracle_sub = oracle.add_subparsers(dest="action", required=True)
    chi = oracle_sub.add_parser("chi", help="exact minimum color count")
    chi.add_argument("--n", type=int, required=True)
    chi.add_argument("--d", type=int, required=True)
    chi.add_argument("--mode", choices=("atmost", "exact"), required=True)
    chi.add_argument("--force", action="store_true")
    a = oracle_sub.add_parser("a", help="largest minimum-distance code")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--d", type=int, required=True)
    a.add_argument("--force", action="store_true")
    q = oracle_sub.add_parser("q", help="largest forbidden-distance code")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--force", action="store_true")
    oracle.set_defaults(handler=cmd_oracle)

    return parser


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
        return args.handler(args)
    except (UsageError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
