"""Command-line front end: ``schurlift <subcommand> ...``.

Exit status is 0 when every check passes, 1 when a verification fails and 2
for usage or input errors. Results go to stdout, diagnostics to stderr.
Output is deterministic; wall-clock timings are included only with
``--timing``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import bounds as B
from .chartable import CharacterTable, TableError, TableParseError, load_character_table, save_table, validate_table
from .cyclotomic import format_cyclotomic
from .dixon import character_table
from .fixtures import FixtureNotFoundError, fixture_primes, resolve_fixture
from .groups import GroupError, conjugacy_classes, matrix_group, permutation_group
from .named_groups import GROUPS, named_group
from .partitions import parse_partition
from .plethysm import (
    ClassFunction,
    DecompositionError,
    adjoint,
    adjoint_link_check,
    decompose,
    decompose_virtual,
    ext_power,
    self_twists,
    sym_power,
    verify_character_identity,
)
from .schur import lr_expand, schur_poly, verify_gl3_adjoint_identity, verify_gl3_identity, verify_gl4_identity
from .worked_examples import reproduce_worked_examples

MAX_JOBS = 8


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers


def _emit(doc, fmt: str, text: str | None = None) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text is not None else json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _jobs(requested: int | None, tasks: int) -> int:
    n = requested if requested else min(os.cpu_count() or 1, MAX_JOBS)
    return max(1, min(n, tasks))


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load_group_table(source: str) -> CharacterTable:
    """A named group (computed on the spot) or a ``.tbl`` file."""
    if source.lower() in GROUPS and not Path(source).exists():
        G = named_group(source)
        return character_table(G, G.name)
    try:
        path = resolve_fixture(source)
    except FixtureNotFoundError as exc:
        raise UsageError(str(exc)) from exc
    return load_character_table(path)


def _character(table: CharacterTable, k: int) -> ClassFunction:
    if not 1 <= k <= len(table):
        raise UsageError(f"character number {k} out of range 1..{len(table)}")
    return ClassFunction.irreducible(table, k)


# ---------------------------------------------------------------------------
# schur


def cmd_schur_expand(args) -> int:
    lam = _partition(args.lam)
    if args.n < 1:
        raise UsageError("--n must be positive")
    p = schur_poly(lam, args.n)
    doc = {"partition": str(lam), "n": args.n, "terms": len(p), "polynomial": p.to_string()}
    _emit(doc, args.format, p.to_string() + "\n")
    return 0


def cmd_schur_product(args) -> int:
    lam, mu = _partition(args.lam), _partition(args.mu)
    exp = lr_expand(lam, mu)
    if args.n is not None:
        exp = exp.restrict(args.n)
    doc = {"lambda": str(lam), "mu": str(mu), "n": args.n, "expansion": exp.to_json()}
    _emit(doc, args.format, str(exp) + "\n")
    return 0


# ---------------------------------------------------------------------------
# identity


def _identity_task(family: str, m):
    if family == "gl3":
        rep = verify_gl3_identity(m)
    elif family == "gl4":
        rep = verify_gl4_identity(m)
    else:
        rep = verify_gl3_adjoint_identity()
    d = rep.to_json()
    return d


def cmd_identity_verify(args) -> int:
    fam = args.family
    if fam == "gl3-adjoint":
        ms = [None]
    else:
        if args.m_from < 3 or args.m_to < args.m_from:
            raise UsageError("need 3 <= m-from <= m-to")
        ms = list(range(args.m_from, args.m_to + 1))
    t0 = time.perf_counter()
    jobs = _jobs(args.jobs, len(ms))
    if jobs == 1:
        reports = [_identity_task(fam, m) for m in ms]
    else:
        with ProcessPoolExecutor(jobs) as ex:
            reports = list(ex.map(_identity_task, [fam] * len(ms), ms))
    elapsed = time.perf_counter() - t0
    ok = all(r["passed"] for r in reports)
    doc = {"family": fam, "passed": ok, "results": reports}
    if args.timing:
        doc["seconds"] = round(elapsed, 3)
    lines = []
    for r in reports:
        tag = "PASS" if r["passed"] else "FAIL"
        checks = ", ".join(f"{k}={'ok' if v else 'FAILED'}" for k, v in r["checks"].items())
        where = f"m={r['m']}" if r["m"] is not None else "-"
        lines.append(f"{tag} {fam} {where}: {checks}")
    lines.append(f"{'all passed' if ok else 'FAILURES'} ({len(reports)} case(s))")
    _emit(doc, args.format, "\n".join(lines) + "\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# group


def _table_doc(table: CharacterTable) -> dict:
    cs = table.classes
    return {
        "group_name": table.name,
        "order": table.order,
        "classes": [{"label": lab, "element_order": o, "size": s} for lab, o, s in zip(cs.labels, cs.orders, cs.sizes)],
        "degrees": table.degrees,
        "irreducibles": [[format_cyclotomic(v) for v in chi] for chi in table.irreducibles],
        "provenance": table.provenance,
    }


def _table_text(table: CharacterTable) -> str:
    cs = table.classes
    rows = [["", *cs.labels], ["size", *map(str, cs.sizes)]]
    for k, chi in enumerate(table.irreducibles, 1):
        rows.append([f"chi_{k}", *(format_cyclotomic(v) if v else "." for v in chi)])
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    out = [f"{table.name}  |G| = {table.order}"]
    out += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(out) + "\n"


def _group_from_args(args):
    if args.perm:
        return permutation_group(args.perm, args.degree, cap=args.cap, name=args.name or "G")
    if args.matrix:
        if not args.field:
            raise UsageError("--matrix needs --field 'gf q' or 'cyc N'")
        mats = [[x.strip() for x in m.split(",")] for m in args.matrix]
        return matrix_group(mats, args.field, cap=args.cap, name=args.name or "G")
    if args.named:
        return named_group(args.named)
    raise UsageError("give --named, --perm or --matrix generators")


def cmd_group_table(args) -> int:
    t0 = time.perf_counter()
    if args.group:
        table = _load_group_table(args.group)
    else:
        G = _group_from_args(args)
        table = character_table(G, G.name)
    elapsed = time.perf_counter() - t0
    if args.save:
        save_table(table, args.save, fixture_primes(table))
    doc = _table_doc(table)
    if args.timing:
        doc["seconds"] = round(elapsed, 3)
    _emit(doc, args.format, _table_text(table))
    return 0


def cmd_group_classes(args) -> int:
    G = _group_from_args(args)
    cs = conjugacy_classes(G)
    doc = {
        "order": G.order,
        "classes": [{"label": lab, "element_order": o, "size": s} for lab, o, s in zip(cs.labels, cs.orders, cs.sizes)],
    }
    text = f"|G| = {G.order}\n" + "".join(f"{lab:>6} order {o:>3} size {s}\n" for lab, o, s in zip(cs.labels, cs.orders, cs.sizes))
    _emit(doc, args.format, text)
    return 0


def cmd_group_validate(args) -> int:
    try:
        path = resolve_fixture(args.table)
    except FixtureNotFoundError as exc:
        raise UsageError(str(exc)) from exc
    try:
        table = load_character_table(path, validate=False)
    except TableParseError:
        raise
    rep = validate_table(table)
    doc = {"table": str(path), "valid": rep.ok, "checks": rep.checks, "messages": rep.messages}
    text = "".join(f"{'ok    ' if v else 'FAILED'} {k}\n" for k, v in rep.checks.items()) + "".join(
        f"  {m}\n" for m in rep.messages
    )
    _emit(doc, args.format, text)
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# sympow


POWERS = {
    "sym": sym_power,
    "ext": ext_power,
}


def cmd_sympow_decompose(args) -> int:
    table = _load_group_table(args.group)
    chi = _character(table, args.char)
    t0 = time.perf_counter()
    if args.kind == "adjoint":
        cf = adjoint(chi)
        label = f"Ad(chi_{args.char})"
    else:
        if args.k is None or args.k < 0:
            raise UsageError("--k must be a nonnegative integer")
        cf = POWERS[args.kind](chi, args.k)
        label = f"{'Sym' if args.kind == 'sym' else 'Lambda'}^{args.k}(chi_{args.char})"
    try:
        dec = decompose(cf)
        virtual = None
    except DecompositionError:
        dec, virtual = None, decompose_virtual(cf)
    elapsed = time.perf_counter() - t0
    doc = {"group": table.name, "character": args.char, "kind": args.kind, "k": args.k, "label": label}
    if dec is not None:
        doc.update(dec.to_json())
        text = f"{label} = " + " + ".join(f"chi_{c}" for c in dec.constituents) + f"   (N = {dec.N}, degrees {dec.constituent_degrees})\n"
    else:
        doc["virtual_multiplicities"] = {str(k): m for k, m in sorted(virtual.items())}
        text = f"{label} is virtual: {virtual}\n"
    if args.timing:
        doc["seconds"] = round(elapsed, 3)
    _emit(doc, args.format, text)
    return 0


def cmd_sympow_identity(args) -> int:
    table = _load_group_table(args.group)
    chi = _character(table, args.char)
    if chi.degree != (3 if args.case == "gl3" else 4):
        raise UsageError(f"case {args.case} needs a character of degree {3 if args.case == 'gl3' else 4}")
    m_from = args.m_from if args.m_from is not None else (3 if args.case == "gl3" else 4)
    if m_from < 3 or args.m_to < m_from:
        raise UsageError("need 3 <= m-from <= m-to")
    results = []
    for m in range(m_from, args.m_to + 1):
        rep = verify_character_identity(chi, m, args.case)
        results.append({"m": m, "passed": rep.passed, "checks": rep.checks})
    ok = all(r["passed"] for r in results)
    doc = {"group": table.name, "character": args.char, "case": args.case, "passed": ok, "results": results}
    text = "".join(f"{'PASS' if r['passed'] else 'FAIL'} {args.case} chi_{args.char} m={r['m']}\n" for r in results)
    _emit(doc, args.format, text)
    return 0 if ok else 1


def cmd_sympow_selftwists(args) -> int:
    table = _load_group_table(args.group)
    chi = _character(table, args.char)
    tw = self_twists(chi)
    doc = {"group": table.name, "character": args.char, **tw.to_json()}
    text = f"S = {tw.S}\nT = {tw.T}\n"
    _emit(doc, args.format, text)
    return 0


def cmd_sympow_adjoint_link(args) -> int:
    table = _load_group_table(args.group)
    chi = _character(table, args.char)
    if chi.degree != 3:
        raise UsageError("the adjoint link applies to 3-dimensional characters")
    rep = adjoint_link_check(chi)
    doc = {"group": table.name, "character": args.char, **rep.to_json()}
    text = (
        f"<Sym^2, Sym^2> = {rep.sym2_norm}   <Ad, Ad> = {rep.adjoint_norm}\n"
        f"biconditional {'holds' if rep.holds else 'FAILS'}\n"
    )
    _emit(doc, args.format, text)
    return 0 if rep.holds else 1


# ---------------------------------------------------------------------------
# bounds


def cmd_bounds_row(args) -> int:
    try:
        row = B.bounds_row(args.case, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    fmt = args.format
    if fmt == "csv":
        sys.stdout.write(B.rows_to_csv([row]))
    elif fmt == "md":
        sys.stdout.write(B.rows_to_markdown([row]))
    else:
        _emit(row.to_dict(), "json")
    return 0


def cmd_bounds_scan(args) -> int:
    try:
        rep = B.threshold_scan(args.case, args.k_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "csv":
        sys.stdout.write(B.rows_to_csv(rep.rows))
    elif args.format == "md":
        sys.stdout.write(B.rows_to_markdown(rep.rows))
    else:
        sys.stdout.write(B.rows_to_json(rep.rows, rep.summary()))
    for c in rep.claims:
        status = "holds" if c.holds else f"VIOLATED at k={c.violations}"
        print(f"{c.description}: {status} ({c.checked} values of k)", file=sys.stderr)
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------
# section 4


def cmd_reproduce(args) -> int:
    try:
        rep = reproduce_worked_examples(args.fixtures)
    except FixtureNotFoundError as exc:
        raise UsageError(str(exc)) from exc
    _emit(rep.to_dict(), args.format, rep.to_text())
    return rep.exit_code


# ---------------------------------------------------------------------------
# parser


def _fmt(p, choices=("text", "json"), default="text"):
    p.add_argument("--format", choices=choices, default=default)


def _group_source(p):
    p.add_argument("--named", choices=sorted(GROUPS), help="built-in generator set")
    p.add_argument("--perm", action="append", help="permutation generator in cycle notation; repeatable")
    p.add_argument("--degree", type=int, help="permutation degree")
    p.add_argument("--matrix", action="append", help="row-major matrix entries separated by commas; repeatable")
    p.add_argument("--field", help="'gf q' or 'cyc N' for matrix generators")
    p.add_argument("--name", help="group name for output")
    p.add_argument("--cap", type=int, default=10000, help="maximum group order")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schurlift", description="Exact Schur-function and character computations.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("schur", help="Schur polynomials and Littlewood-Richardson products")
    ssub = sp.add_subparsers(dest="action", required=True)
    p = ssub.add_parser("expand", help="expand S_lambda in n variables")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION", help='e.g. "2,1"')
    p.add_argument("--n", type=int, required=True)
    _fmt(p)
    p.set_defaults(func=cmd_schur_expand)
    p = ssub.add_parser("product", help="S_lambda * S_mu as a sum of Schur functions")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    p.add_argument("--mu", required=True, metavar="PARTITION")
    p.add_argument("--n", type=int, help="drop terms with more than n rows")
    _fmt(p)
    p.set_defaults(func=cmd_schur_product)

    ip = sub.add_parser("identity", help="Schur polynomial identity families")
    isub = ip.add_subparsers(dest="action", required=True)
    p = isub.add_parser("verify")
    p.add_argument("--family", choices=["gl3", "gl3-adjoint", "gl4"], required=True)
    p.add_argument("--m-from", type=int, default=3)
    p.add_argument("--m-to", type=int, default=12)
    p.add_argument("--jobs", type=int, help="worker processes (default: logical cores, at most 8)")
    p.add_argument("--timing", action="store_true")
    _fmt(p)
    p.set_defaults(func=cmd_identity_verify)

    gp = sub.add_parser("group", help="conjugacy classes and character tables")
    gsub = gp.add_subparsers(dest="action", required=True)
    p = gsub.add_parser("table", help="compute (or load) a character table")
    p.add_argument("--group", help="named group or .tbl file")
    _group_source(p)
    p.add_argument("--save", help="write the table as a .tbl file")
    p.add_argument("--timing", action="store_true")
    _fmt(p)
    p.set_defaults(func=cmd_group_table)
    p = gsub.add_parser("classes", help="conjugacy classes of a generated group")
    _group_source(p)
    _fmt(p)
    p.set_defaults(func=cmd_group_classes)
    p = gsub.add_parser("validate", help="check a .tbl file")
    p.add_argument("table")
    _fmt(p)
    p.set_defaults(func=cmd_group_validate)

    yp = sub.add_parser("sympow", help="symmetric powers of characters")
    ysub = yp.add_subparsers(dest="action", required=True)
    p = ysub.add_parser("decompose")
    p.add_argument("--group", required=True)
    p.add_argument("--char", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--kind", choices=["sym", "ext", "adjoint"], default="sym")
    p.add_argument("--timing", action="store_true")
    _fmt(p)
    p.set_defaults(func=cmd_sympow_decompose)
    p = ysub.add_parser("identity")
    p.add_argument("--group", required=True)
    p.add_argument("--char", type=int, required=True)
    p.add_argument("--case", choices=["gl3", "gl4"], required=True)
    p.add_argument("--m-from", type=int)
    p.add_argument("--m-to", type=int, default=12)
    _fmt(p)
    p.set_defaults(func=cmd_sympow_identity)
    p = ysub.add_parser("selftwists")
    p.add_argument("--group", required=True)
    p.add_argument("--char", type=int, required=True)
    _fmt(p)
    p.set_defaults(func=cmd_sympow_selftwists)
    p = ysub.add_parser("adjoint-link")
    p.add_argument("--group", required=True)
    p.add_argument("--char", type=int, required=True)
    _fmt(p)
    p.set_defaults(func=cmd_sympow_adjoint_link)

    bp = sub.add_parser("bounds", help="bounds on the number of summands")
    bsub = bp.add_subparsers(dest="action", required=True)
    p = bsub.add_parser("row")
    p.add_argument("--case", choices=["gl3", "gl4"], required=True)
    p.add_argument("--k", type=int, required=True)
    _fmt(p, ("json", "csv", "md"), "json")
    p.set_defaults(func=cmd_bounds_row)
    p = bsub.add_parser("scan")
    p.add_argument("--case", choices=["gl3", "gl4"], required=True)
    p.add_argument("--k-max", type=int, required=True)
    _fmt(p, ("json", "csv", "md"), "csv")
    p.set_defaults(func=cmd_bounds_scan)

    p = sub.add_parser("reproduce-section4", help="re-check the worked finite-group examples")
    p.add_argument("--fixtures", help="fixture directory (default: bundled or $SCHURLIFT_FIXTURES)")
    _fmt(p)
    p.set_defaults(func=cmd_reproduce)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TableParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TableError as exc:
        print(f"verification failed ({exc.kind}): {exc}", file=sys.stderr)
        return 1
    except (GroupError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
