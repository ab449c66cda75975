"""Command-line surface: check, classify, verify, enumerate, quotient.

Exit codes: 0 = success / all expectations met, 1 = axiom violations or
unexpectedly falsified theorems, 2 = input errors (unparseable files, bad
ideal specs, unknown ids).  Identical invocations produce byte-identical
stdout: output carries no timestamps and every collection is emitted in a
canonical order.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import (
    PhiReducer,
    classify_classical,
    classify_special,
    is_phi_class,
    is_pr_hyperideal,
    is_r_hyperideal,
    parse_phi,
)
from .core import CANONICAL_AXIOMS, KRASNER_AXIOMS, HyperringTable, validate_krasner_hyperring
from .constructions import quotient
from .dsl import ParseError, parse_hyperring, serialize_hyperring
from .explorer import CorpusEntry, OrderTooLarge, default_corpus, enumerate_hyperrings
from .ideals import enumerate_hyperideals, is_hyperideal
from .theorems import TheoremReport, UnknownTheoremId, run_theorem_suite


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_table(path: str, out) -> HyperringTable | None:
    try:
        text = _read(path)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=out)
        return None
    try:
        return parse_hyperring(text)
    except ParseError as exc:
        print(f"error: {path}: {exc}", file=out)
        return None


def _axiom_counts(report) -> tuple[int, int]:
    can = sum(1 for ax in CANONICAL_AXIOMS if not report.counts.get(ax))
    kra = sum(1 for ax in KRASNER_AXIOMS if not report.counts.get(ax))
    return can, kra


def cmd_check(args, out) -> int:
    table = _load_table(args.file, out)
    if table is None:
        return 2
    report = validate_krasner_hyperring(table, all_witnesses=args.all_witnesses)
    can, kra = _axiom_counts(report)
    if report.passed:
        print(
            f"PASS (canonical hypergroup: {can}/{len(CANONICAL_AXIOMS)} axioms; "
            f"Krasner: {kra}/{len(KRASNER_AXIOMS)})",
            file=out,
        )
        return 0
    print(
        f"FAIL (canonical hypergroup: {can}/{len(CANONICAL_AXIOMS)} axioms; "
        f"Krasner: {kra}/{len(KRASNER_AXIOMS)})",
        file=out,
    )
    for v in report.violations:
        witness = ",".join(table.names[i] for i in v.witness)
        total = report.counts[v.axiom]
        print(f"  {v.axiom} ({total} failures): witness ({witness}): {v.message}", file=out)
    return 1


def _parse_ideal_spec(table: HyperringTable, spec: str, out) -> int | None:
    body = spec.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    names = [tok.strip() for tok in body.split(",") if tok.strip()]
    mask = 0
    for name in names:
        try:
            mask |= 1 << table.element(name)
        except KeyError:
            print(f"error: unknown element {name!r} in ideal spec", file=out)
            return None
    return mask


def _yesno(res) -> str:
    if res.verdict:
        return "YES (vacuous)" if res.note == "vacuous" else "YES"
    return f"NO, witness {res.note}"


def _classify_block(table: HyperringTable, mask: int, phis: list[PhiReducer], out) -> None:
    print(f"ideal {table.set_str(mask)}:", file=out)
    if mask == table.carrier:
        print("  hyperideal: YES (improper; class predicates are not defined)", file=out)
        return
    print("  hyperideal: YES (proper)", file=out)
    classical = classify_classical(table, mask)
    special = classify_special(table, mask)
    print(f"  prime: {_yesno(classical.prime)}", file=out)
    print(f"  maximal: {_yesno(classical.maximal)}", file=out)
    print(f"  primary: {_yesno(classical.primary)}", file=out)
    print(f"  r-hyperideal: {_yesno(is_r_hyperideal(table, mask))}", file=out)
    print(f"  pr-hyperideal: {_yesno(is_pr_hyperideal(table, mask))}", file=out)
    print(f"  z0-hyperideal: {_yesno(special.z0)}", file=out)
    print(f"  pure: {_yesno(special.pure)}", file=out)
    print(f"  von Neumann regular: {_yesno(special.vn_regular)}", file=out)
    for phi in phis:
        for cls in ("r", "pr"):
            res = is_phi_class(table, mask, phi, cls)
            print(f"  {phi.name}-{cls}: {_yesno(res)}", file=out)


def cmd_classify(args, out) -> int:
    table = _load_table(args.file, out)
    if table is None:
        return 2
    try:
        phis = [parse_phi(p) for p in args.phi]
    except ValueError as exc:
        print(f"error: {exc}", file=out)
        return 2
    print(f"ring {table.label} (order {table.order})", file=out)
    if args.all:
        lattice = enumerate_hyperideals(table)
        print(
            f"ideal lattice ({len(lattice)}): "
            + ", ".join(table.set_str(m) for m in lattice),
            file=out,
        )
        for mask in lattice:
            _classify_block(table, mask, phis, out)
        return 0
    mask = _parse_ideal_spec(table, args.ideal, out)
    if mask is None:
        return 2
    res = is_hyperideal(table, mask)
    if not res.verdict:
        print(f"error: {table.set_str(mask)} is not a hyperideal: {res.note}", file=out)
        return 2
    _classify_block(table, mask, phis, out)
    return 0


def _corpus_from_dir(path: str, out) -> list[CorpusEntry] | None:
    root = Path(path)
    if not root.is_dir():
        print(f"error: corpus directory {path} is not readable", file=out)
        return None
    entries = []
    for file in sorted(root.glob("*.khr")):
        try:
            table = parse_hyperring(file.read_text(encoding="utf-8"))
        except (OSError, ParseError) as exc:
            print(f"error: {file}: {exc}", file=out)
            return None
        report = validate_krasner_hyperring(table)
        if not report.passed:
            first = report.violations[0]
            print(
                f"error: {file}: not a Krasner hyperring ({first.axiom}: {first.message})",
                file=out,
            )
            return None
        entries.append(CorpusEntry(file.stem, table, "file"))
    if not entries:
        print(f"error: corpus directory {path} holds no .khr files", file=out)
        return None
    return entries


def _render_text(reports: list[TheoremReport], witness_limit: int, out) -> None:
    width = max(len(r.theorem_id) for r in reports)
    print(f"{'theorem':<{width}}  {'instances':>9}  {'violations':>10}  {'skipped':>7}  status", file=out)
    for r in reports:
        print(
            f"{r.theorem_id:<{width}}  {r.instances_checked:>9}  "
            f"{len(r.violations):>10}  {r.skipped_hypothesis_unmet:>7}  {r.status}",
            file=out,
        )
    for r in reports:
        if not r.violations:
            continue
        shown = r.violations[:witness_limit]
        print(f"\n{r.theorem_id}: {r.statement}", file=out)
        for v in shown:
            wit = f" [{v.witness}]" if v.witness else ""
            print(f"  {v.ring_id}: {v.subject}{wit}: {v.message}", file=out)
        if len(r.violations) > len(shown):
            print(f"  ... {len(r.violations) - len(shown)} more", file=out)


def _render_jsonlines(reports: list[TheoremReport], out) -> None:
    for r in reports:
        print(
            json.dumps(
                {
                    "theorem_id": r.theorem_id,
                    "ring_id": "",
                    "verdict": r.status,
                    "witness": None,
                    "instances": r.instances_checked,
                    "skipped": r.skipped_hypothesis_unmet,
                },
                sort_keys=True,
            ),
            file=out,
        )
        for v in r.violations:
            print(
                json.dumps(
                    {
                        "theorem_id": r.theorem_id,
                        "ring_id": v.ring_id,
                        "verdict": "violation",
                        "witness": f"{v.subject}" + (f" [{v.witness}]" if v.witness else "") + f": {v.message}",
                    },
                    sort_keys=True,
                ),
                file=out,
            )


def cmd_verify(args, out) -> int:
    if args.corpus == "default":
        corpus = list(default_corpus())
    else:
        loaded = _corpus_from_dir(args.corpus, out)
        if loaded is None:
            return 2
        corpus = loaded
    if args.seed is not None:
        for ring in enumerate_hyperrings(
            args.random_order, "random", seed=args.seed, count=args.random_count
        ):
            corpus.append(CorpusEntry(ring.label, ring, "builder"))
    if args.max_order is not None:
        corpus = [e for e in corpus if e.ring.order <= args.max_order]
    if args.theorems == "all":
        ids = None
    else:
        ids = [t.strip() for t in args.theorems.split(",") if t.strip()]
    try:
        reports = run_theorem_suite(corpus, ids)
    except UnknownTheoremId as exc:
        print(f"error: unknown theorem id {exc.args[0]}", file=out)
        return 2
    if args.format == "jsonlines":
        _render_jsonlines(reports, out)
    else:
        print(f"corpus: {len(corpus)} entries", file=out)
        _render_text(reports, args.witness_limit, out)
        bad = [r for r in reports if not r.ok]
        total = sum(r.instances_checked for r in reports)
        verdict = "OK" if not bad else "FAIL (" + ", ".join(r.theorem_id for r in bad) + ")"
        print(f"\noverall: {verdict} ({len(reports)} theorems, {total} instances)", file=out)
    return 0 if all(r.ok for r in reports) else 1


def cmd_enumerate(args, out) -> int:
    try:
        if args.random is None:
            stream = enumerate_hyperrings(args.order, "exhaustive")
        else:
            seed, count = args.random
            stream = enumerate_hyperrings(args.order, "random", seed=seed, count=count)
        total = 0
        for ring in stream:
            print(serialize_hyperring(ring), file=out)
            total += 1
        print(f"# total: {total}", file=out)
        return 0
    except OrderTooLarge as exc:
        print(f"error: {exc}", file=out)
        return 2


def cmd_quotient(args, out) -> int:
    table = _load_table(args.file, out)
    if table is None:
        return 2
    mask = _parse_ideal_spec(table, args.ideal, out)
    if mask is None:
        return 2
    res = is_hyperideal(table, mask)
    if not res.verdict:
        print(f"error: {table.set_str(mask)} is not a hyperideal: {res.note}", file=out)
        return 2
    if mask == table.carrier:
        print("error: quotient by the improper hyperideal is not built", file=out)
        return 2
    pres = quotient(table, mask)
    text = serialize_hyperring(pres.ring)
    print(f"# quotient of {table.label} by {table.set_str(mask)}", file=out)
    for i, members in enumerate(pres.coset_members):
        print(f"# coset {pres.ring.names[i]} = {table.set_str(members)}", file=out)
    print(text, end="", file=out)
    if args.emit:
        Path(args.emit).write_text(text, encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="krasner",
        description="Finite Krasner hyperrings: validate tables, classify hyperideals, "
        "verify the r-hyperideal theorem registry over a corpus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a .khr table against all axioms")
    p.add_argument("file")
    p.add_argument("--all-witnesses", action="store_true", help="list every failure, not the first per axiom")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("classify", help="classify an ideal (or the whole lattice)")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ideal", help="ideal as {e1,e2,...} in element names")
    group.add_argument("--all", action="store_true", help="classify every hyperideal")
    p.add_argument("--phi", action="append", default=[], metavar="KIND[:n]",
                   help="also evaluate this reducer class (empty, 0, 1, omega, n:K)")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("verify", help="run the theorem registry over a corpus")
    p.add_argument("--corpus", default="default", help="'default' or a directory of .khr files")
    p.add_argument("--theorems", default="all", help="comma-separated theorem ids, or 'all'")
    p.add_argument("--format", choices=("text", "jsonlines"), default="text")
    p.add_argument("--seed", type=int, default=None, help="extend the corpus with seeded random tables")
    p.add_argument("--random-count", type=int, default=5, help="random tables to add with --seed")
    p.add_argument("--random-order", type=int, default=3, help="order of the random tables")
    p.add_argument("--max-order", type=int, default=None, help="drop corpus entries above this order")
    p.add_argument("--witness-limit", type=int, default=5, help="violations detailed per theorem")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("enumerate", help="stream hyperrings of one order as .khr text")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--random", nargs=2, type=int, metavar=("SEED", "COUNT"), default=None)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("quotient", help="build the quotient by a hyperideal")
    p.add_argument("file")
    p.add_argument("--ideal", required=True, help="ideal as {e1,e2,...}")
    p.add_argument("--emit", help="also write the quotient table to this .khr file")
    p.set_defaults(fn=cmd_quotient)

    return parser


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args, out if out is not None else sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
