"""mtcheck command line.

Exit codes: 0 success / overall pass, 1 some check failed or was undecided,
2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .checks import fusion_tensor, galois_suite, genus_dimension, run_all, seifert_invariant
from .cycmat import RelationError
from .cyclotomic import embed_complex
from .modular_data import CATALOG_NAMES, CheckConfig, ModularDataError, catalog, load
from .sl2z import parse_element

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mtcheck", description="Exact verification of candidate modular data (S, T).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp: argparse.ArgumentParser, source: bool = True) -> None:
        if source:
            sp.add_argument("source", help="JSON file, or @name for a catalog entry")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")

    sp = sub.add_parser("verify", help="run the full check battery")
    common(sp)
    sp.add_argument("--genus-max", type=int, default=5)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tolerance", type=float, default=1e-9)
    sp.add_argument("--checks", help="comma-separated subset (dependencies are added)")
    sp.add_argument("--no-timing", action="store_true", help="omit elapsed times")

    common(sub.add_parser("fusion", help="nonzero fusion coefficients N_pqr"))
    common(sub.add_parser("galois", help="Galois permutations and signs per unit l"))

    sp = sub.add_parser("dims", help="dimensions of the genus-g spaces")
    common(sp)
    sp.add_argument("--genus-max", type=int, default=5)

    sp = sub.add_parser("seifert", help="Seifert manifold invariant")
    common(sp)
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--word", action="append", required=True,
                    help='SL(2,Z) element: "S T^3 S" or "[[a,b],[c,d]]"; repeat for each')

    common(sub.add_parser("catalog", help="list built-in modular data"), source=False)
    return p


def _fraction(q: Optional[Fraction]) -> Any:
    if q is None:
        return None
    return q.numerator if q.denominator == 1 else str(q)


def _table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [list(map(str, headers))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _verify(args) -> tuple[str, int]:
    checks = tuple(c for c in args.checks.split(",") if c) if args.checks else None
    cfg = CheckConfig(args.genus_max, args.samples, args.seed, args.tolerance, checks)
    report = run_all(load(args.source), cfg)
    code = EXIT_OK if report.overall == "pass" else EXIT_FAIL
    if args.pretty:
        rows = [(v.check_name, v.status.value, "" if v.passed else json.dumps(v.witness)) for v in report.checks]
        head = f"{report.name}: overall {report.overall}, conductor {report.conductor}"
        if report.profile:
            head += ", profile " + json.dumps(report.profile)
        return head + "\n" + _table(("check", "status", "witness"), rows), code
    return report.to_json(timing=not args.no_timing), code


def _fusion(args) -> tuple[str, int]:
    md = load(args.source)
    tensor, verdict = fusion_tensor(md)
    entries = []
    if tensor is not None:
        r = md.rank
        entries = [
            (p, q, s, tensor[p][q][s])
            for p in range(r) for q in range(r) for s in range(r)
            if tensor[p][q][s] != 0
        ]
    code = EXIT_OK if verdict.passed else EXIT_FAIL
    if args.pretty:
        return _table(("p", "q", "r", "N_pqr"), [(p, q, s, "?" if v is None else v) for p, q, s, v in entries]), code
    doc = {
        "name": md.name,
        "status": verdict.status.value,
        "witness": verdict.witness,
        "nonzero": [{"p": p, "q": q, "r": s, "value": _fraction(v) if v is not None else None} for p, q, s, v in entries],
    }
    return json.dumps(doc, indent=2), code


def _galois(args) -> tuple[str, int]:
    md = load(args.source)
    md.require_relations()
    res = galois_suite(md)
    rows = []
    for l, ent in sorted(res.entries.items()):
        perm, signs = ent.signed_permutation or (None, None)
        rows.append({"l": l, "m": ent.inverse, "perm": list(perm) if perm else None,
                     "signs": list(signs) if signs else None, "scalar": ent.is_scalar})
    code = EXIT_OK if all(v.passed for v in res.verdicts) else EXIT_FAIL
    if args.pretty:
        return _table(("l", "pi_l", "eps_l"), [(r["l"], r["perm"], r["signs"]) for r in rows]), code
    doc = {"name": md.name, "conductor": res.conductor, "units": rows,
           "checks": [v.to_dict(timing=False) for v in res.verdicts]}
    return json.dumps(doc, indent=2), code


def _dims(args) -> tuple[str, int]:
    md = load(args.source)
    rows = []
    code = EXIT_OK
    for g in range(args.genus_max + 1):
        value, verdict = genus_dimension(md, g)
        if not verdict.passed:
            code = EXIT_FAIL
        rows.append((g, verdict.witness.get("dim") if verdict.passed else
                     (verdict.witness.get("value") if verdict.witness else None)))
    if args.pretty:
        return _table(("g", "dim V_g"), rows), code
    return json.dumps({"name": md.name, "dims": [{"g": g, "dim": d} for g, d in rows]}, indent=2), code


def _seifert(args) -> tuple[str, int]:
    md = load(args.source)
    words = [parse_element(w) for w in args.word]
    value = seifert_invariant(md, args.genus, words)
    emb = embed_complex(value)
    if args.pretty:
        return f"Z = {value}  ~ {emb.value:.12g}", EXIT_OK
    doc = {"name": md.name, "genus": args.genus, "words": args.word,
           "value": {"root_order": value.root_order, "terms": value.to_triples()},
           "float": [emb.real, emb.imag]}
    return json.dumps(doc, indent=2), EXIT_OK


def _catalog(args) -> tuple[str, int]:
    rows = [(n, catalog(n).rank, catalog(n).root_order, catalog(n).conductor) for n in CATALOG_NAMES]
    if args.pretty:
        return _table(("name", "rank", "root_order", "conductor"), rows), EXIT_OK
    return json.dumps([{"name": n, "rank": r, "root_order": m, "conductor": c} for n, r, m, c in rows], indent=2), EXIT_OK


_COMMANDS = {
    "verify": _verify,
    "fusion": _fusion,
    "galois": _galois,
    "dims": _dims,
    "seifert": _seifert,
    "catalog": _catalog,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        text, code = _COMMANDS[args.command](args)
    except (ModularDataError, ValueError, RelationError, ZeroDivisionError) as exc:
        print(f"mtcheck: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, getattr(args, "out", None))
    return code


if __name__ == "__main__":
    sys.exit(main())
