"""Command-line interface: ``metdim gen|dim|verify|repro|tables``.

Exit codes: 0 pass, 1 check failed, 2 usage error, 3 other library error,
65 malformed graph file, 66 missing input file.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence, TextIO

from metdim import families
from metdim.errors import MalformedGraphFile, MetdimError, UnknownLabel
from metdim.graph import Graph, VertexItem, all_pairs_distances
from metdim.io import format_edge_list, read_edge_list
from metdim.repro import (
    ReproReport,
    append_jsonl,
    check_lemma1,
    cross_check_literature,
    expected_coords_flower,
    expected_coords_wheel,
    flower_landmarks,
    sorted_reports,
    table_diff,
    verify_flower_theorem,
    verify_wheel_theorem,
)
from metdim.resolver import Variant, is_resolving
from metdim.solver import (
    Basis,
    DEFAULT_SIZE_CAP,
    check_size,
    default_threads,
    dimension_lower_bound,
    minimum_resolving_set,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ERROR = 0, 1, 2, 3
EXIT_DATAERR, EXIT_NOINPUT = 65, 66

FAMILIES = ("flower", "wheel", "path", "cycle", "kpq")
DEFAULT_RESULTS = "repro-results.jsonl"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def _int_list(tokens: Sequence[str]) -> list[int]:
    """Expand ``["3..6", "9"]`` into ``[3, 4, 5, 6, 9]``."""
    out: list[int] = []
    for tok in tokens:
        for part in tok.split(","):
            if not part:
                continue
            if ".." in part:
                lo, hi = part.split("..", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    return out


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="edge-list file")
    src.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int, help="family order (p for kpq)")
    p.add_argument("--q", type=int, help="second side of kpq (default: n)")
    p.add_argument("--dimacs", action="store_true", help="input is 1-indexed 'p edge' / 'e u v'")
    p.add_argument("--allow-any-order", action="store_true",
                   help="permit flower snark orders outside odd n >= 5")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="metdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit a family graph as an edge list")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--allow-any-order", action="store_true")
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("dim", help="compute metric / edge / mixed dimension")
    _add_source(p)
    p.add_argument("--variant", choices=["vertex", "edge", "mixed", "all"], default="mixed")
    p.add_argument("--mode", choices=["first", "all"], default="first")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP, help="vertex cap, 0 disables")
    p.add_argument("--naive", action="store_true", help="plain enumeration without pruning")
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms in JSON output")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="check whether a landmark set resolves a graph")
    _add_source(p)
    p.add_argument("--landmarks", required=True, help="comma-separated labels or indices")
    p.add_argument("--variant", choices=["vertex", "edge", "mixed"], default="mixed")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("repro", help="run reproduction checks")
    p.add_argument("suite", choices=["flower", "wheel", "tables", "lemma1", "literature"])
    p.add_argument("--n", nargs="+", default=None, help="orders, e.g. 5 7 9 or 3..10")
    p.add_argument("--k", nargs="+", default=None, help="table parameters for flower tables")
    p.add_argument("--family", choices=["flower", "wheel"], default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", metavar="FILE", default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tables", help="print a closed-form coordinate table next to computed values")
    p.add_argument("--family", choices=["flower", "wheel"], required=True)
    p.add_argument("--k", type=int, help="flower parameter, n = 2k + 1")
    p.add_argument("--n", type=int, help="wheel order")
    p.add_argument("--json", action="store_true")
    return parser


def parse_command(argv: Sequence[str]) -> argparse.Namespace:
    """Parse and validate; raises :class:`UsageError` on bad input."""
    cmd = build_parser().parse_args(list(argv))
    family = getattr(cmd, "family", None)
    if cmd.command in ("gen", "dim", "verify") and family is not None:
        if cmd.n is None:
            raise UsageError(f"--family {family} requires --n")
        if family == "flower" and not cmd.allow_any_order and (cmd.n < 5 or cmd.n % 2 == 0):
            raise UsageError(
                f"flower snark order must be odd and >= 5 (got {cmd.n}); use --allow-any-order"
            )
    if cmd.command == "tables":
        if cmd.family == "flower" and cmd.k is None:
            raise UsageError("tables --family flower requires --k")
        if cmd.family == "wheel" and cmd.n is None:
            raise UsageError("tables --family wheel requires --n")
    if cmd.command == "repro":
        try:
            cmd.n = _int_list(cmd.n) if cmd.n else None
            cmd.k = _int_list(cmd.k) if cmd.k else None
        except ValueError as exc:
            raise UsageError(f"bad number list: {exc}") from None
    if getattr(cmd, "threads", None) is not None and cmd.threads < 1:
        raise UsageError("--threads must be >= 1")
    return cmd


def _family_graph(family: str, n: int, q: int | None = None,
                  allow_any_order: bool = False) -> Graph:
    if family == "flower":
        return families.flower_snark(n, allow_any_order=allow_any_order)[0]
    if family == "wheel":
        return families.wheel(n)[0]
    if family == "path":
        return families.path(n)
    if family == "cycle":
        return families.cycle(n)
    return families.complete_bipartite(n, q if q is not None else n)


def load_graph(cmd: argparse.Namespace) -> Graph:
    if cmd.input is not None:
        return read_edge_list(cmd.input, dimacs=cmd.dimacs)
    return _family_graph(cmd.family, cmd.n, cmd.q, cmd.allow_any_order)


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _basis_json(g: Graph, basis, elapsed: float | None) -> dict:
    if not isinstance(basis, Basis):
        return {"dimension": None, "basis": None, "landmarks": None, "certificate": None,
                "elapsed_ms": None if elapsed is None else round(elapsed * 1000, 3)}
    return {
        "dimension": basis.cardinality,
        "basis": basis.labels(g),
        "landmarks": list(basis.landmarks),
        "certificate": basis.certificate.to_dict(),
        "elapsed_ms": None if elapsed is None else round(elapsed * 1000, 3),
    }


def _run_dim(cmd, out: TextIO) -> int:
    g = load_graph(cmd)
    check_size(g, cmd.cap)
    dm = all_pairs_distances(g)
    threads = cmd.threads if cmd.threads is not None else default_threads()
    variants = list(Variant) if cmd.variant == "all" else [Variant(cmd.variant)]
    results = {}
    for variant in variants:
        t0 = time.perf_counter()
        found = minimum_resolving_set(g, dm, variant, mode=cmd.mode, threads=threads,
                                      naive=cmd.naive)
        elapsed = time.perf_counter() - t0
        shown = elapsed if cmd.timing else None
        if cmd.mode == "all" and isinstance(found, list):
            entry = _basis_json(g, found[0], shown)
            entry["bases"] = [b.labels(g) for b in found]
            entry["count"] = len(found)
        else:
            entry = _basis_json(g, found, shown)
        entry["search_floor"] = dimension_lower_bound(g, variant)
        results[variant.value] = entry

    floor = dimension_lower_bound(g, Variant.EDGE)
    checks: dict = {"edge_log_floor": floor}
    if "edge" in results and results["edge"]["dimension"] is not None:
        checks["edge_ge_log_floor"] = results["edge"]["dimension"] >= floor
    if len(results) == 3 and None not in [r["dimension"] for r in results.values()]:
        checks["mixed_ge_max"] = results["mixed"]["dimension"] >= max(
            results["vertex"]["dimension"], results["edge"]["dimension"])
    if "mixed" in results and results["mixed"]["dimension"] is not None:
        checks["mixed_ge_log_floor"] = results["mixed"]["dimension"] >= floor

    doc = {"graph": g.name, "n": g.n, "m": g.m, "mode": cmd.mode, "variant": cmd.variant,
           "bound_checks": checks}
    if len(results) == 1:
        doc.update(next(iter(results.values())))
    else:
        doc["dimension"] = {k: v["dimension"] for k, v in results.items()}
        doc["variants"] = results
        doc["elapsed_ms"] = (
            {k: v["elapsed_ms"] for k, v in results.items()} if cmd.timing else None
        )
    if cmd.json:
        _dump(doc, out)
    else:
        out.write(f"{g.name or 'graph'}: n={g.n} m={g.m}\n")
        for key, entry in results.items():
            cert = entry["certificate"]
            proof = ""
            if cert:
                proof = (f"  (no {cert['refuted_cardinality']}-set: "
                         f"{cert['subsets_checked']} subsets, {cert['source']})")
            out.write(f"  {key:6} dimension {entry['dimension']}  basis {entry['basis']}{proof}\n")
            if "count" in entry:
                out.write(f"         {entry['count']} minimum bases\n")
        for key, val in checks.items():
            out.write(f"  {key}: {val}\n")
    ok = all(v for k, v in checks.items() if isinstance(v, bool))
    return EXIT_OK if ok else EXIT_FAIL


def _parse_landmarks(g: Graph, text: str) -> list[int]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names:
        raise UsageError("--landmarks is empty")
    try:
        return [g.index_of(t) for t in names]
    except UnknownLabel as exc:
        raise UsageError(str(exc)) from None


def _run_verify(cmd, out: TextIO) -> int:
    g = load_graph(cmd)
    landmarks = _parse_landmarks(g, cmd.landmarks)
    verdict = is_resolving(g, all_pairs_distances(g), landmarks, cmd.variant)
    doc = verdict.to_dict(g.labels)
    doc.update({"graph": g.name, "variant": cmd.variant,
                "landmarks": [g.label(v) for v in landmarks]})
    if cmd.json:
        _dump(doc, out)
    else:
        lm = ",".join(doc["landmarks"])
        if verdict.resolving:
            out.write(f"{g.name}: {{{lm}}} is a {cmd.variant} resolving set\n")
        else:
            a, b = doc["witness"]
            va, vb = doc["vectors"]
            out.write(f"{g.name}: {{{lm}}} is NOT a {cmd.variant} resolving set\n")
            out.write(f"  witness: {a} {tuple(va)} == {b} {tuple(vb)}\n")
    return EXIT_OK if verdict.resolving else EXIT_FAIL


def _run_repro(cmd, out: TextIO) -> int:
    suite = cmd.suite
    threads = cmd.threads if cmd.threads is not None else default_threads()
    reports: list[ReproReport] = []
    if suite == "flower":
        for n in cmd.n or [5, 7, 9, 11, 13]:
            reports.append(verify_flower_theorem(n, threads=threads))
    elif suite == "wheel":
        for n in cmd.n or list(range(3, 11)):
            reports.append(verify_wheel_theorem(n, threads=threads))
    elif suite == "lemma1":
        for n in cmd.n or [5, 7]:
            reports.append(check_lemma1(n, threads=threads))
    elif suite == "tables":
        fams = [cmd.family] if cmd.family else ["flower", "wheel"]
        for fam in fams:
            if fam == "flower":
                params = cmd.k or [5, 6]
            else:
                params = cmd.n or list(range(5, 11))
            reports.extend(table_diff(fam, p) for p in params)
    else:
        kwargs = {"wheel_range": cmd.n} if cmd.n else {}
        reports.append(cross_check_literature(threads=threads, **kwargs))

    reports = sorted_reports(reports)
    append_jsonl(reports, cmd.out or DEFAULT_RESULTS)
    if cmd.json:
        _dump([r.to_dict(include_timestamp=False) for r in reports], out)
    else:
        for r in reports:
            out.write(r.summary() + "\n")
            if r.status == "errata":
                for key in ("diffs", "discrepancies"):
                    for d in r.details.get(key, []):
                        out.write(f"    {json.dumps(d, sort_keys=True)}\n")
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK


def _run_tables(cmd, out: TextIO) -> int:
    if cmd.family == "flower":
        rep = table_diff("flower", cmd.k)
        g, _ = families.flower_snark(2 * cmd.k + 1)
        modes = [("landmarks " + ",".join(flower_landmarks(cmd.k)),
                  lambda it: expected_coords_flower(cmd.k, it))]
    else:
        rep = table_diff("wheel", cmd.n)
        g, _ = families.wheel(cmd.n)
        modes = [(f"mode {m}", lambda it, _m=m: expected_coords_wheel(cmd.n, it, _m))
                 for m in ("full_V", "V_minus_hub")]
    if cmd.json:
        _dump(rep.to_dict(include_timestamp=False), out)
    else:
        out.write(f"{g.name}  status {rep.status}\n")
        for title, fn in modes:
            out.write(f"  {title}\n")
            for item in g.items("mixed"):
                ends = (item.v,) if isinstance(item, VertexItem) else item.endpoints
                names = [g.label(v) for v in ends]
                key = names[0] if len(names) == 1 else tuple(names)
                out.write(f"    {''.join(names):12} {fn(key)}\n")
        diffs = rep.details.get("diffs", [])
        for m in ("full_V", "V_minus_hub"):
            diffs = diffs + rep.details.get(m, {}).get("diffs", [])
        out.write(f"  mismatched items: {len(diffs)}\n")
    return EXIT_FAIL if rep.status == "fail" else EXIT_OK


def execute_command(cmd: argparse.Namespace, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    if cmd.command == "gen":
        g = _family_graph(cmd.family, cmd.n, cmd.q, cmd.allow_any_order)
        text = format_edge_list(g)
        if cmd.out:
            with open(cmd.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            out.write(text)
        return EXIT_OK
    runners = {"dim": _run_dim, "verify": _run_verify, "repro": _run_repro,
               "tables": _run_tables}
    return runners[cmd.command](cmd, out)


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         err: TextIO | None = None) -> int:
    err = err or sys.stderr
    try:
        cmd = parse_command(sys.argv[1:] if argv is None else argv)
        return execute_command(cmd, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except FileNotFoundError as exc:
        err.write(f"metdim: {exc}\n")
        return EXIT_NOINPUT
    except MalformedGraphFile as exc:
        err.write(f"metdim: malformed graph file: {exc}\n")
        return EXIT_DATAERR
    except MetdimError as exc:
        err.write(f"metdim: {type(exc).__name__}: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
