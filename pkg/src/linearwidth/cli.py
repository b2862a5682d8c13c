"""Command-line interface: ``linearwidth {compute,verify,convert,gen,bench}``."""

from __future__ import annotations

import argparse
import hashlib
import json
import multiprocessing as mp
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__, generators
from .graph_core import Graph, GraphFormatError, format_graph, parse_graph
from .layouts import (
    DisconnectedGraphError,
    InvalidDecompositionError,
    InvalidLayoutError,
    Layout,
    PathDecomposition,
    check_layout,
    format_layout,
    format_pd,
    layout_to_pd,
    layout_width,
    parse_layout,
    parse_pd,
    pd_to_layout,
    pd_width,
    prefix_widths,
    verify_path_decomposition,
)
from .solvers import (
    BRUTE_MAX_EDGES,
    DP2M_MAX_EDGES,
    PW_MAX_VERTICES,
    SizeGuardError,
    SolveResult,
    decide_bruteforce,
    decide_closure,
    decide_dp_2m,
    lw_approx,
    lw_bruteforce,
    lw_closure_2n,
    lw_dp_2m,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_GUARD, EXIT_CONSISTENCY = 0, 1, 2, 3, 4

ENGINES = ("auto", "brute", "dp2m", "closure2n", "approx")
EXACT_ENGINES = ("brute", "dp2m", "closure2n")

# practical default for closure2n; the hard cap is the 64-vertex graph limit
CLOSURE_GUARD = 32
AUTO_BRUTE_EDGES = 8


class CertificateFormatError(ValueError):
    pass


def _guards(override: bool) -> dict[str, int | None]:
    if override:
        return {"brute": None, "dp2m": None, "closure2n": None, "approx": None}
    return {"brute": BRUTE_MAX_EDGES, "dp2m": DP2M_MAX_EDGES,
            "closure2n": CLOSURE_GUARD, "approx": PW_MAX_VERTICES}


def feasible_engines(g: Graph, override: bool = False) -> list[str]:
    limits = _guards(override)
    size = {"brute": g.m, "dp2m": g.m, "closure2n": g.n, "approx": g.n}
    return [e for e in ENGINES[1:] if limits[e] is None or size[e] <= limits[e]]


def pick_engine(g: Graph, override: bool = False) -> str:
    if g.m <= AUTO_BRUTE_EDGES:
        return "brute"
    for engine in ("closure2n", "dp2m"):
        if engine in feasible_engines(g, override):
            return engine
    raise SizeGuardError("auto", "n", g.n, CLOSURE_GUARD)


def solve(g: Graph, engine: str, override: bool = False) -> SolveResult:
    limit = _guards(override)[engine]
    if engine == "brute":
        return lw_bruteforce(g, limit)
    if engine == "dp2m":
        return lw_dp_2m(g, limit)
    if engine == "closure2n":
        return lw_closure_2n(g, limit)
    if engine == "approx":
        return lw_approx(g, limit)
    raise ValueError(f"unknown engine {engine!r}")


def decide(g: Graph, engine: str, k: int, override: bool = False) -> Layout | None:
    limit = _guards(override)[engine]
    if engine == "brute":
        return decide_bruteforce(g, k, limit)
    if engine == "dp2m":
        return decide_dp_2m(g, k, limit)
    if engine == "closure2n":
        return decide_closure(g, k, limit)
    raise ValueError(f"engine {engine!r} cannot decide a bound exactly")


# --- documents -------------------------------------------------------------


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def render(doc: dict, fmt: str) -> str:
    """Text form: ``# key: value`` metadata, then labelled certificate sections."""
    if fmt == "structured":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    lines = []
    for key, value in doc.items():
        if key in ("layout", "decomposition"):
            continue
        if isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"# {key}: {value}")
    if "layout" in doc:
        lines.append("layout")
        lines.append(doc["layout"])
    if "decomposition" in doc:
        lines.append("decomposition")
        lines.extend(doc["decomposition"])
    return "\n".join(lines) + "\n"


def parse_certificate(g: Graph, text: str) -> Layout | PathDecomposition:
    """Read the certificate section of a result or conversion document."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(stripped)
        if "layout" in doc:
            return parse_layout(doc["layout"])
        if "decomposition" in doc:
            return parse_pd(g, doc["decomposition"])
        raise CertificateFormatError("structured document has no certificate")
    lines = text.splitlines()
    for i, line in enumerate(lines):
        head = line.strip()
        if head == "layout":
            return parse_layout(lines[i + 1] if i + 1 < len(lines) else "")
        if head == "decomposition":
            bags = []
            for bag in lines[i + 1:]:
                if bag.startswith("#"):
                    continue
                if bag.strip() in ("layout", "decomposition"):
                    break
                bags.append(bag)
            while bags and not bags[-1].strip():
                bags.pop()
            return parse_pd(g, bags)
    raise CertificateFormatError("no 'layout' or 'decomposition' section found")


def _read_input(path: str) -> tuple[Graph, str]:
    text = Path(path).read_text()
    return parse_graph(text), text


# --- commands --------------------------------------------------------------


def cmd_compute(args) -> int:
    g, text = _read_input(args.input)
    engine = args.engine
    if engine == "auto":
        engine = pick_engine(g, args.guard_override)
    doc = {"tool": f"linearwidth {__version__}", "input": os.path.basename(args.input),
           "sha256": _digest(text), "engine": engine, "n": g.n, "m": g.m}
    if args.bound is not None:
        if engine == "approx":
            raise SystemExit("error: the approx engine cannot decide a bound")
        start = time.perf_counter()
        layout = decide(g, engine, args.bound, args.guard_override)
        doc["bound"] = args.bound
        doc["decision"] = layout is not None
        doc["wall_time"] = round(time.perf_counter() - start, 6)
        if layout is None:
            doc["result"] = f"no layout of width <= {args.bound}"
        else:
            doc["width"] = layout_width(g, layout)
            doc["layout"] = format_layout(layout)
    else:
        res = solve(g, engine, args.guard_override)
        doc["width"] = res.width
        doc.update(res.extra)
        st = res.stats
        doc.update(states_expanded=st.states_expanded, memo_entries=st.memo_entries,
                   memo_hits=st.memo_hits, wall_time=round(st.wall_time, 6))
        doc["layout"] = format_layout(res.certificate)
    sys.stdout.write(render(doc, args.format))
    return EXIT_OK


def verify_certificate(g: Graph, cert: Layout | PathDecomposition, claimed: int) -> tuple[bool, str]:
    if isinstance(cert, Layout):
        try:
            check_layout(g, cert)
        except InvalidLayoutError as exc:
            return False, f"permutation: {exc}"
        widths = prefix_widths(g, cert)
        for i, value in enumerate(widths, 1):
            if value > claimed:
                return False, f"prefix {i}: d={value} > {claimed}"
        width = max(widths, default=0)
        if width > claimed:
            return False, f"width {width} > {claimed}"
        return True, f"layout width {width} <= {claimed}"
    check = verify_path_decomposition(g, cert)
    if not check.ok:
        return False, f"{check.condition}: {check.detail}"
    width = pd_width(cert)
    if width > claimed:
        return False, f"bag size {width + 1} gives width {width} > {claimed}"
    return True, f"decomposition width {width} <= {claimed}"


def cmd_verify(args) -> int:
    g, _ = _read_input(args.input)
    cert = parse_certificate(g, Path(args.certificate).read_text())
    ok, message = verify_certificate(g, cert, args.width)
    print(("PASS: " if ok else "FAIL: ") + message)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_convert(args) -> int:
    g, _ = _read_input(args.input)
    cert = parse_certificate(g, Path(args.certificate).read_text())
    doc = {"tool": f"linearwidth {__version__}", "direction": args.direction}
    if args.direction == "layout-to-pd":
        if not isinstance(cert, Layout):
            raise CertificateFormatError("layout-to-pd needs a layout certificate")
        pd = layout_to_pd(g, cert, simplify=args.simplify)
        doc.update(width_before=layout_width(g, cert), width_after=pd_width(pd))
        doc["decomposition"] = format_pd(g, pd)
    else:
        if not isinstance(cert, PathDecomposition):
            raise CertificateFormatError("pd-to-layout needs a decomposition certificate")
        layout = pd_to_layout(g, cert)
        doc.update(width_before=pd_width(cert), width_after=layout_width(g, layout))
        doc["layout"] = format_layout(layout)
    sys.stdout.write(render(doc, args.format))
    return EXIT_OK


def make_graph(args) -> Graph:
    family = args.family
    need = {"gnp": ("n", "p"), "gnm": ("n", "m"), "path": ("n",), "cycle": ("n",),
            "clique": ("n",), "star": ("n",), "grid": ("rows", "cols")}[family]
    missing = [f"--{p}" for p in need if getattr(args, p) is None]
    if missing:
        raise ValueError(f"{family} needs {', '.join(missing)}")
    if family == "gnp":
        return generators.gnp(args.n, args.p, args.seed)
    if family == "gnm":
        return generators.gnm(args.n, args.m, args.seed)
    if family == "grid":
        return generators.grid(args.rows, args.cols)
    return getattr(generators, family)(args.n)


def cmd_gen(args) -> int:
    g = make_graph(args)
    params = " ".join(f"{k}={getattr(args, k)}" for k in ("n", "m", "p", "rows", "cols")
                      if getattr(args, k) is not None)
    comment = f"{args.family} {params} seed={args.seed}".replace("  ", " ")
    sys.stdout.write(format_graph(g, [comment]))
    return EXIT_OK


def _bench_worker(conn, text: str, engine: str, override: bool) -> None:
    try:
        res = solve(parse_graph(text), engine, override)
        conn.send(("ok", res.width, res.stats.wall_time, res.stats.states_expanded))
    except SizeGuardError as exc:
        conn.send(("guard", str(exc)))
    except Exception as exc:  # reported as a cell, never crashes the table
        conn.send(("error", repr(exc)))
    finally:
        conn.close()


def run_with_budget(text: str, engine: str, budget: float, override: bool = False) -> dict:
    """Solve in a child process, killing it once ``budget`` seconds have passed."""
    ctx = mp.get_context("fork")
    parent, child = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_bench_worker, args=(child, text, engine, override), daemon=True)
    start = time.perf_counter()
    proc.start()
    child.close()
    if parent.poll(budget):
        msg = parent.recv()
        proc.join()
    else:
        proc.kill()
        proc.join()
        return {"status": "TIMEOUT", "elapsed": round(time.perf_counter() - start, 3)}
    if msg[0] == "ok":
        return {"status": "ok", "width": msg[1], "time": round(msg[2], 6), "states": msg[3]}
    return {"status": msg[0].upper(), "detail": msg[1]}


class ConsistencyError(RuntimeError):
    pass


def bench(corpus: Path, engines: list[str], budget: float, override: bool = False,
          jobs: int = 1) -> list[dict]:
    files = sorted(p for p in corpus.iterdir() if p.is_file() and not p.name.startswith("."))
    rows = []
    for path in files:
        text = path.read_text()
        g = parse_graph(text)
        rows.append({"instance": path.name, "n": g.n, "m": g.m, "text": text, "cells": {}})
    tasks = [(row, engine) for row in rows for engine in engines]

    def run(task):
        row, engine = task
        row["cells"][engine] = run_with_budget(row["text"], engine, budget, override)

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        list(pool.map(run, tasks))
    for row in rows:
        del row["text"]
        cells = row["cells"]
        exact = {cells[e]["width"] for e in engines
                 if e in EXACT_ENGINES and cells[e]["status"] == "ok"}
        if len(exact) > 1:
            raise ConsistencyError(f"{row['instance']}: exact engines disagree: {sorted(exact)}")
        if exact and "approx" in cells and cells["approx"]["status"] == "ok":
            lw = exact.pop()
            if not lw <= cells["approx"]["width"] <= lw + 1:
                raise ConsistencyError(f"{row['instance']}: approx width outside [{lw}, {lw + 1}]")
    return rows


def format_bench(rows: list[dict], engines: list[str]) -> str:
    header = ["instance", "n", "m"] + engines
    table = [header]
    for row in rows:
        line = [row["instance"], str(row["n"]), str(row["m"])]
        for e in engines:
            cell = row["cells"][e]
            if cell["status"] == "ok":
                line.append(f"{cell['width']}/{cell['time']:.3f}s/{cell['states']}")
            else:
                line.append(cell["status"])
        table.append(line)
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in table)


def cmd_bench(args) -> int:
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    unknown = [e for e in engines if e not in ENGINES[1:]]
    if unknown:
        raise ValueError(f"unknown engines: {unknown}")
    try:
        rows = bench(Path(args.corpus), engines, args.budget_seconds, args.guard_override, args.jobs)
    except ConsistencyError as exc:
        print(f"consistency error: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    if args.format == "structured":
        sys.stdout.write(json.dumps(rows, indent=2) + "\n")
    else:
        sys.stdout.write(format_bench(rows, engines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linearwidth", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--guard-override", action="store_true",
                       help="lift the per-engine size guards (hard caps still apply)")

    p = sub.add_parser("compute", help="compute the linearwidth of a graph")
    p.add_argument("input")
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.add_argument("--bound", type=int, help="only decide whether a layout of this width exists")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a certificate against a claimed width")
    p.add_argument("input")
    p.add_argument("certificate")
    p.add_argument("width", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert between layouts and path decompositions")
    p.add_argument("input")
    p.add_argument("certificate")
    p.add_argument("--direction", choices=("layout-to-pd", "pd-to-layout"), required=True)
    p.add_argument("--simplify", action="store_true", help="drop bags contained in a neighbour")
    common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("gen", help="generate a graph in edge-list format")
    p.add_argument("family", choices=("gnp", "gnm", "path", "cycle", "clique", "star", "grid"))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run engines over a directory of graphs")
    p.add_argument("corpus")
    p.add_argument("--engines", default="closure2n,dp2m")
    p.add_argument("--budget-seconds", type=float, default=60.0)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, CertificateFormatError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeGuardError as exc:
        g = None
        try:
            g, _ = _read_input(args.input)
        except Exception:
            pass
        feasible = feasible_engines(g, args.guard_override) if g is not None else []
        print(f"size guard exceeded: {exc}; feasible engines: "
              f"{', '.join(feasible) or 'none (try --guard-override)'}", file=sys.stderr)
        return EXIT_GUARD
    except (InvalidLayoutError, InvalidDecompositionError, DisconnectedGraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
