"""Command-line entry point: ``evengraphs <subcommand> ...``.

Exit codes: 0 success, 1 invalid input or failed validation, 2 usage error,
3 resource guard.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from . import sgr
from .braid import ActionLog, LogEntry, even_action_sq_tree, replay
from .errors import GraphError, ResourceGuard
from .frame import SectorFrame
from .tree import as_tree
from .validate import validate

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _write(text: str, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_graph_and_log(t, log: ActionLog, args) -> None:
    _write(t.to_cellgraph().serialize(), args.output)
    log_path = args.log or (args.output + ".log" if args.output else None)
    if log_path:
        Path(log_path).write_text(log.serialize())
    else:
        sys.stdout.write("# log\n" + "".join("# " + line + "\n" for line in log.serialize().splitlines()))


def cmd_validate(args) -> int:
    rep = validate(sgr.load(args.file), symmetry=not args.no_symmetry)
    sys.stdout.write(rep.text())
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_act(args) -> int:
    from .symmetry import require_symmetric

    t = as_tree(sgr.load(args.file)).canonical()
    require_symmetric(t)
    log = ActionLog()
    direction = -2 if args.inverse else +2
    for _ in range(args.repeat):
        t = even_action_sq_tree(t, args.j, direction).canonical()
        log.record(LogEntry("E", args.j % t.n, direction), t)
    _emit_graph_and_log(t, log, args)
    return EXIT_OK


def cmd_normalize(args) -> int:
    from .normalize import to_ivy

    t, log = to_ivy(as_tree(sgr.load(args.file)))
    _emit_graph_and_log(t, log, args)
    return EXIT_OK


def cmd_reduce(args) -> int:
    from .normalize import reduce

    t, log = reduce(as_tree(sgr.load(args.file)))
    _emit_graph_and_log(t, log, args)
    return EXIT_OK


def cmd_orbit(args) -> int:
    from .orbits import EnumSpec, orbit_bfs

    frame = SectorFrame(args.n, args.J)
    spec = EnumSpec(frame, args.max_vertices, limit=args.limit)
    report = orbit_bfs(spec, check_reduce=not args.no_check)
    rep_dir = Path(args.rep_dir) if args.rep_dir else None
    names = report.rep_names()
    if rep_dir is not None:
        rep_dir.mkdir(parents=True, exist_ok=True)
        for c, name in zip(report.classes, names):
            (rep_dir / name).write_text(c.rep_sgr)
    _write(report.table() + report.lines(), args.output)
    return EXIT_OK if not report.merges and not report.rep_mismatches else EXIT_INVALID


def cmd_spectrum(args) -> int:
    from .spectral import parse_job, run_job

    job = parse_job(Path(args.jobfile).read_text())
    _write(run_job(job), args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    from .render import to_dot, to_svg

    g = sgr.load(args.file)
    _write(to_dot(g) if args.format == "dot" else to_svg(g), args.output)
    return EXIT_OK


def cmd_replay(args) -> int:
    g = sgr.load(args.file)
    log = ActionLog.parse(Path(args.logfile).read_text())
    out = replay(as_tree(g), log, verify=True)
    _write(out.to_cellgraph().serialize(), args.output)
    return EXIT_OK


def _int_list(text: str) -> List[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="evengraphs", description="Centrally symmetric standard graphs and their even braid actions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check the labeling laws")
    s.add_argument("file")
    s.add_argument("--no-symmetry", action="store_true", help="skip the central symmetry check")
    s.set_defaults(func=cmd_validate)

    def graph_out(s):
        s.add_argument("-o", "--output", help="write the canonical .sgr here (default stdout)")
        s.add_argument("--log", help="write the action log here (default OUTPUT.log)")

    s = sub.add_parser("act", help="apply E_j^2 or its inverse")
    s.add_argument("file")
    s.add_argument("-j", type=int, required=True)
    s.add_argument("--inverse", action="store_true")
    s.add_argument("-r", "--repeat", type=int, default=1)
    graph_out(s)
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("normalize", help="drive to ivy form")
    s.add_argument("file")
    graph_out(s)
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("reduce", help="reduce to the class representative")
    s.add_argument("file")
    graph_out(s)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("orbit", help="enumerate and classify orbits")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-J", type=_int_list, required=True, help="subdominant sectors, e.g. 0,4")
    s.add_argument("--max-vertices", type=int, required=True)
    s.add_argument("--limit", type=int, default=250_000, help="resource guard on the number of graphs")
    s.add_argument("--rep-dir", help="directory for the representative .sgr files")
    s.add_argument("--no-check", action="store_true", help="skip reducing every member")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("spectrum", help="eigenvalues and loop permutations from a job file")
    s.add_argument("jobfile")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("render", help="DOT tree view or radial SVG")
    s.add_argument("file")
    s.add_argument("--format", choices=("dot", "svg"), default="dot")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("replay", help="replay an action log")
    s.add_argument("file")
    s.add_argument("logfile")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_replay)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except ResourceGuard as e:
        sys.stderr.write(f"resource guard: {e}\n")
        return EXIT_GUARD
    except (GraphError, ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
