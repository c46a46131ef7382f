"""Command-line front end.

Exit codes: 0 on success, 1 for validation or usage errors, 2 for I/O
errors. All output is deterministic for identical inputs.
"""

import argparse
import sys
from pathlib import Path

from . import data as _data
from .attack import Outcome, brute_force_attack
from .errors import GridJamError
from .gridmap import Cell, parse_map
from .harness import ADVERSARIAL, run_suite, write_csv
from .planner import astar
from .scenario import load_scenario
from .svgrender import render_scenario_svgs, render_svg


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    except GridJamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    raise SystemExit(cli())


def _build_parser():
    parser = _Parser(prog="gridjam", description="Plan, attack, and race grid navigation runs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="plan a route on a map")
    p.add_argument("map")
    p.add_argument("start")
    p.add_argument("goal")
    p.set_defaults(handler=_cmd_plan)

    p = sub.add_parser("attack", help="search the worst obstacle placement for a route")
    p.add_argument("map")
    p.add_argument("start")
    p.add_argument("goal")
    p.add_argument("--side", type=int, default=3)
    p.set_defaults(handler=_cmd_attack)

    p = sub.add_parser("simulate", help="run one scenario and print every run")
    p.add_argument("scenario")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("suite", help="run scenarios, write a CSV, print summaries")
    p.add_argument("scenarios", nargs="+")
    p.add_argument("--csv", required=True)
    p.add_argument("--svg-dir")
    p.set_defaults(handler=_cmd_suite)

    p = sub.add_parser("render", help="render a map, its route, and the attack to SVG")
    p.add_argument("map")
    p.add_argument("start")
    p.add_argument("goal")
    p.add_argument("--side", type=int, default=3)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_render)
    return parser


def _cmd_plan(args) -> int:
    grid = parse_map(Path(args.map).read_text())
    path = astar(grid, _cell_arg(args.start), _cell_arg(args.goal))
    print(f"cost={path.cost:.6f}")
    print("path=" + " ".join(str(c) for c in path.cells))
    return 0


def _cmd_attack(args) -> int:
    grid = parse_map(Path(args.map).read_text())
    plan = brute_force_attack(grid, _cell_arg(args.start), _cell_arg(args.goal), _side_arg(args.side))
    print(f"baseline_cost={plan.baseline.cost:.6f}")
    for entry in plan.ledger:
        line = f"candidate index={entry.index} center={entry.placement.center} outcome={entry.outcome.value}"
        if entry.outcome is Outcome.EVALUATED:
            line += f" cost={entry.cost:.6f}"
        print(line)
    if plan.best is None:
        print("best=none gain=0.000000")
    else:
        print(f"best={plan.best.center} gain={plan.gain:.6f}")
    return 0


def _cmd_simulate(args) -> int:
    scenario = load_scenario(_scenario_arg(args.scenario))
    runs, summary = run_suite(scenario)
    for run in runs:
        print(_run_line(run))
    for goal in summary.skipped_goals:
        print(f"skipped scenario={scenario.name} goal={goal} reason=unreachable")
    return 0


def _cmd_suite(args) -> int:
    all_runs = []
    blocks = []
    for entry in args.scenarios:
        scenario = load_scenario(_scenario_arg(entry))
        runs, summary = run_suite(scenario)
        all_runs.extend(runs)
        if args.svg_dir:
            render_scenario_svgs(scenario, args.svg_dir)
        blocks.append((scenario, runs, summary))
    write_csv(all_runs, args.csv)
    for scenario, runs, summary in blocks:
        print(
            f"scenario={scenario.name} goals={len(scenario.goals)} "
            f"skipped={len(summary.skipped_goals)} runs={len(runs)}"
        )
        print(
            f"mean_abs_delay_s={_num(summary.overall_mean_delay_abs)} "
            f"mean_pct_delay={_num(summary.overall_mean_delay_pct)} "
            f"success_rate={_num(summary.success_rate)}"
        )
    return 0


def _cmd_render(args) -> int:
    grid = parse_map(Path(args.map).read_text())
    plan = brute_force_attack(grid, _cell_arg(args.start), _cell_arg(args.goal), _side_arg(args.side))
    render_svg(grid, plan.baseline, args.out, attacked=plan.attacked_path, obstacle=plan.best)
    print(f"wrote {args.out}")
    return 0


def _run_line(run):
    r = run.result
    line = f"run scenario={run.scenario} goal={r.goal} condition={run.condition} repeat={run.repeat}"
    if run.condition == ADVERSARIAL:
        line += f" time_s={r.adversarial_time:.6f}"
        if r.spawn_time is not None:
            line += f" spawn_time_s={r.spawn_time:.6f}"
        if r.obstacle is not None:
            line += f" obstacle={r.obstacle.center}"
        if r.attack_success is not None:
            line += f" success={'true' if r.attack_success else 'false'}"
        line += f" delay_abs_s={r.delay_abs:.6f}"
        if r.delay_pct is not None:
            line += f" delay_pct={r.delay_pct:.6f}"
    else:
        line += f" time_s={r.benign_time:.6f}"
    return line


def _num(value):
    return "na" if value is None else f"{value:.6f}"


def _cell_arg(text) -> Cell:
    parts = text.split(",")
    if len(parts) != 2:
        raise _UsageError(f"expected a cell as 'col,row', got {text!r}")
    try:
        return Cell(int(parts[0]), int(parts[1]))
    except ValueError:
        raise _UsageError(f"expected a cell as 'col,row', got {text!r}") from None


def _side_arg(side) -> int:
    if side < 1 or side % 2 == 0:
        raise _UsageError(f"--side must be an odd positive integer, got {side}")
    return side


def _scenario_arg(entry):
    """A filesystem path, or the name of a bundled scenario."""
    path = Path(entry)
    if path.exists():
        return path
    bundled = _data.scenario_path(entry)
    if bundled is not None:
        return bundled
    raise FileNotFoundError(f"no such scenario file or bundled scenario: {entry}")
