"""Experiment suites: benign and attacked repeats per goal, metrics, CSV.

The protocol mirrors a bench campaign: for every goal the robot runs the
route `repeats` times without interference and `repeats` times against the
attacker, and the summary reports mean absolute delay, mean percentage
delay, and the attack success rate.
"""

import csv
from dataclasses import dataclass

from .errors import NoBaselineError
from .gridmap import Cell
from .scenario import Scenario
from .sim import RunResult, SimConfig, simulate

BENIGN = "benign"
ADVERSARIAL = "adversarial"

CSV_HEADER = (
    "scenario", "goal_col", "goal_row", "condition", "repeat",
    "euclidean_m", "time_s", "spawn_time_s", "obstacle_col", "obstacle_row",
    "success", "delay_abs_s", "delay_pct",
)


@dataclass(frozen=True)
class SuiteRun:
    """One run plus the bookkeeping the result itself does not carry."""

    scenario: str
    condition: str
    repeat: int
    result: RunResult


@dataclass(frozen=True)
class GoalMetrics:
    goal: Cell
    mean_benign_time: float
    mean_adversarial_time: float
    mean_delay_abs: float
    mean_delay_pct: float  # None when the benign time is zero


@dataclass(frozen=True)
class MetricsSummary:
    per_goal: tuple
    overall_mean_delay_abs: float
    overall_mean_delay_pct: float
    success_rate: float  # percent of attacked runs that landed; None if none attacked
    skipped_goals: tuple = ()


def run_suite(scenario: Scenario):
    """Run the full protocol; returns (runs, summary).

    Runs are ordered by (goal index, condition, repeat) with benign before
    adversarial. A goal the planner cannot reach is skipped and recorded in
    the summary instead of aborting the suite.
    """
    benign_cfg = SimConfig(
        speed=scenario.speed,
        attack_enabled=False,
        eval_time_per_candidate=scenario.eval_time_per_candidate,
        attack_start_delay=scenario.attack_start_delay,
    )
    attack_cfg = SimConfig(
        speed=scenario.speed,
        attack_enabled=True,
        eval_time_per_candidate=scenario.eval_time_per_candidate,
        attack_start_delay=scenario.attack_start_delay,
    )
    runs = []
    per_goal = []
    skipped = []
    for goal in scenario.goals:
        try:
            goal_runs = []
            for repeat in range(1, scenario.repeats + 1):
                result = simulate(scenario.grid, scenario.start, goal, benign_cfg, scenario.obstacle_side)
                goal_runs.append(SuiteRun(scenario.name, BENIGN, repeat, result))
            for repeat in range(1, scenario.repeats + 1):
                result = simulate(scenario.grid, scenario.start, goal, attack_cfg, scenario.obstacle_side)
                goal_runs.append(SuiteRun(scenario.name, ADVERSARIAL, repeat, result))
        except NoBaselineError:
            skipped.append(goal)
            continue
        runs.extend(goal_runs)
        per_goal.append(_goal_metrics(goal, goal_runs))
    return runs, _summarize(per_goal, runs, skipped)


def _goal_metrics(goal, goal_runs):
    benign = [r.result.benign_time for r in goal_runs if r.condition == BENIGN]
    attacked = [r.result for r in goal_runs if r.condition == ADVERSARIAL]
    pct = [r.delay_pct for r in attacked if r.delay_pct is not None]
    return GoalMetrics(
        goal=goal,
        mean_benign_time=_mean(benign),
        mean_adversarial_time=_mean([r.adversarial_time for r in attacked]),
        mean_delay_abs=_mean([r.delay_abs for r in attacked]),
        mean_delay_pct=_mean(pct) if pct else None,
    )


def _summarize(per_goal, runs, skipped):
    attacked = [r.result for r in runs if r.condition == ADVERSARIAL]
    delays = [r.delay_abs for r in attacked]
    pcts = [r.delay_pct for r in attacked if r.delay_pct is not None]
    landed = [r.attack_success for r in attacked if r.attack_success is not None]
    return MetricsSummary(
        per_goal=tuple(per_goal),
        overall_mean_delay_abs=_mean(delays) if delays else None,
        overall_mean_delay_pct=_mean(pcts) if pcts else None,
        success_rate=100.0 * sum(landed) / len(landed) if landed else None,
        skipped_goals=tuple(skipped),
    )


def _mean(values):
    return sum(values) / len(values)


def write_csv(runs, out_path):
    """One row per run; optionals are blank, floats use 6 decimals."""
    with open(out_path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for run in runs:
            writer.writerow(_csv_row(run))


def _csv_row(run):
    r = run.result
    time_s = r.benign_time if run.condition == BENIGN else r.adversarial_time
    if run.condition == BENIGN:
        spawn = obstacle = success = delay_abs = delay_pct = None
    else:
        spawn = r.spawn_time
        obstacle = r.obstacle
        success = r.attack_success
        delay_abs = r.delay_abs
        delay_pct = r.delay_pct
    return (
        run.scenario,
        r.goal.col,
        r.goal.row,
        run.condition,
        run.repeat,
        _fmt(r.euclidean),
        _fmt(time_s),
        _fmt(spawn),
        obstacle.center.col if obstacle is not None else "",
        obstacle.center.row if obstacle is not None else "",
        "" if success is None else ("true" if success else "false"),
        _fmt(delay_abs),
        _fmt(delay_pct),
    )


def _fmt(value):
    return "" if value is None else f"{value:.6f}"


def read_csv(path):
    """Parse a results CSV back into typed row dicts (blank -> None)."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header: {header}")
        rows = []
        for raw in reader:
            record = dict(zip(CSV_HEADER, raw))
            for key in ("goal_col", "goal_row", "repeat"):
                record[key] = int(record[key])
            for key in ("euclidean_m", "time_s", "spawn_time_s", "delay_abs_s", "delay_pct"):
                record[key] = float(record[key]) if record[key] else None
            for key in ("obstacle_col", "obstacle_row"):
                record[key] = int(record[key]) if record[key] else None
            record["success"] = {"true": True, "false": False, "": None}[record["success"]]
            rows.append(record)
    return rows
