"""Kinematic navigation runs racing a concurrently computed attack.

The timeline is deterministic. At t=0 the baseline plan is done and the
robot starts moving along it at constant speed; in parallel the attacker
scores one candidate placement per fixed time slice and drops the winning
obstacle once the last candidate has been scored. The attack lands only if
the obstacle appears before the robot reaches its footprint; the robot then
stops at the nearest upcoming cell centre, replans around the obstacle, and
arrives late by exactly the detour length.
"""

import bisect
from dataclasses import dataclass

from .attack import AttackPlan, brute_force_attack
from .errors import BadEndpointError, NoBaselineError, NoPathError, ReplanFailedError
from .gridmap import Cell, GridMap, ObstaclePlacement, apply_obstacle, footprint_cells
from .planner import Path, astar, euclidean_distance, prefix_costs


@dataclass(frozen=True)
class SimConfig:
    """Timing knobs for one run."""

    speed: float  # metres per second, constant along the route
    attack_enabled: bool = True
    eval_time_per_candidate: float = 0.05  # seconds of attacker compute per candidate
    attack_start_delay: float = 0.0  # seconds before the attacker starts scoring

    def __post_init__(self):
        if self.speed <= 0:
            raise ValueError(f"speed must be positive, got {self.speed}")
        if self.eval_time_per_candidate < 0:
            raise ValueError("eval_time_per_candidate must be >= 0")
        if self.attack_start_delay < 0:
            raise ValueError("attack_start_delay must be >= 0")


@dataclass(frozen=True)
class RunResult:
    """Outcome of one benign or attacked traversal."""

    start: Cell
    goal: Cell
    euclidean: float
    benign_time: float
    adversarial_time: float = None
    spawn_time: float = None
    obstacle: ObstaclePlacement = None
    attack_success: bool = None
    delay_abs: float = None
    delay_pct: float = None


def position_at(path: Path, cell_size: float, speed: float, t: float):
    """Continuous position along the path polyline after t seconds.

    Returns ((x, y) metres from the map's top-left corner, passed_index),
    where passed_index is the last path index whose cell centre has been
    reached. Positions clamp to the endpoints outside [0, arrival].
    """
    marks = [c * cell_size for c in prefix_costs(path)]
    travelled = min(max(speed * t, 0.0), marks[-1])
    passed = bisect.bisect_right(marks, travelled) - 1
    cx, cy = _center(path.cells[passed], cell_size)
    if passed == len(marks) - 1 or travelled == marks[passed]:
        return (cx, cy), passed
    nx, ny = _center(path.cells[passed + 1], cell_size)
    frac = (travelled - marks[passed]) / (marks[passed + 1] - marks[passed])
    return (cx + (nx - cx) * frac, cy + (ny - cy) * frac), passed


def _center(cell: Cell, cell_size: float):
    return (cell.col + 0.5) * cell_size, (cell.row + 0.5) * cell_size


def spawn_time_model(plan: AttackPlan, config: SimConfig) -> float:
    """Time at which the obstacle lands, measured from motion start.

    The attacker pays one evaluation slice per candidate it actually
    planned for (blocking candidates still cost a planning round) and
    deploys immediately after the last one.
    """
    return config.attack_start_delay + config.eval_time_per_candidate * plan.planning_rounds


def simulate(grid: GridMap, start: Cell, goal: Cell, config: SimConfig, side: int = 3) -> RunResult:
    """Run one traversal; with config.attack_enabled, race it against the attack."""
    try:
        baseline = astar(grid, start, goal)
    except (NoPathError, BadEndpointError) as exc:
        raise NoBaselineError(str(exc)) from exc
    benign_time = baseline.metric_length / config.speed
    euclid = euclidean_distance(start, goal, grid.cell_size)
    if not config.attack_enabled:
        return RunResult(start, goal, euclid, benign_time)

    plan = brute_force_attack(grid, start, goal, side)
    if plan.best is None:
        # nothing to drop: the attacked run is indistinguishable from benign
        return RunResult(
            start, goal, euclid, benign_time,
            adversarial_time=benign_time,
            delay_abs=0.0,
            delay_pct=0.0 if benign_time > 0 else None,
        )

    spawn = spawn_time_model(plan, config)
    arrival = [c * grid.cell_size / config.speed for c in prefix_costs(baseline)]
    footprint = footprint_cells(plan.best, grid)
    enter_index = next(i for i, c in enumerate(baseline.cells) if c in footprint)
    t_pass = arrival[enter_index]

    if not spawn < t_pass:
        # the robot was already inside (or past) the footprint: no effect
        return RunResult(
            start, goal, euclid, benign_time,
            adversarial_time=benign_time,
            spawn_time=spawn,
            obstacle=plan.best,
            attack_success=False,
            delay_abs=0.0,
            delay_pct=0.0 if benign_time > 0 else None,
        )

    _, passed = position_at(baseline, grid.cell_size, config.speed, spawn)
    if spawn == arrival[passed]:
        snap = passed
        t_snap = arrival[snap]
    else:
        snap = passed + 1
        if baseline.cells[snap] in footprint:
            # mid-segment heading straight into the spawn: back off to the
            # last centre instead of stopping inside the obstacle
            snap = passed
            t_snap = 2.0 * spawn - arrival[passed]
        else:
            t_snap = arrival[snap]

    obstructed = apply_obstacle(grid, plan.best)
    try:
        replanned = astar(obstructed, baseline.cells[snap], goal)
    except (NoPathError, BadEndpointError) as exc:
        raise ReplanFailedError(
            f"replanning from {baseline.cells[snap]} after spawning {plan.best} failed: {exc}"
        ) from exc
    adversarial_time = t_snap + replanned.metric_length / config.speed
    delay = adversarial_time - benign_time
    return RunResult(
        start, goal, euclid, benign_time,
        adversarial_time=adversarial_time,
        spawn_time=spawn,
        obstacle=plan.best,
        attack_success=True,
        delay_abs=delay,
        delay_pct=100.0 * delay / benign_time if benign_time > 0 else None,
    )
