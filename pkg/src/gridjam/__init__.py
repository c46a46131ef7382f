"""Worst-case obstacle placement against grid planners, plus the race sim.

The toolkit answers three questions about a robot navigating an occupancy
grid with A*: where a single square obstacle hurts a given route the most,
whether an attacker computing that placement in real time can beat the
robot to it, and how large the resulting delays are across a benchmark of
maps and goals.
"""

from .attack import (
    AttackPlan,
    CandidateEval,
    Outcome,
    attack_oracle,
    brute_force_attack,
    enumerate_candidates,
)
from .errors import (
    BadCharError,
    BadEndpointError,
    BadValueError,
    EmptyMapError,
    GridJamError,
    MapError,
    MissingKeyError,
    NoBaselineError,
    NoPathError,
    OutOfBoundsError,
    PlannerError,
    RaggedRowsError,
    ReplanFailedError,
    ScenarioError,
    UnknownKeyError,
)
from .gridmap import (
    Cell,
    GridMap,
    ObstaclePlacement,
    apply_obstacle,
    footprint_cells,
    parse_map,
    serialize_map,
)
from .harness import (
    ADVERSARIAL,
    BENIGN,
    CSV_HEADER,
    GoalMetrics,
    MetricsSummary,
    SuiteRun,
    read_csv,
    run_suite,
    write_csv,
)
from .planner import (
    Path,
    astar,
    dijkstra_oracle,
    euclidean_distance,
    octile_distance,
    prefix_costs,
    step_cost,
)
from .scenario import Scenario, load_scenario, parse_scenario
from .sim import RunResult, SimConfig, position_at, simulate, spawn_time_model
from .svgrender import render_positions_svg, render_scenario_svgs, render_svg

__version__ = "0.1.0"

__all__ = [
    "AttackPlan", "CandidateEval", "Outcome", "attack_oracle", "brute_force_attack",
    "enumerate_candidates",
    "BadCharError", "BadEndpointError", "BadValueError", "EmptyMapError", "GridJamError",
    "MapError", "MissingKeyError", "NoBaselineError", "NoPathError", "OutOfBoundsError",
    "PlannerError", "RaggedRowsError", "ReplanFailedError", "ScenarioError", "UnknownKeyError",
    "Cell", "GridMap", "ObstaclePlacement", "apply_obstacle", "footprint_cells",
    "parse_map", "serialize_map",
    "ADVERSARIAL", "BENIGN", "CSV_HEADER", "GoalMetrics", "MetricsSummary", "SuiteRun",
    "read_csv", "run_suite", "write_csv",
    "Path", "astar", "dijkstra_oracle", "euclidean_distance", "octile_distance",
    "prefix_costs", "step_cost",
    "Scenario", "load_scenario", "parse_scenario",
    "RunResult", "SimConfig", "position_at", "simulate", "spawn_time_model",
    "render_positions_svg", "render_scenario_svgs", "render_svg",
    "__version__",
]
