"""Deterministic SVG renders of maps, routes, and obstacle placements.

Output is assembled from fixed templates in a fixed order, so identical
inputs produce byte-identical files and renders can be golden-file tested.
"""

from .attack import brute_force_attack
from .gridmap import footprint_cells

PX = 16  # pixels per cell

_STYLE = (
    "<style>\n"
    ".free{fill:#f4f2ee;}\n"
    ".occupied{fill:#3b3b3b;}\n"
    ".obstacle{fill:#8c8c8c;stroke:#5a5a5a;stroke-width:1;}\n"
    ".baseline{fill:none;stroke:#2166ac;stroke-width:3;}\n"
    ".attacked{fill:none;stroke:#d6604d;stroke-width:3;stroke-dasharray:7 4;}\n"
    ".start{fill:#1a9641;}\n"
    ".goal{fill:none;stroke:#d73027;stroke-width:3;}\n"
    "</style>"
)


def render_svg(grid, baseline, out_path, attacked=None, obstacle=None):
    """Draw the map with a baseline route and, optionally, the attack.

    `attacked` is the replanned route and `obstacle` the placement that
    produced it; both may be omitted for a benign render.
    """
    lines = _map_lines(grid)
    if obstacle is not None:
        lines.append('<g class="overlay">')
        for cell in sorted(footprint_cells(obstacle, grid), key=lambda c: (c.row, c.col)):
            lines.append(
                f'<rect class="obstacle" x="{cell.col * PX}" y="{cell.row * PX}" '
                f'width="{PX}" height="{PX}"/>'
            )
        lines.append("</g>")
    lines.append(f'<polyline class="baseline" points="{_points(baseline.cells)}"/>')
    if attacked is not None:
        lines.append(f'<polyline class="attacked" points="{_points(attacked.cells)}"/>')
    lines.append(_marker("start", baseline.cells[0]))
    lines.append(_marker("goal", baseline.cells[-1]))
    lines.append("</svg>")
    _write(out_path, lines)


def render_positions_svg(grid, placements, out_path, start=None, goals=()):
    """Overlay every placement footprint on one map (campaign overview)."""
    lines = _map_lines(grid)
    lines.append('<g class="overlay">')
    for placement in placements:
        for cell in sorted(footprint_cells(placement, grid), key=lambda c: (c.row, c.col)):
            lines.append(
                f'<rect class="obstacle" x="{cell.col * PX}" y="{cell.row * PX}" '
                f'width="{PX}" height="{PX}"/>'
            )
    lines.append("</g>")
    for goal in goals:
        lines.append(_marker("goal", goal))
    if start is not None:
        lines.append(_marker("start", start))
    lines.append("</svg>")
    _write(out_path, lines)


def render_scenario_svgs(scenario, out_dir):
    """Render one attacked view per goal plus a placement overview.

    Returns the written paths in order. Used by the suite command; renders
    recompute the attack per goal so they stay independent of any cached
    simulation state.
    """
    from pathlib import Path

    from .errors import NoBaselineError

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    placements = []
    for index, goal in enumerate(scenario.goals, start=1):
        try:
            plan = brute_force_attack(scenario.grid, scenario.start, goal, scenario.obstacle_side)
        except NoBaselineError:
            continue
        path = out / f"{scenario.name}-goal{index:02d}.svg"
        render_svg(scenario.grid, plan.baseline, path, attacked=plan.attacked_path, obstacle=plan.best)
        if plan.best is not None:
            placements.append(plan.best)
        written.append(path)
    overview = out / f"{scenario.name}-obstacles.svg"
    render_positions_svg(scenario.grid, placements, overview, start=scenario.start, goals=scenario.goals)
    written.append(overview)
    return written


def _map_lines(grid):
    w = grid.width * PX
    h = grid.height * PX
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        _STYLE,
        f'<rect class="free" x="0" y="0" width="{w}" height="{h}"/>',
        '<g class="cells">',
    ]
    for row in range(grid.height):
        for col in range(grid.width):
            if grid.rows[row][col]:
                lines.append(
                    f'<rect class="occupied" x="{col * PX}" y="{row * PX}" '
                    f'width="{PX}" height="{PX}"/>'
                )
    lines.append("</g>")
    return lines


def _points(cells):
    return " ".join(f"{c.col * PX + PX // 2},{c.row * PX + PX // 2}" for c in cells)


def _marker(kind, cell):
    cx = cell.col * PX + PX // 2
    cy = cell.row * PX + PX // 2
    return f'<circle class="{kind}" cx="{cx}" cy="{cy}" r="{PX // 3}"/>'


def _write(out_path, lines):
    with open(out_path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
