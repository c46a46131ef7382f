"""Bundled demo maps and scenario files.

The scenarios here back the shipped benchmarks: a warehouse floor with a
central start and a ring of pick goals, plus three constrained rooms
(tunnel, turn, t-wall) that bracket the attack's impact from severe to
negligible.
"""

from importlib.resources import files
from pathlib import Path


def data_dir() -> Path:
    return Path(str(files(__package__)))


def scenario_path(name):
    """Path of a bundled scenario by name ('warehouse') or filename.

    Returns None when nothing matches, so callers can fall back to plain
    filesystem paths.
    """
    base = data_dir()
    for candidate in (name, f"{name}.scn"):
        path = base / candidate
        if path.suffix == ".scn" and path.is_file():
            return path
    return None


def map_path(name) -> Path:
    base = data_dir()
    for candidate in (name, f"{name}.txt"):
        path = base / candidate
        if path.suffix == ".txt" and path.is_file():
            return path
    raise FileNotFoundError(f"no bundled map named {name!r}")


def scenario_names():
    return sorted(p.stem for p in data_dir().glob("*.scn"))
