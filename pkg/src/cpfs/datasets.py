"""Bundled example inputs.

``photovoltaic`` is the five-alternative, five-criterion photovoltaic-cell
selection problem evaluated by three experts; ``pfv_collections`` is a small
set of point-value collections for the fusion command.
"""

from __future__ import annotations

from pathlib import Path

from .mcdm import DecisionProblem
from .serialize import load_problem

__all__ = ["case_study_path", "load_case_study", "collections_path"]

_DATA_DIR = Path(__file__).parent / "data"


def case_study_path() -> Path:
    """Path of the bundled photovoltaic-cell selection problem."""
    return _DATA_DIR / "photovoltaic.json"


def load_case_study() -> DecisionProblem:
    return load_problem(case_study_path())


def collections_path() -> Path:
    """Path of the bundled point-value collections example."""
    return _DATA_DIR / "pfv_collections.json"
