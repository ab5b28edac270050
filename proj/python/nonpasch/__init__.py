"""Exact models of ordered-plane axioms.

Reports are plain dicts with the same fields as the command-line JSON output.
"""

import json

from ._nonpasch import (
    NonpaschError,
    apex,
    between5,
    models,
    normalize_line,
    run_cli,
)
from . import _nonpasch

__all__ = [
    "NonpaschError",
    "apex",
    "between5",
    "check",
    "models",
    "normalize_line",
    "replay",
    "run_cli",
    "suite",
]


def suite(model, axioms=None, strategy="default", seed=42, samples=1000):
    """Checks `axioms` (default: the model's suite) and returns a list of reports."""
    return json.loads(_nonpasch.suite_json(model, axioms, strategy, seed, samples))


def check(model, axiom, strategy="default", seed=42, samples=1000):
    return suite(model, [axiom], strategy, seed, samples)[0]


def replay(model, axiom, witness):
    """Re-verifies a witness taken from a report."""
    return _nonpasch.replay_json(model, axiom, json.dumps(witness))
