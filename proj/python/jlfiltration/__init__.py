"""Python bindings for the jlf filtration library.

Problems are the same JSON documents the ``jlf`` command reads; pass a dict,
a JSON string or a path. Results come back as plain dicts with exponents as
exact rational strings (``fractions.Fraction`` parses them).
"""

import json
import os
from fractions import Fraction

from . import _core
from ._core import JlfError

__all__ = [
    "JlfError",
    "compare_points",
    "correspond",
    "filtration",
    "load_problem",
    "transfer",
    "triples",
    "validate",
    "verify",
]


def load_problem(problem):
    """Return the problem as JSON text."""
    if isinstance(problem, dict):
        return json.dumps(problem)
    if isinstance(problem, os.PathLike) or (isinstance(problem, str) and os.path.isfile(problem)):
        with open(problem, encoding="utf-8") as f:
            return f.read()
    return problem


def validate(problem):
    return json.loads(_core.validate(load_problem(problem)))


def transfer(problem):
    return json.loads(_core.transfer(load_problem(problem)))


def triples(problem, side="inner"):
    return json.loads(_core.triples(load_problem(problem), side))


def filtration(problem, side="inner", refined=False):
    return json.loads(_core.filtration(load_problem(problem), side, refined))


def correspond(problem):
    return json.loads(_core.correspond(load_problem(problem)))


def compare_points(s, t):
    """'succeeds', 'precedes', 'equal' or 'incomparable' for s against t."""
    return _core.compare_points([str(Fraction(x)) for x in s], [str(Fraction(x)) for x in t])


def verify(seed=0, max_size=8):
    """Run every suite; returns {name: (passed, cases, ok)}."""
    return {name: (passed, cases, ok) for name, passed, cases, ok in _core.verify(seed, max_size)}
