"""Distinction of dihedral representations of GL2 over p-adic quadratic towers.

Thin wrappers over the C++ core; every call returns the same report the CLI prints as JSON.
"""

import json

from . import _core
from ._core import MathError, ParseError, PrecisionUnderflow, RegimeRefusal

__all__ = [
    "MathError",
    "ParseError",
    "PrecisionUnderflow",
    "RegimeRefusal",
    "classify",
    "decide",
    "enumerate",
    "epsilon",
    "hakim",
    "verify_paper",
]


def classify(spec, p=None, precision=24):
    """Galois type and subfield lattice of a field spec such as "K=sqrt(p);L=sqrt(u)"."""
    return json.loads(_core.classify(spec, p, precision))


def decide(spec, omega, p=None, precision=24):
    """Verdict for pi(omega); omega is a character spec "t=<rational>;m=<int>" on L."""
    return json.loads(_core.decide(spec, omega, p, precision))


def enumerate(spec, regular_only=False, p=None, max_denominator=8, precision=24):  # noqa: A001
    return json.loads(_core.enumerate(spec, regular_only, p, max_denominator, precision))


def epsilon(spec, chi, pair=None, gauss=False, p=None, precision=24):
    """epsilon factor of chi on the pair "K/F", "L/K", "L/K'" or "L/K''"."""
    return json.loads(_core.epsilon(spec, chi, pair, gauss, p, precision))


def hakim(spec, omega, p=None, max_denominator=8, precision=24):
    return json.loads(_core.hakim(spec, omega, p, max_denominator, precision))


def verify_paper(p=None, max_denominator=8, precision=24, seed=1, only=None):
    """Run the acceptance criteria; returns {"all_pass": bool, "criteria": [...]}."""
    return json.loads(_core.verify_paper(p, max_denominator, precision, seed, only))
