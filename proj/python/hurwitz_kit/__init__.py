"""Hurwitz stability certification for symmetric and Metzler matrices."""

import json

from ._core import (
    HurwitzError,
    Matrix,
    __version__,
    char_poly,
    insulin_a7,
    insulin_b6,
    insulin_demo_ok,
    is_metzler,
    is_symmetric,
    lift_metzler,
    lift_symmetric,
    phi,
    phi_inverse,
    random_hurwitz_symmetric,
    schur_reduce,
    simulate,
    solve_linear,
)
from . import _core


def certify(a, kind, tol=None, oracles=True):
    """Certificate for `a` as a dict (kind, verdict, pivots, failure_stage, oracles)."""
    return json.loads(_core._certify(a, kind, tol, oracles))


def sample_ball_family(config):
    """Frobenius-ball family report for a config dict (see the CLI `sample` command)."""
    return json.loads(_core._sample_ball_family(json.dumps(config)))


def equilibrium(a, b, tol=None):
    return json.loads(_core._equilibrium(a, b, tol))


__all__ = [
    "HurwitzError",
    "Matrix",
    "__version__",
    "certify",
    "char_poly",
    "equilibrium",
    "insulin_a7",
    "insulin_b6",
    "insulin_demo_ok",
    "is_metzler",
    "is_symmetric",
    "lift_metzler",
    "lift_symmetric",
    "phi",
    "phi_inverse",
    "random_hurwitz_symmetric",
    "sample_ball_family",
    "schur_reduce",
    "simulate",
    "solve_linear",
]
