from .objectives import (
    KINDS,
    Iterate,
    ObjectiveSpec,
    eval_objective,
    grad_smooth,
    lambda_max,
    resolve_spec,
    smooth_lipschitz_factor,
)
from .penalties import huber, mcp_penalty, mcp_stationarity, mcp_subdiff_dist, prox_mcp, soft_threshold
from .tv import SynthesisProblem, diff_adjoint, diff_apply, prox_tv1d, synthesis_lift, synthesis_problem

__all__ = [
    "KINDS",
    "ObjectiveSpec",
    "Iterate",
    "eval_objective",
    "grad_smooth",
    "lambda_max",
    "resolve_spec",
    "smooth_lipschitz_factor",
    "soft_threshold",
    "prox_mcp",
    "mcp_penalty",
    "mcp_stationarity",
    "mcp_subdiff_dist",
    "huber",
    "prox_tv1d",
    "diff_apply",
    "diff_adjoint",
    "synthesis_lift",
    "synthesis_problem",
    "SynthesisProblem",
]
