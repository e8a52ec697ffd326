"""macroatlas: a computable IS/LM/AS/AD general-equilibrium engine whose 27
linked diagrams form one consistent, shockable big picture."""

from .core import Curve, DEFAULT_PARAMS, EconState, ParamValidationError, Params
from .equilibrium import long_run_ge, short_run_ge
from .graph import BigPicture, PropagationPlan, canonical_graph
from .store import Scenario, ScenarioStore

__version__ = "0.1.0"

__all__ = [
    "BigPicture",
    "Curve",
    "DEFAULT_PARAMS",
    "EconState",
    "ParamValidationError",
    "Params",
    "PropagationPlan",
    "Scenario",
    "ScenarioStore",
    "canonical_graph",
    "long_run_ge",
    "short_run_ge",
    "__version__",
]
