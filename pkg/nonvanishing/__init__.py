"""
nonvanishing - exact verification of characteristic-p counterexamples to
Kodaira vanishing built as cyclic covers of ruled surfaces over Tango curves.

The package validates construction parameters, evaluates the intersection
numbers and Euler characteristics of the construction, certifies the
nonvanishing of H^1 for the negative powers of the line bundles Z and
Z_{a,b}, refutes the erroneous pushforward formula, and emits exact
counterexample dossiers.
"""

from .cohomology import (
    Witness,
    regularity_contradiction_demo,
    theorem_nonvan1,
    theorem_nonvan2,
)
from .dossier import build_dossier, run_checks
from .errors import NonvanishingError
from .params import ConstructionParams, enumerate_params, validate
from .pushforward import (
    pushforward_erroneous,
    pushforward_negative,
    pushforward_thickening,
    refute_erroneous,
)

__version__ = "0.1.0"

__all__ = [
    "ConstructionParams",
    "NonvanishingError",
    "Witness",
    "build_dossier",
    "enumerate_params",
    "pushforward_erroneous",
    "pushforward_negative",
    "pushforward_thickening",
    "refute_erroneous",
    "regularity_contradiction_demo",
    "run_checks",
    "theorem_nonvan1",
    "theorem_nonvan2",
    "validate",
]
