"""poslab: exact tools for matroids, positroids, Lorentzian and stable
polynomials, Rayleigh properties, and tropical Pluecker relations.

All decision procedures run in exact rational arithmetic; sampling-based
falsifiers are deterministic (counter-based streams) and re-verify every
hit exactly before reporting it.
"""

from ._kernels import BACKEND as kernel_backend
from .verdicts import FAIL, PASS_CERTIFIED, PASS_SAMPLED, Verdict

__version__ = "0.1.0"

__all__ = [
    "FAIL",
    "PASS_CERTIFIED",
    "PASS_SAMPLED",
    "Verdict",
    "kernel_backend",
    "__version__",
]
