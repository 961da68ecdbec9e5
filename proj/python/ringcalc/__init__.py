"""Spectral functional calculus on generic rings.

Thin wrapper over the compiled module: spectral functions on complex
matrices, exact rational scalar evaluation, the identity catalog, and the
verification suites.
"""

try:
    from ._ringcalc import *  # noqa: F401,F403  (installed layout)
    from ._ringcalc import __doc__ as _core_doc
except ImportError:  # build-tree layout: extension next to the package on sys.path
    from _ringcalc import *  # noqa: F401,F403
    from _ringcalc import __doc__ as _core_doc

__all__ = [
    "compute",
    "split",
    "geometric_mean",
    "sqrt_segment",
    "cayley",
    "exact",
    "verify_identities",
    "run_suite",
    "generate_fixture",
    "SpectralClassError",
    "DecayError",
]
