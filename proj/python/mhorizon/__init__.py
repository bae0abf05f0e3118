"""Multi-horizon stochastic capacity-expansion modeling.

Thin wrapper over the compiled core: load a case directory, assemble the
deterministic-equivalent LP, solve it with the embedded simplex, and pull
reporting views out of the solution.
"""

try:
    # installed wheel: the extension lives inside the package
    from ._mhorizon import (
        Case,
        Model,
        ModelError,
        Solution,
        build_model,
        load_case,
        solve_mps,
    )
except ImportError:  # build-tree layout: extension on PYTHONPATH
    from _mhorizon import (
        Case,
        Model,
        ModelError,
        Solution,
        build_model,
        load_case,
        solve_mps,
    )

__all__ = [
    "Case",
    "Model",
    "ModelError",
    "Solution",
    "build_model",
    "load_case",
    "solve_mps",
]
