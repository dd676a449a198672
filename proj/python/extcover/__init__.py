"""Extension problems on graphs: minimal vertex cover, maximal independent
set and pattern cover extension, with brute-force oracles, kernelization,
branching solvers and gadget generators.

Vertices are 0-based throughout the Python API; file formats stay 1-based.
"""

try:
    from extcover._core import *  # noqa: F401,F403
except ImportError:
    # cmake build tree: the compiled module sits on sys.path directly
    from _core import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
