"""Exact solvers for cops-and-robber variants on small graphs."""

__version__ = "0.1.0"

import warnings

# numba probes an old TBB on some systems and falls back on its own
warnings.filterwarnings("ignore", message="The TBB threading layer")
