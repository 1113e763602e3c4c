"""Maximum families of pairwise triangle-different Hamiltonian paths.

Exact constructions, pairwise-union verification, tightness certificates
and maximum-clique search over path compatibility graphs.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
except ImportError:  # in-tree builds put _core next to the build dir
    from _core import *  # type: ignore  # noqa: F401,F403

__all__ = [
    "construct_triangle_family",
    "balanced_bipartition_count",
    "binomial",
    "identity_check",
    "verify_family",
    "certify_tightness",
    "end_edge_injectivity",
    "union_contains",
    "enumerate_paths",
    "search_max_clique",
    "hc_prime_family",
    "tree_family",
    "union_family_size",
]
