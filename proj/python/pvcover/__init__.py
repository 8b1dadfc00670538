"""Exact partial vertex cover on bounded-degeneracy graphs.

Thin python surface over the C++ core: graphs, the universal-set solver,
the compression pipeline, the brute-force oracle, and instance generators.
"""

from ._core import (
    CapabilityError,
    Graph,
    InputError,
    InternalError,
    brute_force_solve,
    build_universal_set,
    check_biclique,
    compress,
    degeneracy_ordering,
    generate,
    solve,
)

__all__ = [
    "CapabilityError",
    "Graph",
    "InputError",
    "InternalError",
    "brute_force_solve",
    "build_universal_set",
    "check_biclique",
    "compress",
    "degeneracy_ordering",
    "generate",
    "solve",
]
