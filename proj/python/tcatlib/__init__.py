"""Finite checker for generalized multicategories over a monad."""

from ._tcat import (
    CapabilityError,
    DocumentError,
    TcatError,
    hom_count,
    monad_laws,
    nerve_level_sizes,
    parse_roundtrip,
    run,
    segal,
    simplex_hom,
    simplicial_identities,
)

__all__ = [
    "CapabilityError",
    "DocumentError",
    "TcatError",
    "hom_count",
    "monad_laws",
    "nerve_level_sizes",
    "parse_roundtrip",
    "run",
    "segal",
    "simplex_hom",
    "simplicial_identities",
]
