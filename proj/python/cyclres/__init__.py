"""Minimal free resolutions of Stanley-Reisner rings of cyclic polytopes."""

from ._cyclres import (
    Resolution,
    UsageError,
    betti_formula,
    eta,
    f_vector,
    facets,
    ideal,
    is_face,
    resolve,
    run,
)

__all__ = [
    "Resolution",
    "UsageError",
    "betti_formula",
    "eta",
    "f_vector",
    "facets",
    "ideal",
    "is_face",
    "resolve",
    "run",
]
