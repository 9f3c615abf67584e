"""Exact Hilbert functions, Ratliff-Rush and integral-closure filtrations,
and theorem checkers for m-primary monomial ideals."""

from ._core import (
    Filtration,
    Ideal,
    Ring,
    __version__,
    check_huneke_ooishi,
    check_nonnegativity,
    check_normal_e3,
    check_northcott,
    fit,
    integral_closure,
    newton_membership,
    ratliff_rush,
    run_instance_text,
)

__all__ = [
    "Filtration",
    "Ideal",
    "Ring",
    "__version__",
    "check_huneke_ooishi",
    "check_nonnegativity",
    "check_normal_e3",
    "check_northcott",
    "fit",
    "integral_closure",
    "newton_membership",
    "ratliff_rush",
    "run_instance_text",
]
