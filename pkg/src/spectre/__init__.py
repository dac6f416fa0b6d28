"""Exact spectra of isolated hypersurface singularities and spectral node bounds."""

from .arnold import (
    BoundProblem,
    BoundReport,
    arnold_closed_form_3,
    arnold_number,
    check_configuration,
    classical_bounds,
    max_copies,
)
from .local_algebra import INFINITE, LocalOrder, OrderKind, milnor_number, standard_basis
from .newton import lct, newton_polyhedron, nondegenerate_spectrum, spectrum_unit_part
from .picard_lefschetz import VanishingBasis, ak_chain, matrix_order, total_monodromy
from .poly import Poly, format_polynomial, parse_polynomial, partials, support
from .quasihomogeneous import WeightVector, bp_spectrum, detect_weights, qh_spectrum
from .spectrum import (
    IntervalKind,
    SpectralSet,
    eigenvalues,
    interval_count,
    monodromy_order,
    suspension,
    thom_sebastiani,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "BoundProblem",
    "BoundReport",
    "IntervalKind",
    "LocalOrder",
    "OrderKind",
    "Poly",
    "SpectralSet",
    "VanishingBasis",
    "WeightVector",
    "ak_chain",
    "arnold_closed_form_3",
    "arnold_number",
    "bp_spectrum",
    "check_configuration",
    "classical_bounds",
    "detect_weights",
    "eigenvalues",
    "format_polynomial",
    "interval_count",
    "lct",
    "matrix_order",
    "max_copies",
    "milnor_number",
    "monodromy_order",
    "newton_polyhedron",
    "nondegenerate_spectrum",
    "parse_polynomial",
    "partials",
    "qh_spectrum",
    "spectrum_unit_part",
    "standard_basis",
    "support",
    "suspension",
    "thom_sebastiani",
    "total_monodromy",
]
