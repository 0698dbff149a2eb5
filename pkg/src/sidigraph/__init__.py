"""Spectra, energy and products of signed directed graphs."""

from .charpoly import (
    CycleLengthError,
    EnumerationCapError,
    LinearTypeCensus,
    charpoly,
    charpoly_enumerate,
    charpoly_trace,
    charpoly_uniform_cycle_length,
    linear_type_census,
)
from .graph import (
    BasisError,
    GraphError,
    NepsBasis,
    ParseError,
    SignedDigraph,
    build_cycle,
    build_k2_double,
    build_path,
    build_pln,
    build_skew_symmetric,
    build_symmetric_double,
    cartesian_product,
    direct_sum,
    kronecker_product,
    neps,
    parse_sidigraph,
    serialize_sidigraph,
    strong_components,
    unsigned,
)
from .polynomial import IntPolynomial
from .spectra import (
    EnergyReport,
    ImaginaryAxisError,
    QuadratureError,
    Spectrum,
    coulson_energy,
    coulson_log_energy,
    energy,
    energy_value,
    is_cospectral,
    roots,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "CycleLengthError",
    "EnumerationCapError",
    "LinearTypeCensus",
    "charpoly",
    "charpoly_enumerate",
    "charpoly_trace",
    "charpoly_uniform_cycle_length",
    "linear_type_census",
    "BasisError",
    "GraphError",
    "NepsBasis",
    "ParseError",
    "SignedDigraph",
    "build_cycle",
    "build_k2_double",
    "build_path",
    "build_pln",
    "build_skew_symmetric",
    "build_symmetric_double",
    "cartesian_product",
    "direct_sum",
    "kronecker_product",
    "neps",
    "parse_sidigraph",
    "serialize_sidigraph",
    "strong_components",
    "unsigned",
    "IntPolynomial",
    "EnergyReport",
    "ImaginaryAxisError",
    "QuadratureError",
    "Spectrum",
    "coulson_energy",
    "coulson_log_energy",
    "energy",
    "energy_value",
    "is_cospectral",
    "roots",
    "spectrum",
]
