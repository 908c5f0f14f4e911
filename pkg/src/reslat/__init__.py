"""Workbench for computing with finite residuated lattices."""

from .core import (
    LatticeError,
    ParseError,
    ResiduatedLattice,
    SizeLimit,
    ValidationFailure,
    ValidationReport,
    direct_product,
    load_lattice,
    parse_lattice_text,
    validate,
)

__all__ = [
    "LatticeError",
    "ParseError",
    "ResiduatedLattice",
    "SizeLimit",
    "ValidationFailure",
    "ValidationReport",
    "direct_product",
    "load_lattice",
    "parse_lattice_text",
    "validate",
]

__version__ = "0.1.0"
