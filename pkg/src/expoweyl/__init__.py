"""Exact symbolic computation in expolynomial rings, their Weyl-type Ore
extensions (with q-deformation) and Witt-type Lie algebras."""

from .config import Session, SessionConfig, load_config, parse_config_text
from .expolyring import ExpoMonomial, ExpoPoly, ExpoRing, Variant
from .lattice import LatticeBasis
from .parser import parse, parse_element, parse_scalar
from .printer import print_canonical
from .scalars import AlgebraicSymbol, Scalar, ScalarField, quadratic_symbol
from .weylalg import DeformationConfig, WeylAlgebra, WeylElement
from .wittalg import WittElement

__all__ = [
    "AlgebraicSymbol",
    "DeformationConfig",
    "ExpoMonomial",
    "ExpoPoly",
    "ExpoRing",
    "LatticeBasis",
    "Scalar",
    "ScalarField",
    "Session",
    "SessionConfig",
    "Variant",
    "WeylAlgebra",
    "WeylElement",
    "WittElement",
    "load_config",
    "parse",
    "parse_config_text",
    "parse_element",
    "parse_scalar",
    "print_canonical",
    "quadratic_symbol",
]

__version__ = "0.1.0"
