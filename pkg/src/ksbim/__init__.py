"""Exact computations with K-theory Soergel bimodules."""

from .errors import KSBimError
from .laurent import LaurentPoly, exact_divide, is_invariant, monomial, specialize, weyl_act_poly
from .root_datum import (
    RootDatum,
    WeylElement,
    build_root_datum,
    cell_characters,
    dot_act,
    simple_reflect,
    weyl_act,
    weyl_group,
)

__version__ = "0.1.0"
