"""fockcat: exact computations with the deformed Heisenberg algebra, the
partition Fock space, symmetric-group characters and MacMahon's function.

The submodules are the public surface::

    series      Laurent polynomials in t^(1/2) and truncated q-series
    heisenberg  the p/q rewrite system and the boson a_n presentation
    symgrp      permutations, Young symmetrizers, characters, the map ch
    fock        Gamma operators on the partition Fock space
    planepart   plane partitions and their diagonal slices
    macmahon    Z(q) and Z(q,t) by several independent routes
    cli         the ``fockcat`` command
"""

from .expr import ParseError, parse_expression
from .heisenberg import AExpr, Generator, HExpr, normal_order, p, q, vacuum_expectation
from .macmahon import (
    compare_methods,
    z_deformed_commutation,
    z_deformed_product,
    z_pairs_oracle,
    z_product,
    z_refined_variant,
    z_transfer,
)
from .series import LaurentPoly, QSeries, quantum_int, series_geom_inverse, specialize_t

__version__ = "0.1.0"

__all__ = [
    "AExpr",
    "Generator",
    "HExpr",
    "LaurentPoly",
    "ParseError",
    "QSeries",
    "compare_methods",
    "normal_order",
    "p",
    "parse_expression",
    "q",
    "quantum_int",
    "series_geom_inverse",
    "specialize_t",
    "vacuum_expectation",
    "z_deformed_commutation",
    "z_deformed_product",
    "z_pairs_oracle",
    "z_product",
    "z_refined_variant",
    "z_transfer",
]
