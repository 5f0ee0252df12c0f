"""Exact Schur polynomials, cyclotomic character tables and symmetric-power bounds."""

from .bounds import BoundsRow, gl3_bounds, gl4_bounds, proposition_constants, sym_degree, threshold_scan
from .chartable import CharacterTable, load_character_table
from .cyclotomic import Cyclotomic, E
from .dixon import character_table
from .groups import build_group, conjugacy_classes, power_map
from .partitions import Partition, conjugate, contains, pieri_row
from .plethysm import (
    ClassFunction,
    Decomposition,
    adams,
    adjoint,
    adjoint_link_check,
    decompose,
    decompose_virtual,
    ext_power,
    inner_product,
    self_twists,
    sym_power,
    verify_character_identity,
)
from .polynomial import SparsePoly, divide_exact, is_symmetric
from .schur import (
    lr_coefficient,
    lr_expand,
    schur_poly,
    verify_gl3_adjoint_identity,
    verify_gl3_identity,
    verify_gl4_identity,
)

__version__ = "0.1.0"
