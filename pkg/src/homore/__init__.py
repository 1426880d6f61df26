"""Exact computation in hom-associative Ore extensions."""

from .catalog import (
    FamilySpec,
    endomorphism_classifier,
    make_enveloping,
    make_family,
    make_quantum_plane,
    make_weyl,
    regenerate,
    simplicity_reduce,
)
from .homcheck import (
    TwistTable,
    check_general_condition,
    check_hom_associativity,
    check_necessary_conditions,
    check_weak_unit,
)
from .maps import IDENTITY, ZERO, Derivation, Endo, d_dy, endo, pi
from .ore import PLAIN, STAR, OreContext, OrePoly, commutator, ore_mul, star_mul, twist_apply
from .parsing import ParseError, parse_ore_poly, serialize_ore_poly
from .polynomial import ZERO_DEGREE, Polynomial
from .report import Report
from .scalars import QQ, ZZ, IntModRing, ParamRing, characteristic
from .unitalization import UnitalizedElement, WeakUnitalization, beta_alpha, bullet_mul

__version__ = "0.1.0"
