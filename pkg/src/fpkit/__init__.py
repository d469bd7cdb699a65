"""Exact computation with normal closures of factor subgroups in free
products of finite groups."""

from .groups import FiniteGroup, QuotientGroup, SubgroupData, build_quotient, cyclic, is_normal, symmetric, validate_group
from .kurosh import DecompositionReport, decompose, verify_free_factor, verify_theorem
from .quotient import ProjectionMap, QuotientSpec, build_projection, in_normal_closure, project
from .words import FactorFamily, Letter, ReducedWord, embed, invert, multiply, omega, reduce, retract

__version__ = "0.1.0"
