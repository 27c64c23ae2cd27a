"""Enumeration of singular tropical hypersurfaces through points in
Mikhalkin position: graded circuits, their gluing, multiplicities, real
sign counts and the associated coefficient sequences."""

from .simplex import lattice_points, project_parallel, project_typeIV
from .symweights import SymWeight, WeightFunction, path_weights, sym_sign

__all__ = [
    "lattice_points",
    "project_parallel",
    "project_typeIV",
    "SymWeight",
    "WeightFunction",
    "path_weights",
    "sym_sign",
]
