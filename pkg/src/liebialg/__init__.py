"""Exact computations with Chevalley bases, Lagrangian subalgebras of g + g,
and coisotropic subalgebras of the standard Lie bialgebra structure."""

from .bialgebra import (Double, LagrangianCandidate, build_double, build_l, build_s, build_z,
                        extract_coisotropic, is_coisotropic, rank_pi, rank_pi_general)
from .chevalley import ChevalleyAlgebra, LieElement, build_algebra
from .linalg import Matrix, Subspace
from .rootsys import CartanType, RootSystem, build_root_system
from .weyl import WeylElement, WeylGroup, enumerate_group
from .zambon import Bivector, standard_pi, zambon_as_l, zambon_subalgebra

__version__ = "0.1.0"

__all__ = [
    "Bivector", "CartanType", "ChevalleyAlgebra", "Double", "LagrangianCandidate", "LieElement",
    "Matrix", "RootSystem", "Subspace", "WeylElement", "WeylGroup", "build_algebra",
    "build_double", "build_l", "build_root_system", "build_s", "build_z", "enumerate_group",
    "extract_coisotropic", "is_coisotropic", "rank_pi", "rank_pi_general", "standard_pi",
    "zambon_as_l", "zambon_subalgebra",
]
