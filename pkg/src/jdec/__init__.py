"""Group algebra decompositions of Jacobians with a finite group action, in exact arithmetic."""

from .characters import CharacterTable, fixed_dim, galois_orbits, induced_table, validate_table
from .groups import FiniteGroup, Subgroup, all_subgroups, close_generators, riemann_hurwitz
from .idempotents import SymplecticRep, central_idempotent, f_H_i, image_lattice, p_H, rho
from .linalg import SubLattice, det_exact, hnf, lattice_index, saturate, snf
from .polarization import induced_form, polarization_type
from .search import assemble_L, build_pools, minimize_kernel

__version__ = "0.1.0"
