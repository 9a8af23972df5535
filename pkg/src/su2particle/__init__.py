"""Free particle on SU(2): exact polynomial algebra, spectra, Haar integrals,
classical geodesics and reduction to the sphere.

Exact work is done over Gaussian rationals in the coordinate ring
``C[u11, u12, u21, u22] / (det - 1)``; floating work (flows, quadrature) runs
through compiled kernels when available and a NumPy fallback otherwise.
"""
from __future__ import annotations

__version__ = "0.1.0"

from . import _kernels
from .audit import convention_audit
from .core import (AlgebraElement, Classification, GroupPoint, Matrix2, Membership,
                   basis_element, exp_su2, levi_civita, normalized_trace, validate_group_point)
from .coset import (constraint_filter, gauge_field, gauge_invariant_coords, harmonic_matches,
                    reduced_trajectory, rewrite_in_sphere_coords, spherical_harmonic_match)
from .dynamics import (Method, Trajectory, conservation_report, geodesic_exact, integrate,
                       noether_charges, poisson_structure_check)
from .haar import (gram_matrix, hermiticity_check, inner_product, monomial_integral,
                   quadrature_oracle)
from .haar import integrate as haar_integral
from .operators import (casimir, hamiltonian, ladder, quantum_L, quantum_R, verify_identity)
from .rational import ComplexRational
from .ring import GroupPolynomial, evaluate, normalize, star
from .spectra import (Eigenfunction, SpinLabel, build_eigenfunction, build_multiplet,
                      multiplet_independence_check, seed_function, spectrum_table)

__all__ = [
    "AlgebraElement", "Classification", "ComplexRational", "Eigenfunction", "GroupPoint",
    "GroupPolynomial", "Matrix2", "Membership", "Method", "SpinLabel", "Trajectory",
    "basis_element", "build_eigenfunction", "build_multiplet", "casimir", "conservation_report",
    "constraint_filter", "convention_audit", "evaluate", "exp_su2", "gauge_field",
    "gauge_invariant_coords", "geodesic_exact", "gram_matrix", "haar_integral", "hamiltonian",
    "harmonic_matches", "hermiticity_check", "inner_product", "integrate", "ladder",
    "levi_civita", "monomial_integral", "multiplet_independence_check", "noether_charges",
    "normalize", "normalized_trace", "poisson_structure_check", "quadrature_oracle",
    "quantum_L", "quantum_R", "reduced_trajectory", "rewrite_in_sphere_coords", "seed_function",
    "spectrum_table", "spherical_harmonic_match", "star", "validate_group_point",
    "verify_identity",
]
