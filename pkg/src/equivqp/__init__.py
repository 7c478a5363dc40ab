"""Equivariant characteristic quasi-polynomials of integer hyperplane arrangements.

The core engine counts, for each conjugacy class of a finite group acting
on ``Z^l``, the fixed points of the mod-q arrangement complement, and
returns them as exact quasi-polynomials in ``q``.
"""

from .arrangement import (
    Arrangement,
    ArrangementError,
    bruteforce_fixed_complement_count,
    characteristic_polynomial_whitney,
    check_invariance,
    lcm_period_nA,
    orbit_closure,
)
from .equivariant import (
    EquivariantQuasiPolynomial,
    NotInvariantError,
    decompose_equivariant,
    equivariant_characteristic_qpoly,
    period_N_tilde,
    period_n_Gamma,
)
from .group import (
    CharacterTable,
    ClassFunction,
    GaussianRational,
    MatrixGroup,
    decompose,
    generate_group,
    induce,
    inner_product,
    special_character,
)
from .kernels import BACKEND, InstanceTooLargeError
from .linalg import (
    IntMatrix,
    SmithDecomposition,
    elementary_divisors,
    integer_solve,
    kernel_count_mod_q,
    pi_periodic,
    smith_normal_form,
)
from .quasipoly import (
    Polynomial,
    QuasiPolynomial,
    combine,
    evaluate,
    fit_from_samples,
    has_gcd_property,
    minimal_period,
    reciprocity,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
