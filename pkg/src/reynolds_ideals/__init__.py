"""Generalized Reynolds ideals of symmetric algebras over prime fields.

Computes, for finite-dimensional symmetric algebras given by structure
constants over GF(p), the descending chain of generalized Reynolds
ideals of the center together with the radical filtrations of the
associated quotient rings, and packages them as canonical fingerprints
whose inequality certifies that two algebras are not derived
equivalent.  Ships generators for the tame dihedral and semidihedral
quiver-algebra families with two simple modules.
"""

from .core import (
    Algebra,
    BilinearForm,
    algebra_from_json,
    algebra_to_json,
    cartan_matrix,
    center,
    commutator_space,
    radical,
    socle,
    symmetrizing_form,
    validate,
)
from .errors import InvariantViolation
from .families import (
    FamilyParams,
    PathWord,
    RewriteRule,
    build_family,
    dihedral_algebra,
    expected_t1_dim,
    reduce_path,
    sd1_algebra,
    sd2_algebra,
)
from .linalg import (
    FieldSpec,
    Subspace,
    intersect,
    kernel,
    orthogonal_complement,
    preimage,
    rref,
    subspace_sum,
)
from .oracle import OracleLimit, enumerate_center, enumerate_socle, enumerate_t1, oracle_check
from .reynolds import (
    CommutativeAlgebra,
    Fingerprint,
    PowerMap,
    ReynoldsReport,
    analyze,
    compare,
    fingerprint,
    power_map,
    quotient_ring,
    radical_filtration,
    reynolds_ideal,
    t_space,
)

__version__ = "0.1.0"
