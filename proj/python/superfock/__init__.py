"""Truncated Fock space operator algebra toolkit."""

from ._core import (
    PreconditionError,
    ResourceError,
    UsageError,
    annihilator,
    audit_relations,
    bebe_fock,
    canonical_phase,
    clifford_membership,
    creator,
    deformed_level,
    graded_carrier,
    group_generators,
    induce,
    jordan_wigner,
    klein,
    klein_fermion_audit,
    number_operator,
    osp_closure,
    pairing_check,
    pauli_matrix,
    pauli_mul,
    projective_orbit,
    run_report,
    spectrum,
    stabilizer_states,
    state_preset,
    supercharge,
    tower,
    wzqm_hamiltonian,
)

__version__ = "1.0.0"

__all__ = [
    "PreconditionError",
    "ResourceError",
    "UsageError",
    "annihilator",
    "audit_relations",
    "bebe_fock",
    "canonical_phase",
    "clifford_membership",
    "creator",
    "deformed_level",
    "graded_carrier",
    "group_generators",
    "induce",
    "jordan_wigner",
    "klein",
    "klein_fermion_audit",
    "number_operator",
    "osp_closure",
    "pairing_check",
    "pauli_matrix",
    "pauli_mul",
    "projective_orbit",
    "run_report",
    "spectrum",
    "stabilizer_states",
    "state_preset",
    "supercharge",
    "tower",
    "wzqm_hamiltonian",
]
