from .allocation import allocate_lemma4, allocate_lemma7, certificate_margin, project_to_simplex
from .gates import GateCheck, check_gate, enforce_gate, finite_dim_constant, k_constant_ceiling, weight_lemma_gate
from .rationalize import rationalize_lemma5
from .solver import allocate, default_r_cap, find_witness, plank_margins
from .types import Allocation, AllocationMethod, PlankInstance, PlankReport, Regime, WitnessOptions

__all__ = [
    'Regime',
    'AllocationMethod',
    'Allocation',
    'PlankInstance',
    'PlankReport',
    'WitnessOptions',
    'GateCheck',
    'check_gate',
    'enforce_gate',
    'weight_lemma_gate',
    'k_constant_ceiling',
    'finite_dim_constant',
    'allocate_lemma4',
    'allocate_lemma7',
    'certificate_margin',
    'project_to_simplex',
    'rationalize_lemma5',
    'allocate',
    'default_r_cap',
    'find_witness',
    'plank_margins',
]
