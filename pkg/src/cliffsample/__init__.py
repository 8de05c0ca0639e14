"""Uniform sampling of Clifford operators as streamed H/S/CX/Pauli circuits."""

from .circuit import (
    Circuit,
    GateBuffer,
    Segment,
    adjoint,
    circuit_from_pairs,
    depth,
    depth_bound,
    gate_count_bound,
    sample_clifford,
    stream_clifford,
)
from .formats import CircuitWriter, parse, parse_one, serialize
from .gates import Gate, decode_gate, encode_gate
from .pairs import sample_anticommuting_pair, sample_pauli
from .rng import RngStream, derive_seed
from .simulate import canonical_key, dense_oracle_check, simulate
from .sweep import clear_z_block, cx_reduction_tree, move_to_front, sweep
from .tableau import (
    CliffordTableau,
    PauliRow,
    PauliTableau,
    UsageError,
    WorkTableau,
    anticommutes,
    apply_cx,
    apply_gate,
    apply_h,
    apply_pauli_gate,
    apply_s,
    apply_sdg,
)

__all__ = [
    "adjoint",
    "anticommutes",
    "apply_cx",
    "apply_gate",
    "apply_h",
    "apply_pauli_gate",
    "apply_s",
    "apply_sdg",
    "canonical_key",
    "Circuit",
    "circuit_from_pairs",
    "CircuitWriter",
    "clear_z_block",
    "CliffordTableau",
    "cx_reduction_tree",
    "decode_gate",
    "dense_oracle_check",
    "depth",
    "depth_bound",
    "derive_seed",
    "encode_gate",
    "Gate",
    "gate_count_bound",
    "GateBuffer",
    "move_to_front",
    "parse",
    "parse_one",
    "PauliRow",
    "PauliTableau",
    "RngStream",
    "sample_anticommuting_pair",
    "sample_clifford",
    "sample_pauli",
    "Segment",
    "serialize",
    "simulate",
    "stream_clifford",
    "sweep",
    "UsageError",
    "WorkTableau",
]

__version__ = "0.1.0"
