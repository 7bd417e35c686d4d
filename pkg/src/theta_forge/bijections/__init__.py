"""Explicit injections and involutions, with exhaustive verification."""
from .injections import (
    b1_witness,
    audit_phi1,
    audit_phi2,
    b2_witness,
    branches,
    image_condition,
    in_b1,
    in_b2,
    in_y,
    phi1,
    phi1_inverse,
    phi2,
    phi2_inverse,
    residual_set,
    y_set,
)
from .involution import ColoredPair, a_set, in_a, is_survivor, survivor_census, tgen_involution
from .pairs import F, FixedPoint, MapTrace, PartitionPair, move_largest, qp_set
from .verify import verify_map

__all__ = [name for name in dir() if not name.startswith("_")]
