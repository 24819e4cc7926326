from .collisions import Collision, polish_pair, univalence_falsify
from .grid import DiskGrid, scan_extremum
from .membership import ClassSpec, MembershipReport, kaplan_profile, membership_margin, membership_value
from .norms import NormEstimate, RadialLimit, norm_estimate, radial_norm_limit
from .predicates import (
    alexander_spiral_readings,
    alexander_spiral_univalent,
    royster_segment_univalent,
    royster_univalent,
    set_membership,
)

__all__ = [
    "ClassSpec",
    "Collision",
    "DiskGrid",
    "MembershipReport",
    "NormEstimate",
    "RadialLimit",
    "alexander_spiral_readings",
    "alexander_spiral_univalent",
    "kaplan_profile",
    "membership_margin",
    "membership_value",
    "norm_estimate",
    "polish_pair",
    "radial_norm_limit",
    "royster_segment_univalent",
    "royster_univalent",
    "scan_extremum",
    "set_membership",
    "univalence_falsify",
]
