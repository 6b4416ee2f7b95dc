"""Shi arrangement regions, their parking-function labels, and the inverse map.

The package models regions of the Shi arrangement combinatorially as
valid pairs (a word plus an arc system), labels them with parking
functions, inverts the labeling by center-peeling and s-parking, checks
the bijection exhaustively, and bridges to geometry through exact
rational representative points.
"""

from .contraction import CenterDecomposition, center, contract, inversions, maxinv, s_park, s_park_steps
from .enumeration import (
    VerificationReport,
    enum_central_functions,
    enum_interval_sets,
    enum_parking_functions,
    enum_valid_pairs,
    enum_words,
    expected_region_count,
    verify_bijection,
)
from .errors import (
    AlreadyCentral,
    CloserOrder,
    DescentViolated,
    DuplicateLetter,
    Infeasible,
    InternalMismatch,
    MissingLetter,
    NotCentral,
    NotParking,
    OnHyperplane,
    OpenerOrder,
    OutOfRange,
    ShiparkError,
    UnknownLetter,
    ValueOutOfRange,
)
from .geometry import (
    ConstraintSystem,
    RationalPoint,
    constraint_system,
    label_geometric,
    pair_of_point,
    point_from_json,
    rational_point,
    representative_point,
)
from .inverse import PeelStep, invert, invert_steps, peel
from .labeling import OpenerTable, Label, label_direct, label_intervals, opener_table
from .model import (
    GroundSet,
    IntervalSet,
    ParkingFn,
    ValidPair,
    Word,
    is_central,
    is_parking,
    pair_from_json,
    pair_to_json,
    parking_from_json,
    parking_from_text,
    parking_to_json,
    validate_pair,
    validate_word,
    word_from_text,
)
from .render import render, render_pair_ascii, render_pair_svg, render_parking_ascii, render_parking_svg

__version__ = "0.1.0"

__all__ = [
    "AlreadyCentral",
    "CenterDecomposition",
    "CloserOrder",
    "ConstraintSystem",
    "DescentViolated",
    "DuplicateLetter",
    "GroundSet",
    "Infeasible",
    "InternalMismatch",
    "IntervalSet",
    "Label",
    "MissingLetter",
    "NotCentral",
    "NotParking",
    "OnHyperplane",
    "OpenerOrder",
    "OpenerTable",
    "OutOfRange",
    "ParkingFn",
    "PeelStep",
    "RationalPoint",
    "ShiparkError",
    "UnknownLetter",
    "ValidPair",
    "ValueOutOfRange",
    "VerificationReport",
    "Word",
    "center",
    "constraint_system",
    "contract",
    "enum_central_functions",
    "enum_interval_sets",
    "enum_parking_functions",
    "enum_valid_pairs",
    "enum_words",
    "expected_region_count",
    "invert",
    "invert_steps",
    "inversions",
    "is_central",
    "is_parking",
    "label_direct",
    "label_geometric",
    "label_intervals",
    "maxinv",
    "opener_table",
    "pair_from_json",
    "pair_of_point",
    "pair_to_json",
    "parking_from_json",
    "parking_from_text",
    "parking_to_json",
    "peel",
    "point_from_json",
    "rational_point",
    "render",
    "render_pair_ascii",
    "render_pair_svg",
    "render_parking_ascii",
    "render_parking_svg",
    "representative_point",
    "s_park",
    "s_park_steps",
    "validate_pair",
    "validate_word",
    "verify_bijection",
    "word_from_text",
]
