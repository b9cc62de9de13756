"""Dehn twist conjugacy on the three-punctured disk via Dynnikov coordinates."""

import json

from ._core import (
    InvalidInput,
    ResourceLimit,
    apply_twist,
    apply_word,
    classify,
    classify_json,
    conjugation_length,
    curve_kind,
    ecf,
    is_essential,
    phi,
    phi_inverse,
    twists_conjugate,
    untwist,
)


def classify_record(a, b):
    """The same record `d3twist classify A B --json` prints, as a dict."""
    return json.loads(classify_json(a, b))


__all__ = [
    "InvalidInput",
    "ResourceLimit",
    "apply_twist",
    "apply_word",
    "classify",
    "classify_record",
    "conjugation_length",
    "curve_kind",
    "ecf",
    "is_essential",
    "phi",
    "phi_inverse",
    "twists_conjugate",
    "untwist",
]
