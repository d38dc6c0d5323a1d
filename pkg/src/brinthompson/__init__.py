"""Exact computations in the Brin-Thompson groups nV and finite-S twisted SV_G."""

from .dyadic import (
    Pattern,
    Segment,
    common_refinement,
    common_segments,
    segments,
    split_block,
    validate_pattern,
)
from .dynamics import Stream, agree, apply, locate_block, parse_point, sample_points
from .element import (
    Element,
    compose,
    embed_V_into_nV,
    equals,
    expand_element,
    identity_element,
    invert,
    make_element,
    power,
    reduce,
)
from .docformat import parse_element, serialize_element
from .generate import random_element
from .growth import (
    GrowthProfile,
    StepCase,
    bs_relation_check,
    classify_step,
    is_root,
    monotone_growth_check,
    power_profile,
    root_search,
)
from .kernels import BACKEND
from .svg import render_svg
from .torsion import (
    FiniteGroup,
    TorsionCertificate,
    closure,
    make_identical_pair_element,
    order_up_to,
    same_V_witness,
    torsion_certificate,
)

__all__ = [
    "BACKEND",
    "Element",
    "FiniteGroup",
    "GrowthProfile",
    "Pattern",
    "Segment",
    "StepCase",
    "Stream",
    "TorsionCertificate",
    "agree",
    "apply",
    "bs_relation_check",
    "classify_step",
    "closure",
    "common_refinement",
    "common_segments",
    "compose",
    "embed_V_into_nV",
    "equals",
    "expand_element",
    "identity_element",
    "invert",
    "is_root",
    "locate_block",
    "make_element",
    "make_identical_pair_element",
    "monotone_growth_check",
    "order_up_to",
    "parse_element",
    "parse_point",
    "power",
    "power_profile",
    "random_element",
    "reduce",
    "render_svg",
    "root_search",
    "same_V_witness",
    "sample_points",
    "segments",
    "serialize_element",
    "split_block",
    "torsion_certificate",
    "validate_pattern",
]
