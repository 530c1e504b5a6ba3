"""Skew morphisms of cyclic groups."""

from ._core import (
    Census,
    CandidateReport,
    ComplexityProfile,
    ReductionTriple,
    SkewMorphism,
    SkewmorphError,
    automorphisms,
    build,
    complexity,
    derived,
    enumerate_all,
    is_skew,
    modulo,
    multiplicative_order,
    pgroup_skew,
    power_skew,
    prime_order_skew,
    reduction,
    restrict,
    star,
    totient,
)

__all__ = [
    "Census",
    "CandidateReport",
    "ComplexityProfile",
    "ReductionTriple",
    "SkewMorphism",
    "SkewmorphError",
    "automorphisms",
    "build",
    "complexity",
    "derived",
    "enumerate_all",
    "is_skew",
    "modulo",
    "multiplicative_order",
    "pgroup_skew",
    "power_skew",
    "prime_order_skew",
    "reduction",
    "restrict",
    "star",
    "totient",
]
