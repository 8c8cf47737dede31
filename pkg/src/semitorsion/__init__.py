"""Torsion in tensor products of monomial ideals over numerical semigroup rings."""
from .kernels import BACKEND
from .semigroup import Semigroup, enumerate_semigroups, is_symmetric, make_semigroup
from .sideal import (
    ERing,
    SIdeal,
    bidual,
    colon,
    dual,
    end_ring,
    enumerate_ideals,
    is_module_over,
    lemma21_report,
    make_ideal,
    product,
)
from .tensor import (
    TorsionProfile,
    graded_fiber_classes,
    is_torsion_free,
    lemma22_compare,
    torsion_profile,
)

__all__ = [
    "BACKEND",
    "ERing",
    "SIdeal",
    "Semigroup",
    "TorsionProfile",
    "bidual",
    "colon",
    "dual",
    "end_ring",
    "enumerate_ideals",
    "enumerate_semigroups",
    "graded_fiber_classes",
    "is_module_over",
    "is_symmetric",
    "is_torsion_free",
    "lemma21_report",
    "lemma22_compare",
    "make_ideal",
    "make_semigroup",
    "product",
    "torsion_profile",
]
