"""Newell-Littlewood numbers and extended Horn inequalities."""

from ._kernels import BACKEND
from .inequalities import (
    ExtHornInequality,
    HornTriple,
    InequalitySet,
    embed_subfamily,
    enumerate_extended,
    enumerate_variant,
    evaluate,
    extended_weyl,
    horn_triples,
    subset_sum,
)
from .lr import lr_coefficient, lr_positive, lr_positive_horn
from .nl import newell_littlewood, nl_positive, parity_ok
from .partitions import IndexSet, Partition, conjugate, tau

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ExtHornInequality",
    "HornTriple",
    "IndexSet",
    "InequalitySet",
    "Partition",
    "conjugate",
    "embed_subfamily",
    "enumerate_extended",
    "enumerate_variant",
    "evaluate",
    "extended_weyl",
    "horn_triples",
    "lr_coefficient",
    "lr_positive",
    "lr_positive_horn",
    "newell_littlewood",
    "nl_positive",
    "parity_ok",
    "subset_sum",
    "tau",
]
