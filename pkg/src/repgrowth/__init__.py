"""Certified counting of small-dimensional irreducible representations.

Subpackages split along the arithmetic involved: exact root-system and
weight-orbit combinatorics (rootdata, dominance, witness), interval
certification (intervals), count envelopes per family (bounds), and the
partition / symmetric-group side (partitions).
"""

from .bounds import BoundReport, n_lambda, premet_lower, rn_upper
from .dominance import HypothesisError, WitnessChain
from .intervals import Certificate, certify_less
from .rootdata import RootDatum, root_datum

__all__ = [
    "BoundReport",
    "Certificate",
    "HypothesisError",
    "RootDatum",
    "WitnessChain",
    "certify_less",
    "n_lambda",
    "premet_lower",
    "rn_upper",
    "root_datum",
]
