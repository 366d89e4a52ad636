"""Edge elimination polynomial and its equivalent graph polynomials, computed exactly."""

from .graphcore import Graph
from .invariants import (
    eep_recurrence,
    potts_recurrence,
    potts_subset,
    scomp_subset,
    scp_induced,
    scp_recurrence,
    scp_subset,
    tcp_coloring_oracle,
    tcp_expansion,
    tcp_recurrence,
)
from .polylib import Polynomial, Var, parse_polynomial, to_canonical_text

__version__ = "0.1.0"
