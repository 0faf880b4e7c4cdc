"""Crystal graphs, dual equivalence graphs and the zero-weight correspondence."""

from .crystal import CrystalGraph, build_crystal, character, e_op, f_op, highest_weights, string_stats
from .deg_axioms import check_deg
from .dualequiv import build_deg, d_op, ede, signature_of
from .graphs import ColoredDigraph, SignedColoredGraph
from .reports import AxiomReport, Witness
from .zeroweight import (
    PARITY,
    STANDARD,
    ZeroWeightOptions,
    build_g_of_x,
    identify,
    induced_d,
    induced_sigma,
    iso,
    verify_addcol,
    verify_main,
    zero_weight,
)
from .stembridge import check_regular
from .tableaux import Partition, Tableau, enumerate_ssyt, enumerate_syt, partitions_of, reading_word

__version__ = "0.1.0"
