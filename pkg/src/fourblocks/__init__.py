"""Certifying 18k-coloring engine for digraphs without C(k,1,1,1)-subdivisions."""

from .coloring import (Coloring, NoSpanningOutTree, ProperColoring, Witness, certify,
                       validate_certificate)
from .decomposition import ArcClass, decompose
from .digraph import Digraph, build_digraph, find_spanning_root, induced_subdigraph
from .errors import (ContractViolation, DigraphError, FormatError, FourBlocksError,
                     HypothesisFailure, SizeCapExceeded)
from .outtree import OutTree, grow_out_tree, maximal_out_tree, maximalize

__version__ = "0.1.0"

__all__ = [
    "ArcClass", "Coloring", "ContractViolation", "Digraph", "DigraphError", "FormatError",
    "FourBlocksError", "HypothesisFailure", "NoSpanningOutTree", "OutTree", "ProperColoring",
    "SizeCapExceeded", "Witness", "build_digraph", "certify", "decompose", "find_spanning_root",
    "grow_out_tree", "induced_subdigraph", "maximal_out_tree", "maximalize",
    "validate_certificate",
]
