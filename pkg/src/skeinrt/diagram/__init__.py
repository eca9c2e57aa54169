"""Link diagrams: braids, planar diagrams, tangle words and surgery presentations."""

from .braid import BraidWord, parse_braid
from .errors import DiagramParseError, DiagramValidationError
from .ops import add_kink, disjoint_union, linking_numbers, mirror, remove_kink, signature, writhe
from .pd import LinkDiagram, braid_closure, parse_diagram, parse_pd
from .surgery import SurgeryPresentation, linking_matrix, parse_surgery, stabilize
from .tangle import Gen, Strand, TangleWord, infer_levels, parse_tangle, to_tangle_word

__all__ = [
    "Gen",
    "Strand",
    "SurgeryPresentation",
    "TangleWord",
    "infer_levels",
    "linking_matrix",
    "parse_surgery",
    "parse_tangle",
    "stabilize",
    "to_tangle_word",
    "BraidWord",
    "DiagramParseError",
    "DiagramValidationError",
    "LinkDiagram",
    "add_kink",
    "braid_closure",
    "disjoint_union",
    "linking_numbers",
    "mirror",
    "parse_braid",
    "parse_diagram",
    "parse_pd",
    "remove_kink",
    "signature",
    "writhe",
]
