"""Matrix evaluation of tangle words."""

from .engine import evaluate, local_map, propagate
from .kauffman import eval_word, generic_generator_matrix, kauffman_table
from .labeled import Coupon, LabeledTangle, eval_labeled, generator_map
from .matrix import SparseMatrix
from .relations import MOVES, RelationReport, check_labeled_relations, check_relations

__all__ = [
    "Coupon",
    "LabeledTangle",
    "MOVES",
    "RelationReport",
    "SparseMatrix",
    "check_labeled_relations",
    "check_relations",
    "eval_labeled",
    "eval_word",
    "evaluate",
    "generator_map",
    "generic_generator_matrix",
    "kauffman_table",
    "local_map",
    "propagate",
]
