"""Recognition and linear-time realization of 2-tree degree sequences."""

from .degseq import DegreeSequence, SequenceError, format_sequence, parse_sequence
from .graph import (
    EarTrace,
    GraphError,
    SimpleGraph,
    TwoTreeCheck,
    attach_ear,
    check_two_tree,
    cone,
    degree_sequence,
    ear_adjacency_witness,
    format_edge_list,
    is_two_tree,
    parse_edge_list,
    to_dot,
    triangle,
)
from .recognizer import RecognitionVerdict, recognize, recognize_tree
from .tree_realizer import (
    MarkedGraph,
    Realization,
    TreeRealizationError,
    realize_tree,
    realize_with_dominating,
)
from .realizer import (
    InvariantError,
    NotRealizableError,
    SequenceClass,
    random_two_tree,
    realize,
)

__version__ = "0.1.0"
