"""Zagreb index tools for linear k-uniform hypergraphs.

Construction of the dumbbell and theta bicyclic families, exact closed
forms for their extremal Zagreb indices, isomorph-free enumeration of small
linear hypergraphs, and a harness that checks the closed forms against
exhaustive search.
"""

from .canonical import are_isomorphic, canonical_code, canonical_form
from .constructors import (
    FamilySpec,
    b_base,
    c_base,
    extremal_b,
    extremal_c,
    family_member,
    global_max,
    hypercycle,
    hyperpath,
    min_bicyclic,
)
from .enumeration import enumerate_linear, extremal_scan
from .hypergraph import (
    BICYCLIC,
    HYPERTREE,
    UNICYCLIC,
    Hypergraph,
    StructureClass,
    degree_stats,
    from_edges,
    girth,
    is_connected,
    is_linear,
    structure_class,
    uniformity,
    zagreb_index,
)
from .transforms import MoveSpec, classify_bicyclic, move_edges, strip_pendant_edges

__version__ = "0.1.0"
