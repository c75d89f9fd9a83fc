from .graph import Graph, GraphError
from .generators import (
    FAMILY_TAGS,
    GraphFamily,
    ParameterError,
    complete,
    complete_multipartite,
    cycle,
    ds_hypercube,
    ds_icosahedron,
    gap_family,
    generate,
    hypercube,
    icosahedron,
    path,
    star,
)
from .products import PRODUCT_KINDS, double_subdivision, product, strong_power
from .metrics import Metrics, components, core_vertices, degeneracy, girth, is_bipartite, is_connected, is_tree, metrics
from .io import FIXTURES, ParseError, load_fixture, parse_edgelist, read_graph, serialize_edgelist, to_dot, write_graph
