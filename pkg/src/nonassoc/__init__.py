"""Exact quantification of how nonassociative a (-) b = -a - b is.

Parenthesizations of x0 (-) x1 (-) ... (-) xn correspond to full binary
trees, and each evaluates to a signed sum whose signs follow the leaf-depth
parities. This package counts the distinct results by brute force and by
closed formulas (exact integers throughout), realizes the bijection with
admissible binary sequences, and generalizes the count to other linear
root-of-unity operations.
"""

from .admissible import (
    ADMISSIBLE_SCAN_CAP,
    admissible_to_tree,
    contract,
    enumerate_admissible,
    is_admissible,
)
from .double_minus import (
    A000975_METHODS,
    a000975,
    count_distinct_bruteforce,
    count_formula,
    count_table,
    refined_count_formula,
    refined_counts_bruteforce,
    sign_parity,
    table_to_csv,
    table_to_json,
    table_to_markdown,
)
from .generic_op import (
    DOUBLE_MINUS,
    LinearOp,
    coeff_vector,
    count_distinct_generic,
    nonassociativity_depth,
)
from .series_tools import (
    EisensteinInt,
    average_leaf_depth,
    cprime,
    gf_bivariate_table,
    gf_coeffs,
    skipping_sum_closed,
    skipping_sum_direct,
)
from .tree_core import (
    DEFAULT_ENUM_CAP,
    EnumerationCapError,
    Tree,
    catalan,
    decode_bits,
    depth_sequence,
    encode_bits,
    enumerate_trees,
    leaf,
    leaf_count,
    render_expression,
    wedge,
)

__version__ = "0.1.0"

__all__ = [
    "ADMISSIBLE_SCAN_CAP",
    "A000975_METHODS",
    "DEFAULT_ENUM_CAP",
    "DOUBLE_MINUS",
    "EisensteinInt",
    "EnumerationCapError",
    "LinearOp",
    "Tree",
    "a000975",
    "admissible_to_tree",
    "average_leaf_depth",
    "catalan",
    "coeff_vector",
    "contract",
    "count_distinct_bruteforce",
    "count_distinct_generic",
    "count_formula",
    "count_table",
    "cprime",
    "decode_bits",
    "depth_sequence",
    "encode_bits",
    "enumerate_admissible",
    "enumerate_trees",
    "gf_bivariate_table",
    "gf_coeffs",
    "is_admissible",
    "leaf",
    "leaf_count",
    "nonassociativity_depth",
    "refined_count_formula",
    "refined_counts_bruteforce",
    "render_expression",
    "sign_parity",
    "skipping_sum_closed",
    "skipping_sum_direct",
    "table_to_csv",
    "table_to_json",
    "table_to_markdown",
    "wedge",
]
