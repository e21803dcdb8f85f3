"""Combinatorics of restricted p-strict partitions and branching bounds for
spin representations of symmetric groups."""
from .branching import (
    FactorBound,
    JsClass,
    d_lower,
    dim_lower_bound,
    four_cases,
    guaranteed_depth,
    guaranteed_restriction,
    js_class,
)
from .charzero import main_theorem_check_char0, min_large_dim, schur_dim, super_dim
from .crystal import (
    cartan,
    crystal_graph,
    e_tilde,
    epsilon,
    f_tilde,
    reduced_signature,
    signature,
    stembridge_check,
)
from .labels import DimRecord, alpha_label, beta_label, delta_labels, dims, gamma_label
from .partitions import (
    Char,
    Partition,
    a_parity,
    block_content,
    content_of_column,
    enumerate_rpp,
    is_p_strict,
    is_restricted,
    p_prime_height,
)
from .report import VerifyReport
from .verify import list_lemmas, verify

__version__ = "0.1.0"
