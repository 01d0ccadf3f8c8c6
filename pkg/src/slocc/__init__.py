"""SLOCC invariants, semi-invariants and class signatures of multi-qubit
pure states.

Basis convention: qubit A is the most significant bit, so |0001> is index
1 and a local operation acts as alpha (x) beta (x) gamma (x) delta.
"""
from .catalog import (
    DEGENERATE_CLASSES,
    TRUE_CLASSES,
    class_properties,
    conjecture_state,
    degenerate_state,
    family_state,
    representative,
)
from .classifier import (
    certify_true_entanglement,
    distinguish_states,
    match_classes,
    signature,
)
from .counting import ClassCount, degenerate_count, partitions
from .exact import GaussianRational
from .invariants import (
    InvariantVector,
    d_components,
    f_aggregate,
    f_components,
    invariant_vector,
    iv,
)
from .ket import KetSyntaxError, format_state, parse, parse_file
from .nqubit import enumerate_quadruples, f_n, ghz_n, w_n
from .state import (
    LocalOperation,
    LocalOperator,
    PureState,
    apply_local,
    make_state,
    normalize,
    permute_qubits,
    random_invertible,
)

__version__ = "0.1.0"

__all__ = [
    "ClassCount", "DEGENERATE_CLASSES", "GaussianRational", "InvariantVector", "KetSyntaxError",
    "LocalOperation", "LocalOperator", "PureState", "TRUE_CLASSES", "apply_local",
    "certify_true_entanglement", "class_properties", "conjecture_state", "d_components",
    "degenerate_count", "degenerate_state", "distinguish_states", "enumerate_quadruples", "f_aggregate",
    "f_components", "f_n", "family_state", "format_state", "ghz_n", "invariant_vector", "iv",
    "make_state", "match_classes", "normalize", "parse", "parse_file", "partitions", "permute_qubits",
    "random_invertible", "representative", "signature", "w_n",
]
