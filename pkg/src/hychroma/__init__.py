"""Distance colorings of hypercube graphs built from error-correcting codes.

The package constructs colorings of the n-cube in which any two vertices
closer than a threshold (or at one exact distance) get different colors,
derives the colorings from binary linear codes and from quaternary codes
under the Gray map, evaluates upper and lower bounds on the number of
colors needed, and verifies every certificate exhaustively.
"""

from .bounds import (
    BoundReport,
    BoundValue,
    KTable,
    bound_table,
    builtin_k_table,
    chi_lower_packing,
    chi_prime_lower_packing,
    chi_upper_counting,
    chi_upper_direct_sum,
    chi_upper_doubling,
    parse_k_table_csv,
    quaternary_exact_values,
    render_bound_reports_csv,
    render_bound_reports_text,
    resolve_max_code_size,
)
from .errors import (
    ConstructionError,
    GuardError,
    HychromaError,
    IntegrityError,
    ParseError,
    UsageError,
)
from .forbidden import (
    ForbiddenLinearCode,
    code_from_parity,
    direct_sum,
    exact_k_d2,
    forbidden_code,
    forbidden_coset_partition,
    format_forbidden_code_file,
    greedy_forbidden_matrix,
    parse_forbidden_code_file,
    tail_full_space,
)
from .gf2 import (
    BinaryLinearCode,
    BinaryMatrix,
    BitVector,
    binary_code,
    codewords,
    enumerate_cosets,
    format_code_file,
    golay_23_12,
    hamming_7_4,
    hamming_distance,
    min_hamming_weight,
    named_code,
    parse_code_file,
)
from .partitions import (
    ColoringCertificate,
    ForbiddenDistance,
    HypercubePartition,
    MinDistanceAtLeast,
    coloring_to_partition,
    format_certificate,
    from_binary_linear,
    parity_coloring,
    parse_certificate,
    partition_to_coloring,
    product_partition,
    z4_coset_partition,
    z4_punctured_partition,
)
from .verify import (
    Counterexample,
    VerificationReport,
    exact_A_small,
    exact_chi_small,
    exact_Q_small,
    verify_coloring,
    verify_partition,
)
from .z4 import (
    Z4LinearCode,
    Z4Vector,
    gray_inverse,
    gray_map,
    kerdock_code,
    lee_distance,
    lee_weight,
    min_lee_weight,
    octacode,
    preparata_code,
    z4_code,
    z4_codewords,
    z4_dual,
)

__version__ = "1.0.0"

__all__ = [
    "BinaryLinearCode",
    "BinaryMatrix",
    "BitVector",
    "BoundReport",
    "BoundValue",
    "ColoringCertificate",
    "ConstructionError",
    "Counterexample",
    "ForbiddenDistance",
    "ForbiddenLinearCode",
    "GuardError",
    "HychromaError",
    "HypercubePartition",
    "IntegrityError",
    "KTable",
    "MinDistanceAtLeast",
    "ParseError",
    "UsageError",
    "VerificationReport",
    "Z4LinearCode",
    "Z4Vector",
    "binary_code",
    "bound_table",
    "builtin_k_table",
    "chi_lower_packing",
    "chi_prime_lower_packing",
    "chi_upper_counting",
    "chi_upper_direct_sum",
    "chi_upper_doubling",
    "code_from_parity",
    "codewords",
    "coloring_to_partition",
    "direct_sum",
    "enumerate_cosets",
    "exact_A_small",
    "exact_Q_small",
    "exact_chi_small",
    "exact_k_d2",
    "forbidden_code",
    "forbidden_coset_partition",
    "format_certificate",
    "format_code_file",
    "format_forbidden_code_file",
    "from_binary_linear",
    "golay_23_12",
    "gray_inverse",
    "gray_map",
    "greedy_forbidden_matrix",
    "hamming_7_4",
    "hamming_distance",
    "kerdock_code",
    "lee_distance",
    "lee_weight",
    "min_hamming_weight",
    "min_lee_weight",
    "named_code",
    "octacode",
    "parity_coloring",
    "parse_certificate",
    "parse_code_file",
    "parse_forbidden_code_file",
    "parse_k_table_csv",
    "partition_to_coloring",
    "preparata_code",
    "product_partition",
    "quaternary_exact_values",
    "render_bound_reports_csv",
    "render_bound_reports_text",
    "resolve_max_code_size",
    "verify_coloring",
    "verify_partition",
    "z4_code",
    "z4_codewords",
    "z4_coset_partition",
    "z4_dual",
    "z4_punctured_partition",
]
