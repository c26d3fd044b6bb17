from caystir.perms.classes import (
    canonical_representative,
    enumerate_class,
    materialize_class,
    random_of_type,
    representative,
)
from caystir.perms.cycle_type import CycleType, Parity, class_size, partitions_of
from caystir.perms.notation import (
    format_one_line,
    format_permutation,
    parse_cycle_type,
    parse_permutation,
)
from caystir.perms.permutation import (
    Permutation,
    compose,
    conjugate,
    cycle_count,
    cycle_decomposition,
    cycle_type,
    delete,
    embed,
    identity,
    ins,
    inverse,
    is_k_transposition,
    left_mul,
    parity,
    right_mul,
    support_size,
    transposition,
)

__all__ = [
    "CycleType",
    "Parity",
    "Permutation",
    "canonical_representative",
    "class_size",
    "compose",
    "conjugate",
    "cycle_count",
    "cycle_decomposition",
    "cycle_type",
    "delete",
    "embed",
    "enumerate_class",
    "format_one_line",
    "format_permutation",
    "identity",
    "ins",
    "inverse",
    "is_k_transposition",
    "left_mul",
    "materialize_class",
    "parity",
    "parse_cycle_type",
    "parse_permutation",
    "partitions_of",
    "random_of_type",
    "representative",
    "right_mul",
    "support_size",
    "transposition",
]
