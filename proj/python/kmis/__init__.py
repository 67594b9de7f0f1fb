"""Maximal independent sets of k-mers under edit distance."""

from ._core import (
    CapacityError,
    InputError,
    Mis,
    ParameterError,
    brute_oracle,
    compute,
    decode,
    edit_distance,
    encode,
    graph_distance,
    mapping,
    read_mis,
    select_algorithm,
    verify,
    within,
    write_mis,
)

__all__ = [
    "CapacityError",
    "InputError",
    "Mis",
    "ParameterError",
    "brute_oracle",
    "compute",
    "decode",
    "edit_distance",
    "encode",
    "graph_distance",
    "mapping",
    "read_mis",
    "select_algorithm",
    "verify",
    "within",
    "write_mis",
]
