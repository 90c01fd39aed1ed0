from src.codekit.code import (
    Code,
    GeneratorMatrix,
    analyze,
    distance_range,
    find_information_set,
    hamming_distance,
    is_equidistant,
    is_linear,
    linear_span,
    min_distance,
    weight,
)
from src.codekit.codefile import format_code, parse_code, read_code, write_code
from src.codekit.equivalence import are_equivalent, canonical_form
from src.codekit.schemas import CodeAnalysis, CodeParams
from src.codekit.transforms import extend_parity, pad_zeros, puncture, reduce_distance, repeat, shorten, translate

__all__ = [
    "Code",
    "CodeAnalysis",
    "CodeParams",
    "GeneratorMatrix",
    "analyze",
    "are_equivalent",
    "canonical_form",
    "distance_range",
    "extend_parity",
    "find_information_set",
    "format_code",
    "hamming_distance",
    "is_equidistant",
    "is_linear",
    "linear_span",
    "min_distance",
    "pad_zeros",
    "parse_code",
    "puncture",
    "read_code",
    "reduce_distance",
    "repeat",
    "shorten",
    "translate",
    "weight",
    "write_code",
]
