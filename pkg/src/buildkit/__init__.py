from src.buildkit.families import (
    build,
    counterexample_ck,
    dim3_optimal,
    levenshtein_code,
    punctured_counterexample,
    simplex,
    simplex_identity_columns,
    simplex_sequence,
)
from src.buildkit.hadamard import (
    HadamardMatrix,
    format_hadamard,
    hadamard_of_order,
    hadamard_order_supported,
    kronecker_hadamard,
    paley2_hadamard,
    paley_hadamard,
    parse_hadamard,
    sylvester_hadamard,
)
from src.buildkit.recipe import ConstructionRecipe
