from src.boundtab.bounds import (
    bound_a,
    bound_b,
    bound_b_binary,
    bound_b_binary_max_k,
    bound_c,
    bound_c_size,
    critical_dimensions,
    decompose_d,
    elias_max_dim,
    griesmer,
    griesmer_increment,
    hamming_max_dim,
    johnson_max_dim,
    ls_sequence,
    n2_4,
    n2_8,
    plotkin_binary_max_size,
    plotkin_binary_min_length,
    plotkin_griesmer_coincides,
    plotkin_max_size,
    plotkin_min_length,
    singleton_min_length,
    ts_value,
)
from src.boundtab.identities import run_bound_b_suite, run_lemma_suite, run_n2_8_suite, run_plotkin_suite
from src.boundtab.report import griesmer_systematic_status, report
from src.boundtab.schemas import (
    BestValues,
    BoundEntry,
    BoundQuery,
    BoundReport,
    DistanceDecomposition,
    GriesmerStatus,
    VerificationReport,
)
