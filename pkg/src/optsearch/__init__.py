from src.optsearch.clique import max_code_size, min_length_exhaustive
from src.optsearch.schemas import (
    FamilyEntry,
    FourWordClassification,
    GriesmerFamilyReport,
    SearchBudget,
    SearchQuery,
    SearchResult,
)
from src.optsearch.systematic import min_length_systematic
from src.optsearch.verify import (
    classify_optimal_four,
    verify_counterexample,
    verify_griesmer_family,
    verify_n4,
    verify_n8,
)
