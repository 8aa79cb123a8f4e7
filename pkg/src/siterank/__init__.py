"""Expert-weighted multi-criteria site suitability ranking."""

from .errors import InputError, SiteRankError, SolverError
from .fucom import (
    ComparativeChain,
    CrispWeights,
    FuzzyWeights,
    chain_from_priorities,
    chain_from_terms,
    check_consistency,
    defuzzify_weights,
    solve_ffucom,
    solve_fucom_crisp,
)
from .fuzzy import DEFAULT_SCALE, TFN, LinguisticScale, gmir, tfn, tfn_mul
from .matrix import DecisionMatrix, coerce_binary, load_sites, normalize
from .registry import CriterionSpec, Registry, default_registry, load_registry
from .surveys import ExpertSurvey, GlobalWeightTable, global_weights, parse_surveys, per_expert_weights
from .wsm import display_normalize, group_scores, rank, score, whatif

__all__ = [
    "ComparativeChain",
    "CriterionSpec",
    "CrispWeights",
    "DEFAULT_SCALE",
    "DecisionMatrix",
    "ExpertSurvey",
    "FuzzyWeights",
    "GlobalWeightTable",
    "InputError",
    "LinguisticScale",
    "Registry",
    "SiteRankError",
    "SolverError",
    "TFN",
    "chain_from_priorities",
    "chain_from_terms",
    "check_consistency",
    "coerce_binary",
    "default_registry",
    "defuzzify_weights",
    "display_normalize",
    "global_weights",
    "gmir",
    "group_scores",
    "load_registry",
    "load_sites",
    "normalize",
    "parse_surveys",
    "per_expert_weights",
    "rank",
    "score",
    "solve_ffucom",
    "solve_fucom_crisp",
    "tfn",
    "tfn_mul",
    "whatif",
]
