"""The three similarity models over statement sequences."""

from .dice import dice_from_counts, query_term_counts, sim_dice
from .dsrm import CONSUMED, DerivedPattern, ModelScore, count_pass, negation_masks, pass_count, sim_dsrm, sqc_comb
from .vsm import TfIdfModel, UnknownTermError, cosine, idf, sim_vsm, weight

__all__ = [
    "CONSUMED",
    "DerivedPattern",
    "ModelScore",
    "TfIdfModel",
    "UnknownTermError",
    "cosine",
    "count_pass",
    "dice_from_counts",
    "idf",
    "negation_masks",
    "pass_count",
    "query_term_counts",
    "sim_dice",
    "sim_dsrm",
    "sim_vsm",
    "sqc_comb",
    "weight",
]
