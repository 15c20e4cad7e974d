"""Exact Bayesian inference for variable-length Markov chains.

Sequences are character strings over a declared alphabet; trees are lists of
leaf contexts written oldest symbol first ("λ" is the root-only tree).
"""

from ._core import (
    GENERATOR_ID,
    BctIoError,
    BctValidationError,
    __version__,
    bayes_factor,
    count_trees,
    evidence,
    map_tree,
    max_over_trees,
    model_tree,
    posterior_prob,
    prior_prob,
    select_depth,
    select_model,
    simulate,
    structural_distance,
    sum_over_trees,
)

__all__ = [
    "GENERATOR_ID",
    "BctIoError",
    "BctValidationError",
    "__version__",
    "bayes_factor",
    "count_trees",
    "evidence",
    "map_tree",
    "max_over_trees",
    "model_tree",
    "posterior_prob",
    "prior_prob",
    "select_depth",
    "select_model",
    "simulate",
    "structural_distance",
    "sum_over_trees",
]
