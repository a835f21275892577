"""Directional lexical intelligibility between related languages."""

from ._core import (
    ConfigError,
    LexintelError,
    ParseError,
    affinity_propagation,
    alpha_beta,
    check_bounds,
    contextual_similarity,
    cosine_similarity,
    dli,
    levenshtein,
    orthographic_similarity,
    permutation_p_value,
    phonetic_similarity,
    run,
    spearman,
    stem,
    strip_accents,
    t_approximation_p_value,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "LexintelError",
    "ParseError",
    "affinity_propagation",
    "alpha_beta",
    "check_bounds",
    "contextual_similarity",
    "cosine_similarity",
    "dli",
    "levenshtein",
    "orthographic_similarity",
    "permutation_p_value",
    "phonetic_similarity",
    "run",
    "spearman",
    "stem",
    "strip_accents",
    "t_approximation_p_value",
    "tokenize",
]
