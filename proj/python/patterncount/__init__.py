"""Exact permutation pattern counting."""

import json as _json

from ._patterncount import (
    NotApplicableError,
    PatternCountError,
    naive_pattern_count,
    rank,
)
from ._patterncount import count as _count
from ._patterncount import pattern_vector as _pattern_vector

__all__ = [
    "NotApplicableError",
    "PatternCountError",
    "count",
    "naive_pattern_count",
    "pattern_vector",
    "rank",
]


def _tree_text(tree):
    return tree if isinstance(tree, str) else _json.dumps(tree)


def count(perm, tree, algorithm="auto", block_size=None, bigint=False):
    """Occurrences of a tree (dict or JSON text) in a one-line permutation."""
    return _count(list(perm), _tree_text(tree), algorithm, block_size, bigint)


def pattern_vector(tree):
    """Pattern vector of a tree (dict or JSON text) as {permutation tuple: coefficient}."""
    return _pattern_vector(_tree_text(tree))
