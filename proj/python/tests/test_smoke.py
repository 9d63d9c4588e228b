import json
import math
import os
from pathlib import Path

import pytest

import patterncount as pc

DATA = Path(os.environ.get("PATTERNCOUNT_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


def test_general_example():
    assert pc.count([2, 3, 1, 5, 4, 6], load("corner_tree_se_ne_nw.json")) == 13


def test_block_example():
    for m in (None, 1, 2, 5):
        assert pc.count([4, 3, 2, 1, 5], load("bare_3214.json"), algorithm="block", block_size=m) == 4


def test_algorithms_agree():
    tree = load("corner_tree_se_ne_nw.json")
    perm = [5, 1, 7, 3, 2, 8, 6, 4]
    counts = {a: pc.count(perm, tree, algorithm=a) for a in ("general", "naive", "stream")}
    assert len(set(counts.values())) == 1
    assert pc.count(perm, json.dumps(tree), bigint=True) == counts["general"]


def test_big_counts_are_python_ints():
    chain = {
        "type": "corner_tree",
        "nodes": [str(i) for i in range(30)],
        "root": "0",
        "edges": [[str(i - 1), str(i), "SW"] for i in range(1, 30)],
    }
    perm = list(range(1, 101))
    with pytest.raises(pc.PatternCountError):
        pc.count(perm, chain)
    assert pc.count(perm, chain, bigint=True) == math.comb(100, 30)


def test_naive_pattern_count():
    assert pc.naive_pattern_count([3, 4, 2, 5, 1], [1, 2]) == 4
    assert pc.naive_pattern_count([1, 2, 3], []) == 1


def test_pattern_vector():
    assert pc.pattern_vector(load("cherry_ne.json")) == {(1, 2): 1, (1, 2, 3): 2, (1, 3, 2): 2}
    assert pc.pattern_vector(load("arbo_ne_1.json")) == {
        (1, 4, 3, 2, 5): 1,
        (2, 4, 3, 1, 5): 1,
        (3, 4, 2, 1, 5): 1,
    }


def test_rank_small_levels():
    assert pc.rank(2)["dim_top"] == 2
    assert pc.rank(3)["dim_top"] == 6
    with pytest.raises(pc.PatternCountError):
        pc.rank(6)


def test_errors():
    with pytest.raises(pc.PatternCountError):
        pc.count([1, 1], load("bare_3214.json"))
    with pytest.raises(pc.NotApplicableError):
        pc.count([1, 2, 3], load("cherry_ne.json"), algorithm="block")
    with pytest.raises(ValueError):
        pc.pattern_vector("{")
