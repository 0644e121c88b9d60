"""Versioned reference fixtures: printed matrix layouts, the k-exponent
table, and worked bijection examples, loaded from ``data/golden.json``.

The stored row and column orders double as the ``order="paper"`` layouts for
the matrix builders.
"""

from __future__ import annotations

import json
from functools import cache
from importlib import resources

from .transition import LabeledIntMatrix, matrix_from_json_dict

__all__ = ["golden_data", "golden_matrix", "golden_k_table", "paper_layout"]


@cache
def golden_data() -> dict:
    """The parsed fixture file."""
    path = resources.files("compoundbasis").joinpath("data/golden.json")
    return json.loads(path.read_text("utf-8"))


@cache
def golden_matrix(name: str) -> LabeledIntMatrix:
    """Reference matrix by name: "A3", "A4", "AtA3" or "AtA4"."""
    mats = golden_data()["matrices"]
    if name not in mats:
        raise KeyError(f"no reference matrix named {name!r}")
    _, mat = matrix_from_json_dict(mats[name])
    return mat


def golden_k_table() -> dict[int, int]:
    """Reference exponents k_n for |det A_n| = 2^{k_n}."""
    return {int(k): v for k, v in golden_data()["k_table"].items()}


@cache
def paper_layout(n: int):
    """(row order, pair order) of the printed layout of A_n, or None when no
    layout was printed for this n."""
    name = f"A{n}"
    if name not in golden_data()["matrices"]:
        return None
    mat = golden_matrix(name)
    return mat.row_labels, mat.col_labels
