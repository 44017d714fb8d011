"""Text formats: words, exponent sets and code specs.

* word: comma-separated decimal element indices on one line;
* code spec: a field line ``GF p=.. k=.. mod=..`` followed by a ``SET`` block.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .codes import EvaluationCode, code_build, format_word, parse_word
from .field import FieldSpec, parse_field
from .lattice import ExponentSet, parse_exponent_set


def read_text(path) -> str:
    return Path(path).read_text()


def write_text(path, text: str):
    Path(path).write_text(text)


def read_word(path) -> np.ndarray:
    return parse_word(read_text(path))


def write_word(path, word):
    write_text(path, format_word(word) + "\n")


def format_code_spec(F: FieldSpec, exponents: ExponentSet) -> str:
    return F.serialize() + "\n" + exponents.serialize()


def parse_code_spec(text: str) -> tuple[FieldSpec, ExponentSet]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code spec")
    F = parse_field(lines[0])
    S = parse_exponent_set("\n".join(lines[1:]))
    if S.q != F.q:
        raise ValueError(f"set over q={S.q} does not match {F!r}")
    return F, S


def read_code(path) -> EvaluationCode:
    return code_build(*parse_code_spec(read_text(path)))


def check_word(word: np.ndarray, q: int, n: int) -> np.ndarray:
    if word.shape != (n,):
        raise ValueError(f"word has {len(word)} symbols, expected {n}")
    if word.min(initial=0) < 0 or word.max(initial=0) >= q:
        raise ValueError(f"word has symbols outside 0..{q - 1}")
    return word
