"""Shared fixtures: the standard fields, a worked 3x3 example code, and a
seeded corpus of random subcodes reused by several test modules."""

from __future__ import annotations

import pytest

from hrmc.codes import make_code
from hrmc.fields import make_field
from hrmc.hermitian import HermitianMatrix
from hrmc.verify import sample_codes

# (q, t) pairs small enough to enumerate exhaustively everywhere
COMBOS = [(2, 2), (2, 3), (3, 2)]
CORPUS_SEED = 20240816
PER_COMBO = 34  # 3 * 34 = 102 samples, comfortably over the required minimums


@pytest.fixture(scope="session")
def fields():
    """Fields keyed by q: GF(4), GF(9), GF(16)."""
    return {2: make_field(2, 1), 3: make_field(3, 1), 4: make_field(2, 2)}


def _matrix(field, rows):
    return HermitianMatrix(
        field, len(rows),
        tuple(tuple(field.from_index(x) for x in r) for r in rows))


@pytest.fixture(scope="session")
def example_code(fields):
    """The 8-word 3x3 code over GF(4) with distribution (1, 0, 3, 4).

    Element indices over GF(4): 0, 1, 2 = a, 3 = 1 + a where a is a root
    of z^2 + z + 1 and conj(a) = 1 + a.
    """
    f4 = fields[2]
    g1 = _matrix(f4, [[1, 2, 0], [3, 0, 0], [0, 0, 0]])
    g2 = _matrix(f4, [[0, 0, 2], [0, 1, 0], [3, 0, 0]])
    g3 = _matrix(f4, [[0, 0, 0], [0, 0, 3], [0, 2, 1]])
    return make_code(f4, 3, [g1, g2, g3])


@pytest.fixture(scope="session")
def extremal_d3_code(fields):
    """An 8-word 3x3 code over GF(4) whose nonzero words all have rank 3.

    Found by seeded random search; every nonzero sum of the three
    generators below is invertible, so the code meets the size bound for
    minimum distance 3.
    """
    f4 = fields[2]
    g1 = _matrix(f4, [[0, 3, 3], [2, 0, 1], [2, 1, 1]])
    g2 = _matrix(f4, [[1, 1, 1], [1, 1, 2], [1, 3, 1]])
    g3 = _matrix(f4, [[0, 1, 0], [1, 0, 2], [0, 3, 1]])
    return make_code(f4, 3, [g1, g2, g3])


@pytest.fixture(scope="session")
def extremal_d2_code(fields):
    """A 4-word 2x2 code over GF(4) meeting the bound for distance 2."""
    f4 = fields[2]
    g1 = _matrix(f4, [[1, 0], [0, 1]])
    g2 = _matrix(f4, [[0, 2], [3, 1]])
    return make_code(f4, 2, [g1, g2])


@pytest.fixture(scope="session")
def code_corpus(fields):
    """Seeded random subcodes with their duals and both distributions."""
    return {(q, t): sample_codes(fields[q], t, PER_COMBO, CORPUS_SEED)
            for q, t in COMBOS}
