import random
from fractions import Fraction

import pytest

from totpos.rational import Mat
from totpos.flags import DecoratedFlag, Configuration
from totpos.polygon import Triangulation


def det_oracle(m):
    """Independent determinant by cofactor expansion along the first row."""
    n = m.rows
    if n == 1:
        return m.entries[0][0]
    total = Fraction(0)
    for j in range(n):
        minor = Mat([[row[c] for c in range(n) if c != j]
                     for row in m.entries[1:]])
        total += (-1) ** j * m.entries[0][j] * det_oracle(minor)
    return total


@pytest.fixture
def v_config():
    """The m=2, n=4 configuration with first rows (1,0), (0,1), (-1,1), (-2,1),
    each completed to a det-1 representative."""
    return Configuration([
        DecoratedFlag(Mat([[1, 0], [0, 1]])),
        DecoratedFlag(Mat([[0, 1], [-1, 0]])),
        DecoratedFlag(Mat([[-1, 1], [0, -1]])),
        DecoratedFlag(Mat([[-2, 1], [-1, 0]])),
    ])


def random_triangulation(n, seed):
    """A reproducible random triangulation, by random flips from the fan."""
    rng = random.Random(seed)
    t = Triangulation.fan(n)
    if n == 3:
        return t
    for _ in range(3 * n):
        d = rng.choice(sorted(t.diagonals))
        t = t.flip(d)
    return t
