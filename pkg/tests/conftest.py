import random
from fractions import Fraction

import pytest

from superjacobi.ratfunc import RatFunc
from superjacobi.series import QYSeries


def rand_ratfunc(rng: random.Random, ymin=-2, ymax=3, rational=False) -> RatFunc:
    num = {e: Fraction(rng.randint(-4, 4)) for e in range(ymin, ymax)}
    r = RatFunc(num)
    if rational and rng.random() < 0.5:
        den = {0: Fraction(1), 1: Fraction(rng.randint(1, 2))}
        r = RatFunc(dict(num), den)
    return r


def rand_series(rng: random.Random, trunc=10, qden=1, nterms=6, vmin=0,
                ymin=-2, ymax=3, ypref=Fraction(0), rational=False) -> QYSeries:
    terms = {}
    for _ in range(nterms):
        e = rng.randint(vmin, trunc - 1)
        terms[e] = rand_ratfunc(rng, ymin, ymax, rational)
    return QYSeries(qden, ypref, terms, trunc)


def rand_unit(rng: random.Random, trunc=10, qden=1) -> QYSeries:
    s = rand_series(rng, trunc, qden, nterms=5, vmin=1)
    one = {0: RatFunc.const(rng.choice([1, -1, 2, Fraction(1, 2)]))}
    one.update(s.terms)
    return QYSeries(qden, Fraction(0), one, trunc)


@pytest.fixture
def rng():
    return random.Random(20240817)
