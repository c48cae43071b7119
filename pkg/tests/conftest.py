import random

import pytest

from multitrunc.groebner import FreeModule, GradedHom
from multitrunc.jobs import family_module, irrelevant_ideal_module, mixed_module
from multitrunc.ring import make_ring, monomials_of_multidegree
from multitrunc.truncation import PresentedModule


@pytest.fixture(scope="session")
def irrelevant():
    return irrelevant_ideal_module()


@pytest.fixture(scope="session")
def mixed():
    return mixed_module()


@pytest.fixture(scope="session")
def m2():
    return family_module(2)


@pytest.fixture(scope="session")
def m3():
    return family_module(3)


SMALL_RINGS = [(1,), (2,), (3,), (4,), (1, 1), (1, 2), (0, 1, 1), (1, 0, 1)]


def random_module(rng: random.Random, n=None, binomial=None, rank=None):
    """A random monomial or binomial module coker(phi) over a ring with <= 5 variables."""
    if n is None:
        n = rng.choice(SMALL_RINGS)
    ring = make_ring(n)
    r = ring.r
    if binomial is None:
        binomial = rng.random() < 0.5
    if rank is None:
        rank = rng.choice([1, 1, 2])
    tw = [tuple(rng.randint(0, 1) for _ in range(r)) for _ in range(rank)]
    ncols = rng.randint(1, 4)
    cols, src = [], []
    for _ in range(ncols):
        top = tuple(max(t[i] for t in tw) + rng.randint(0, 2) for i in range(r))
        if sum(top) == sum(max(t[i] for t in tw) for i in range(r)):
            top = tuple(x + (1 if i == 0 else 0) for i, x in enumerate(top))
        col = {}
        for k, t in enumerate(tw):
            if rank > 1 and rng.random() < 0.3:
                continue
            monos = monomials_of_multidegree(ring, tuple(a - b for a, b in zip(top, t)))
            if not monos:
                continue
            m1 = rng.choice(monos)
            col[(m1, k)] = 1
            if binomial and len(monos) > 1:
                m2 = rng.choice([m for m in monos if m != m1])
                col[(m2, k)] = rng.choice([1, -1, 2])
        if col:
            cols.append(col)
            src.append(top)
    phi = GradedHom(FreeModule(ring, tuple(tw)), FreeModule(ring, tuple(src)), cols)
    return PresentedModule(phi)
