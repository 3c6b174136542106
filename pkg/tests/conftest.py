import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from meander.field import ModelParams

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def ex1():
    """Five-fold portrait with ring radii 2/3, 1, 2."""
    return ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(7.0,), b1=3.0)


@pytest.fixture
def ex2_domain1():
    return ModelParams(n=4, eps2=1.0, a1=(0.0,), a2=(1.0,), b1=0.7)


@pytest.fixture
def ex2_domain2():
    return ModelParams(n=4, eps2=1.0, a1=(0.0,), a2=(1.0,), b1=1.2)


@pytest.fixture
def ex2_domain3():
    return ModelParams(n=4, eps2=1.0, a1=(0.0,), a2=(-1.0,), b1=0.7)


@pytest.fixture
def two_ring_n6():
    return ModelParams(n=6, eps2=1.0, a1=(0.0, 0.0), a2=(-1.0, 0.1), b1=0.06)


@pytest.fixture
def dissipative_n5():
    """Saddles plus weakly attracting spirals outside a stable radial cycle."""
    return ModelParams(n=5, eps1=0.005, eps2=1.0, a1=(-0.01,), a2=(-1.0,), b1=0.1)


def random_params(rng: np.random.Generator, n: int, hamiltonian: bool,
                  b_range=(0.0, 3.0)) -> ModelParams:
    s = n // 2 - 1
    a1 = (0.0,) * s if hamiltonian else tuple(rng.uniform(-0.05, 0.05, size=s))
    eps1 = 0.0 if hamiltonian else rng.uniform(-0.02, 0.02)
    return ModelParams(
        n=n, eps1=eps1, eps2=rng.uniform(-3, 3),
        a1=a1, a2=tuple(rng.uniform(-3, 3, size=s)),
        b1=rng.uniform(*b_range), b2=0.0,
    )
