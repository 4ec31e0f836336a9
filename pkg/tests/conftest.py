import random

import pytest

from qeuclid.repmod import build_module, random_module_params


@pytest.fixture
def rng():
    return random.Random(20250810)


def build_random_instance(case, n, m, k=1, seed=0):
    params = random_module_params(case, n, m, k, seed=seed)
    return params, build_module(params)
