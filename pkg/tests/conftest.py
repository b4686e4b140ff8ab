import random

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized property samples (printed when chosen)",
    )


@pytest.fixture
def rng(request):
    seed = request.config.getoption("--seed")
    if seed is None:
        seed = random.randrange(2**32)
    print(f"\nrandom seed: {seed} (rerun with --seed {seed})")
    return random.Random(seed)
