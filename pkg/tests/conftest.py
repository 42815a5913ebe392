import random

import pytest

from comppairs.lattice import SetFamily, random_family


@pytest.fixture
def rng():
    return random.Random(20240611)


def brute_pairs(f: SetFamily) -> int:
    ms = f.members
    return sum(1 for i in range(len(ms)) for j in range(i + 1, len(ms))
               if ms[i] & ~ms[j] == 0 or ms[j] & ~ms[i] == 0)


def seeded_families(count, max_n, seed=0):
    for t in range(count):
        r = random.Random(f"{seed}:{t}")
        yield random_family(r.randint(1, max_n), r)
