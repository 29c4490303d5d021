import math

import pytest

from speigen import build_instance


@pytest.fixture(scope="session")
def inst12():
    return build_instance(2, 3, 2, [1])


@pytest.fixture(scope="session")
def inst48():
    return build_instance(2, 3, 4, [3])


@pytest.fixture(scope="session")
def inst120():
    return build_instance(2, 15, 3, [1, 2])


def instance_family(max_q=4, max_s=2, m_limit=None):
    """Every instance with N in {2,3}, R in {3,5,7,15}, gcd(R,N)=1, q <= max_q, s <= max_s."""
    out = []
    for N in (2, 3):
        for R in (3, 5, 7, 15):
            if math.gcd(R, N) != 1:
                continue
            for q in range(1, max_q + 1):
                p_choices = [[]]
                if max_s >= 1:
                    p_choices += [[a] for a in range(1, q)]
                if max_s >= 2:
                    p_choices += [[a, b] for a in range(1, q) for b in range(a + 1, q)]
                for p in p_choices:
                    if m_limit is None or R * N**q <= m_limit:
                        out.append(build_instance(N, R, q, p))
    return out


@pytest.fixture(scope="session")
def family():
    return instance_family()


@pytest.fixture(scope="session")
def family_small():
    return instance_family(m_limit=48)
