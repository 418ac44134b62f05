from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

from bicrossed.config import build_config
from bicrossed.presets import generate_preset


def build_preset(name: str):
    return build_config(generate_preset(name))


@pytest.fixture(scope="session")
def h_z_z2():
    return build_preset("h_z_z2")


@pytest.fixture(scope="session")
def h_z_z2n_2():
    return build_preset("h_z_z2n:2")


@pytest.fixture(scope="session")
def drinfeld_s3():
    return build_preset("drinfeld:S3")


@pytest.fixture(scope="session")
def z_poly_zp3():
    return build_preset("z_poly_zp:3")


def twisted_tau_config() -> dict:
    """Z acting trivially under G = Z2, tau lifted through Z -> Z2 with
    tau(g, g; odd) = -1: a valid nontrivial co-cocycle."""
    return {
        "name": "z_z2_twisted_tau",
        "group": {"type": "table", "table": [[0, 1], [1, 0]], "name": "Z2"},
        "f_group": {"type": "free_abelian", "rank": 1},
        "action": {"type": "linear", "matrices": [[[1]], [[1]]]},
        "sigma": {"type": "trivial"},
        "tau": {
            "type": "quotient_lift",
            "moduli": [2],
            "values": [
                [["1", "1"], ["1", "1"]],
                [["1", "1"], ["1", "-1"]],
            ],
        },
        "radius": 4,
    }


def twisted_sigma_config() -> dict:
    """Same shape with sigma(g; odd, odd) = -1 instead: a valid cocycle."""
    return {
        "name": "z_z2_twisted_sigma",
        "group": {"type": "table", "table": [[0, 1], [1, 0]], "name": "Z2"},
        "f_group": {"type": "free_abelian", "rank": 1},
        "action": {"type": "linear", "matrices": [[[1]], [[1]]]},
        "sigma": {
            "type": "quotient_lift",
            "moduli": [2],
            "values": [
                [["1", "1"], ["1", "1"]],
                [["1", "1"], ["1", "-1"]],
            ],
        },
        "tau": {"type": "trivial"},
        "radius": 4,
    }


def broken_compat_config() -> dict:
    """tau(g, g; f_k) = i^(k mod 2 ... ) pattern with t1*t1 != t2: the tau
    law holds but the sigma/tau compatibility fails, so the coproduct is
    not multiplicative."""
    one, neg = "1", "-1"
    # F = Z4 by table; t_1 = 1, t_2 = -1, t_3 = 1
    t = ["1", "1", "-1", "1"]
    tau_block_g = [[one] * 4, [t[k] for k in range(4)]]
    return {
        "name": "broken_compat",
        "group": {"type": "table", "table": [[0, 1], [1, 0]], "name": "Z2"},
        "f_group": {
            "type": "finite",
            "table": [[(i + j) % 4 for j in range(4)] for i in range(4)],
            "name": "Z4",
        },
        "action": {
            "type": "tables",
            "right": [[0, 1, 2, 3], [0, 1, 2, 3]],
            "left": [[0, 0, 0, 0], [1, 1, 1, 1]],
        },
        "sigma": {"type": "trivial"},
        "tau": {"type": "table", "values": [[[one] * 4, [one] * 4], tau_block_g]},
        "radius": 4,
    }


def sigma_two_config() -> dict:
    """One sigma value set to 2: rejected by the unitarity gate."""
    one = "1"
    return {
        "name": "sigma_two",
        "group": {"type": "table", "table": [[0, 1], [1, 0]], "name": "Z2"},
        "f_group": {"type": "finite", "table": [[0, 1], [1, 0]], "name": "Z2"},
        "action": {
            "type": "tables",
            "right": [[0, 1], [0, 1]],
            "left": [[0, 0], [1, 1]],
        },
        "sigma": {"type": "table", "values": [[[one, one], [one, one]], [[one, one], [one, "2"]]]},
        "tau": {"type": "trivial"},
        "radius": 4,
    }
