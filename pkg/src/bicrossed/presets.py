"""Named example configurations.

Rendered preset files live in bicrossed/presets/*.json so they can be
inspected, diffed and modified; parameterized names (h_z_z2n:N,
z_poly_zp:P, drinfeld:NAME) regenerate on the fly when no file matches
the requested parameter.  scripts/make_presets.py rewrites the files
from these generators.
"""

from __future__ import annotations

import json
from importlib import resources

from .errors import ConfigError
from .groups import cyclic_group, direct_product, permutation_group

SHIPPED = [
    "h_z_z2",
    "h_z_z2n:1",
    "h_z_z2n:2",
    "h_z_z2n:3",
    "z_poly_zp:2",
    "z_poly_zp:3",
    "drinfeld:S3",
    "drinfeld:Z2",
]


def _cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def h_z_z2n_config(n: int) -> dict:
    """G = Z_{2n} acting on Z by sign through the parity of the exponent."""
    if n < 1:
        raise ConfigError("h_z_z2n needs n >= 1")
    return {
        "name": f"h_z_z2n:{n}",
        "group": {"type": "table", "table": _cyclic_table(2 * n), "name": f"Z{2 * n}"},
        "f_group": {"type": "free_abelian", "rank": 1},
        "action": {
            "type": "linear",
            "matrices": [[[1 if k % 2 == 0 else -1]] for k in range(2 * n)],
        },
        "sigma": {"type": "trivial"},
        "tau": {"type": "trivial"},
        "radius": 4,
    }


def h_z_z2_config() -> dict:
    cfg = h_z_z2n_config(1)
    cfg["name"] = "h_z_z2"
    return cfg


def z_poly_zp_config(p: int) -> dict:
    """G = Z_p cyclically shifting the coefficient lattice Z^p."""
    if p < 2:
        raise ConfigError("z_poly_zp needs p >= 2")
    shift = [[1 if i == (j + 1) % p else 0 for j in range(p)] for i in range(p)]

    def mat_pow(k):
        out = [[1 if i == j else 0 for j in range(p)] for i in range(p)]
        for _ in range(k):
            out = [
                [sum(shift[i][t] * out[t][j] for t in range(p)) for j in range(p)]
                for i in range(p)
            ]
        return out

    return {
        "name": f"z_poly_zp:{p}",
        "group": {"type": "table", "table": _cyclic_table(p), "name": f"Z{p}"},
        "f_group": {"type": "free_abelian", "rank": p},
        "action": {"type": "linear", "matrices": [mat_pow(k) for k in range(p)]},
        "sigma": {"type": "trivial"},
        "tau": {"type": "trivial"},
        "radius": 2,
    }


_DRINFELD_GROUPS = {
    "S3": lambda: permutation_group([(1, 0, 2), (1, 2, 0)], name="S3"),
    "S4": lambda: permutation_group([(1, 0, 2, 3), (1, 2, 3, 0)], name="S4"),
    "A4": lambda: permutation_group([(1, 0, 3, 2), (1, 2, 0, 3)], name="A4"),
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "Z6": lambda: cyclic_group(6),
    "V4": lambda: direct_product(cyclic_group(2), cyclic_group(2), name="V4"),
}


def drinfeld_config(group_name: str) -> dict:
    """The dual of the Drinfeld double of k^G: F = G with conjugation."""
    key = group_name.upper() if group_name.upper() in _DRINFELD_GROUPS else group_name
    if key not in _DRINFELD_GROUPS:
        raise ConfigError(
            f"unknown drinfeld group {group_name!r}; choose from {sorted(_DRINFELD_GROUPS)}"
        )
    G = _DRINFELD_GROUPS[key]()
    n = G.order
    table = [[G.mul(i, j) for j in range(n)] for i in range(n)]
    right = [[G.mul(G.mul(g, f), G.inv(g)) for f in range(n)] for g in range(n)]
    left = [[g for _f in range(n)] for g in range(n)]
    return {
        "name": f"drinfeld:{key}",
        "group": {"type": "table", "table": table, "name": G.name},
        "f_group": {"type": "finite", "table": table, "name": G.name},
        "action": {"type": "tables", "right": right, "left": left},
        "sigma": {"type": "trivial"},
        "tau": {"type": "trivial"},
        "radius": 4,
    }


def generate_preset(name: str) -> dict:
    if name == "h_z_z2":
        return h_z_z2_config()
    family, _, param = name.partition(":")
    if family == "h_z_z2n" and param:
        return h_z_z2n_config(int(param))
    if family == "z_poly_zp" and param:
        return z_poly_zp_config(int(param))
    if family == "drinfeld" and param:
        return drinfeld_config(param)
    raise ConfigError(
        f"unknown preset {name!r}; families: h_z_z2, h_z_z2n:N, z_poly_zp:P, drinfeld:NAME"
    )


def preset_filename(name: str) -> str:
    return name.replace(":", "_").lower() + ".json"


def resolve_preset(name: str) -> dict:
    """Load the shipped preset file when present, else regenerate."""
    fname = preset_filename(name)
    pkg_files = resources.files("bicrossed").joinpath("presets")
    candidate = pkg_files.joinpath(fname)
    if candidate.is_file():
        with candidate.open("r", encoding="utf-8") as fh:
            return json.load(fh)
    return generate_preset(name)
