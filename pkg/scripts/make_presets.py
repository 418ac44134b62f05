#!/usr/bin/env python3
"""Regenerate the shipped preset config files from the family generators."""

from __future__ import annotations

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from bicrossed.presets import SHIPPED, generate_preset, preset_filename


def main() -> None:
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "src" / "bicrossed" / "presets"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name in SHIPPED:
        cfg = generate_preset(name)
        path = out_dir / preset_filename(name)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(cfg, fh, indent=1, sort_keys=True)
            fh.write("\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
