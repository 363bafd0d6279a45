"""Flat key=value run configuration with strict parsing.

The on-disk format is one `key = value` pair per line, '#' starting a
comment, UTF-8.  Unknown keys are rejected rather than ignored so a typo
cannot silently fall back to a default; serialize/parse round-trips
exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, fields

_SUITE_KEYS = ("all", "snell", "thresholds", "submodularity", "clearance",
               "corelite", "rectangles")


@dataclass(frozen=True)
class RunConfig:
    weight: str = "constant"
    alpha: float | None = None
    layers: str = ""
    resolution: int = 512
    levels: int = 401
    switch_level: float = 0.0
    outdir: str = "out"
    experiments: str = "all"
    seed: int = 0

    def __post_init__(self):
        parse_layers(self.layers)
        if not 32 <= self.resolution <= 4096:
            raise ValueError("resolution must lie in [32, 4096]")
        if not 16 <= self.levels <= 20001:
            raise ValueError("levels must lie in [16, 20001]")
        if not 0.0 <= self.switch_level <= 2.0:
            raise ValueError("switch_level must lie in [0, 2]")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        for name in self.experiments.split(","):
            if name.strip() not in _SUITE_KEYS:
                raise ValueError(f"unknown experiment {name.strip()!r}; "
                                 f"known: {', '.join(_SUITE_KEYS)}")


def parse_layers(text: str):
    """'depth:weight,depth:weight' -> ((depth, weight), ...) or None."""
    if not text:
        return None
    out = []
    for item in text.split(","):
        depth, sep, wt = item.partition(":")
        if not sep:
            raise ValueError(f"layer {item!r} must look like depth:weight")
        out.append((float(depth), float(wt)))
    return tuple(out)


def _parse_value(name: str, text: str):
    if name == "alpha":
        return None if text.lower() in ("none", "") else float(text)
    if name in ("resolution", "levels", "seed"):
        return int(text)
    if name == "switch_level":
        return float(text)
    return text


def parse_config(text: str) -> RunConfig:
    known = {f.name for f in fields(RunConfig)}
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key = value")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in known:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        values[key] = _parse_value(key, val)
    return RunConfig(**values)


def serialize_config(cfg: RunConfig) -> str:
    lines = []
    for f in fields(RunConfig):
        val = getattr(cfg, f.name)
        if f.name == "alpha" and val is None:
            val = "none"
        lines.append(f"{f.name} = {val}")
    return "\n".join(lines) + "\n"


def load_config(path) -> RunConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def save_config(cfg: RunConfig, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_config(cfg))
