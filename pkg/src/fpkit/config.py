"""JSON configuration files describing a factor family and its normal subgroup.

Schema::

    {
      "factors": [
        {"name": "A", "cyclic": 4},
        {"name": "S3", "symmetric": 3},
        {"name": "V4", "cayley": [[0, 1, 2, 3], ...]}
      ],
      "normal": {"factor": 0, "elements": [0, 2]},   # or "whole"
      "options": {"window": 3, "samples": 10000, "seed": 42,
                  "max_syllables": 6, "allow_multi": false}
    }

``normal`` may also be a list of such objects when ``allow_multi`` is set.
Factors without an entry get the trivial subgroup.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import ConfigError
from .groups import FiniteGroup, SubgroupData, cyclic, subgroup, symmetric, validate_group, whole_group
from .quotient import QuotientSpec
from .words import FactorFamily

DEFAULT_OPTIONS = {
    "window": 3,
    "samples": 10000,
    "seed": 42,
    "max_syllables": 6,
    "allow_multi": False,
}

BUILTIN = ("c2c2_whole", "c4c2_square", "s3c2_alternating", "v4c3_pair")


@dataclass
class SpecConfig:
    names: list[str]
    family: FactorFamily
    spec: QuotientSpec
    options: dict[str, Any] = field(default_factory=lambda: dict(DEFAULT_OPTIONS))
    source: str = ""


def _factor(entry: Any, where: str) -> FiniteGroup:
    if not isinstance(entry, dict):
        raise ConfigError(f"{where}: expected an object")
    kinds = [k for k in ("cyclic", "symmetric", "cayley") if k in entry]
    if len(kinds) != 1:
        raise ConfigError(f"{where}: give exactly one of cyclic, symmetric, cayley")
    kind = kinds[0]
    value = entry[kind]
    name = str(entry.get("name", ""))
    try:
        if kind == "cayley":
            if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
                raise ConfigError("cayley must be a list of rows")
            g = validate_group(value, name)
        else:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"{kind} expects an integer")
            g = cyclic(value) if kind == "cyclic" else symmetric(value)
    except ConfigError as exc:
        raise ConfigError(f"{where}.{kind}: {exc}") from exc
    if name:
        g = FiniteGroup(g.order, g.table, g.identity, g.inverse, name)
    return g


def _normal(entry: Any, groups: list[FiniteGroup], where: str) -> tuple[int, SubgroupData]:
    if not isinstance(entry, dict) or "factor" not in entry or "elements" not in entry:
        raise ConfigError(f"{where}: expected {{\"factor\": i, \"elements\": [...] | \"whole\"}}")
    i = entry["factor"]
    if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < len(groups):
        raise ConfigError(f"{where}.factor: unknown factor {i!r}")
    elems = entry["elements"]
    if elems == "whole":
        return i, whole_group(groups[i])
    if not isinstance(elems, list) or not all(isinstance(x, int) for x in elems):
        raise ConfigError(f"{where}.elements: expected a list of element indices or \"whole\"")
    try:
        return i, subgroup(groups[i], elems)
    except ConfigError as exc:
        raise ConfigError(f"{where}.elements: {exc}") from exc


def parse_config(data: Any, source: str = "<config>", **overrides: Any) -> SpecConfig:
    """Build a :class:`SpecConfig` from decoded JSON.

    ``overrides`` replace entries of ``options`` (None values are ignored).
    """
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: top level must be an object")
    raw_factors = data.get("factors")
    if not isinstance(raw_factors, list) or not raw_factors:
        raise ConfigError(f"{source}: factors must be a nonempty list")
    groups = [_factor(f, f"factors[{k}]") for k, f in enumerate(raw_factors)]
    names = [g.name or f"G{k}" for k, g in enumerate(groups)]

    options = dict(DEFAULT_OPTIONS)
    raw_options = data.get("options", {})
    if not isinstance(raw_options, dict):
        raise ConfigError(f"{source}: options must be an object")
    unknown = set(raw_options) - set(DEFAULT_OPTIONS)
    if unknown:
        raise ConfigError(f"options: unknown keys {sorted(unknown)}")
    options.update(raw_options)
    options.update({k: v for k, v in overrides.items() if v is not None})
    for key in ("window", "samples", "seed", "max_syllables"):
        v = options[key]
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ConfigError(f"options.{key}: expected a nonnegative integer, got {v!r}")

    family = FactorFamily(groups)
    normals = [SubgroupData((g.identity,)) for g in groups]
    raw_normal = data.get("normal")
    entries = raw_normal if isinstance(raw_normal, list) else [raw_normal]
    for k, entry in enumerate(entries):
        where = f"normal[{k}]" if isinstance(raw_normal, list) else "normal"
        i, n = _normal(entry, groups, where)
        normals[i] = n
    spec = QuotientSpec(family, tuple(normals), bool(options["allow_multi"]))
    return SpecConfig(names, family, spec, options, source)


def resolve_path(path: str | Path) -> Path | None:
    """Locate a config file, falling back to the bundled configs by name.

    ``c4c2_square``, ``c4c2_square.json`` and ``any/dir/c4c2_square.json``
    all resolve to the bundled file when no such file exists on disk.
    """
    p = Path(path)
    if p.is_file():
        return p
    stem = p.name[:-5] if p.name.endswith(".json") else p.name
    bundled = resources.files("fpkit") / "data" / f"{stem}.json"
    if bundled.is_file():
        return Path(str(bundled))
    return None


def load_config(path: str | Path, **overrides: Any) -> SpecConfig:
    found = resolve_path(path)
    if found is None:
        raise ConfigError(f"config file not found: {path}")
    try:
        data = json.loads(found.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_config(data, str(path), **overrides)


def builtin(name: str, **overrides: Any) -> SpecConfig:
    """One of the shipped test families, by name (see ``BUILTIN``)."""
    if name not in BUILTIN and name != "c2c2_trivial_n":
        raise ConfigError(f"no bundled config named {name!r}")
    return load_config(name, **overrides)
