"""The bundled catalog of named realizations and the config-file loader."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .symalg import Realization, RealizationError, validate_realization

CATALOG = ("a1xa1", "a2", "b2", "g2", "h2", "m4-degenerate", "m4-degenerate-f2", "universal")
FINITE_CATALOG = ("a1xa1", "a2", "b2", "g2", "h2", "m4-degenerate", "m4-degenerate-f2")


def catalog_config(name: str) -> dict:
    if name not in CATALOG:
        raise KeyError(f"unknown catalog realization {name!r}")
    text = resources.files("dihedral_soergel").joinpath("catalog", f"{name}.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def catalog(name: str) -> Realization:
    """A catalog realization; shared instance per name."""
    return validate_realization(catalog_config(name))


def load_realization(source: str) -> Realization:
    """Resolve a file path or a catalog name (a trailing ``.json`` is ignored
    for catalog names)."""
    path = Path(source)
    if path.is_file():
        try:
            config = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise RealizationError([f"{source}: invalid JSON ({exc.msg})"]) from None
        config.setdefault("name", path.stem)
        return validate_realization(config)
    name = source[:-5] if source.endswith(".json") else source
    if name in CATALOG:
        return catalog(name)
    raise RealizationError([f"no realization file or catalog entry named {source!r}"])
