"""Machine-readable catalog of series names, parameter schemas and identities."""

from __future__ import annotations

import json
from importlib import resources

from . import mock, qkit, registry

PATH = "data/catalog.json"


def build_catalog() -> dict:
    return {
        "schema": registry.SCHEMA,
        "monomial_grammar": "[-]<int>[*z^i][*a^j][*q^k]",
        "mock_families": mock.catalog(),
        "classical": qkit.classical_catalog(),
        "identities": registry.catalog_json(),
    }


def load_catalog() -> dict:
    return json.loads(resources.files("qmock").joinpath(PATH).read_text(encoding="utf-8"))


def dump(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


if __name__ == "__main__":
    # regenerate the shipped file
    out = resources.files("qmock").joinpath(PATH)
    with resources.as_file(out) as p:
        p.write_text(dump(build_catalog()), encoding="utf-8")
