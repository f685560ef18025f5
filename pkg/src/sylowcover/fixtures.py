"""Loading groups from JSON fixture files and family names.

Fixture schema (one JSON object per file; unknown keys are ignored so files
can carry provenance notes):

    {"kind": "permutation", "degree": n, "generators": [[img0, ...], ...]}
    {"kind": "matrix", "q": prime power, "dim": n,
     "generators": [[entries row-major] or [[row], ...], ...]}
    {"kind": "family", "name": "Sn"|"An"|"SL2"|"PSL2"|"GL", "params": {...}}

Permutation images are 0-based; matrix entries are field encodings in
[0, q) (base-p digits of the polynomial representative, constant term
first).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .errors import DomainError
from .fields import make_field
from .groups import FiniteGroup, enumerate_group
from .linear import SquareMatrix, build_group
from .perm import Permutation

FAMILY_NAMES = ("Sn", "An", "SL2", "PSL2", "GL")


def symmetric_group(n: int, cap: Optional[int] = None) -> FiniteGroup:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n == 1:
        return enumerate_group([Permutation.identity(1)], name="S_1", cap=cap)
    gens = [Permutation.from_cycles(n, [(1, 2)]), Permutation.from_cycles(n, [tuple(range(1, n + 1))])]
    group = enumerate_group(gens, name=f"S_{n}", cap=cap)
    expected = 1
    for i in range(2, n + 1):
        expected *= i
    if group.order != expected:
        raise RuntimeError(f"S_{n} enumerated to order {group.order}, expected {expected}")
    return group


def alternating_group(n: int, cap: Optional[int] = None) -> FiniteGroup:
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    if n % 2 == 1:
        cycle = tuple(range(1, n + 1))
    else:
        cycle = tuple(range(2, n + 1))
    gens = [Permutation.from_cycles(n, [(1, 2, 3)]), Permutation.from_cycles(n, [cycle])]
    group = enumerate_group(gens, name=f"A_{n}", cap=cap)
    expected = 1
    for i in range(2, n + 1):
        expected *= i
    if group.order != expected // 2:
        raise RuntimeError(f"A_{n} enumerated to order {group.order}, expected {expected // 2}")
    return group


def build_family(name: str, params: dict, cap: Optional[int] = None) -> FiniteGroup:
    if name == "Sn":
        return symmetric_group(int(params["n"]), cap=cap)
    if name == "An":
        return alternating_group(int(params["n"]), cap=cap)
    if name == "SL2":
        return build_group("SL", 2, int(params["q"]), cap=cap)
    if name == "PSL2":
        return build_group("PSL", 2, int(params["q"]), cap=cap)
    if name == "GL":
        return build_group("GL", int(params["n"]), int(params["q"]), cap=cap)
    raise DomainError(f"unknown family {name!r}; choose one of {FAMILY_NAMES}")


def load_fixture(path: str | Path, cap: Optional[int] = None) -> FiniteGroup:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise DomainError(f"fixture file not found: {path}")
    except json.JSONDecodeError as exc:
        raise DomainError(f"fixture file {path} is not valid JSON: {exc}")
    kind = data.get("kind")
    if kind == "permutation":
        degree = int(data["degree"])
        gens = [Permutation(images) for images in data["generators"]]
        if any(g.degree != degree for g in gens):
            raise DomainError(f"generator degree disagrees with the declared degree {degree}")
        return enumerate_group(gens, name=data.get("name", path.stem), cap=cap)
    if kind == "matrix":
        field = make_field(int(data["q"]))
        dim = int(data["dim"])
        gens = []
        for entries in data["generators"]:
            matrix = SquareMatrix(field, entries)
            if matrix.dim != dim:
                raise DomainError(f"generator dimension disagrees with the declared dim {dim}")
            gens.append(matrix)
        return enumerate_group(gens, name=data.get("name", path.stem), cap=cap)
    if kind == "family":
        return build_family(data["name"], data.get("params", {}), cap=cap)
    raise DomainError(f"fixture kind must be permutation, matrix, or family; got {kind!r}")
