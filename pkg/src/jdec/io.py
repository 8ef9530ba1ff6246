"""JSON input files and the problem bundle."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from . import linalg as la
from .characters import CharacterError, CharacterTable, Diagnostics, build_table, validate_table
from .groups import FiniteGroup, GroupError, close_generators, validate_generating_vector
from .idempotents import RepError, SymplecticRep

SCHEMA_VERSION = 1


class InputError(ValueError):
    def __init__(self, file: str, message: str):
        super().__init__(f"{file}: {message}")
        self.file = file


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("jdec") / "data" / name))


def read_json(path: str | Path) -> dict[str, Any]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    v = data.get("schema_version", SCHEMA_VERSION)
    if v != SCHEMA_VERSION:
        raise InputError(str(path), f"unsupported schema_version {v}")
    return data


def load_group(data: dict[str, Any], cap: int | None = None) -> FiniteGroup:
    kind = data.get("kind", "permutation")
    kw = {} if cap is None else {"cap": cap}
    modulus = data.get("modulus") if kind == "matrix_mod" else None
    gens = data.get("generators", [])
    if kind == "permutation" and "degree" in data:
        for g in gens:
            if len(g) != data["degree"]:
                raise GroupError(f"generator {g} does not have degree {data['degree']}")
    G = close_generators(gens, kind=kind, modulus=modulus, names=data.get("names"), **kw)
    for rel in data.get("relations", []):
        if G.word(rel) != 0:
            raise GroupError(f"relation {rel} does not hold")
    return G


def load_characters(G: FiniteGroup, data: dict[str, Any]) -> CharacterTable:
    return build_table(G, int(data["conductor"]), data["classes"], data["characters"])


def load_rep(G: FiniteGroup, data: dict[str, Any]) -> SymplecticRep:
    g = int(data["genus"])
    imgs = [[[int(x) for x in row] for row in M] for M in data["generator_images"]]
    rep = SymplecticRep(G, g, imgs)
    errs = rep.check()
    if errs:
        raise RepError("; ".join(errs))
    return rep


def load_rational_matrix(rows) -> la.RatMatrix:
    return [[Fraction(str(x)) for x in row] for row in rows]


@dataclass
class ProblemBundle:
    group: FiniteGroup
    group_data: dict[str, Any]
    table: CharacterTable | None = None
    rep: SymplecticRep | None = None
    paths: dict[str, str] = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.group_data.get("name", "G")

    def generating_vector(self):
        gv = self.group_data.get("generating_vector")
        if not gv:
            return None
        gam = int(gv.get("genus", 0))
        elems = [self.group.word(w) for w in gv["elements"]]
        return gam, elems, [int(m) for m in gv["periods"]]


def load_bundle(group: str | Path, chars: str | Path | None = None, rep: str | Path | None = None) -> ProblemBundle:
    """Load and cross-check the input files. Raises ``InputError`` on the first failure."""
    paths = {"group": str(group)}
    gd = read_json(group)
    try:
        G = load_group(gd)
    except GroupError as exc:
        raise InputError(str(group), str(exc)) from exc
    b = ProblemBundle(G, gd, paths=paths)
    if chars is not None:
        paths["chars"] = str(chars)
        try:
            b.table = load_characters(G, read_json(chars))
        except (CharacterError, GroupError, ValueError) as exc:
            raise InputError(str(chars), str(exc)) from exc
    if rep is not None:
        paths["rep"] = str(rep)
        try:
            b.rep = load_rep(G, read_json(rep))
        except (RepError, ValueError, KeyError) as exc:
            raise InputError(str(rep), str(exc)) from exc
    return b


def validate_bundle(b: ProblemBundle, signature: tuple[int, list[int]] | None = None) -> Diagnostics:
    """All loader checks that are not fatal at load time.

    ``signature`` overrides the one declared in the group file.
    """
    d = Diagnostics()
    G = b.group
    if not G.check_associativity():
        d.fail(f"{b.paths['group']}: multiplication is not associative")
    if b.table is not None:
        td = validate_table(b.table)
        for m in td.messages:
            d.fail(f"{b.paths['chars']}: {m}")
    gv = b.generating_vector()
    if gv is not None:
        gam, elems, periods = gv
        if signature is not None:
            gam, periods = signature
        chk = validate_generating_vector(G, elems, gam, periods)
        if not chk:
            d.fail(f"{b.paths['group']}: generating vector condition ({chk.failed_condition}) fails: {chk.message}")
    if b.rep is not None and gv is not None and b.rep.genus:
        from .groups import riemann_hurwitz

        gam, _, periods = gv
        if signature is not None:
            gam, periods = signature
        try:
            g = riemann_hurwitz(G.order, gam, periods)
        except GroupError as exc:
            d.fail(f"{b.paths['group']}: {exc}")
        else:
            if g != b.rep.genus:
                d.fail(f"{b.paths['rep']}: genus {b.rep.genus}, Riemann-Hurwitz gives {g}")
    return d
