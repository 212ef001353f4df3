"""JSON interchange for groups, division parts, presentations, and witnesses.

Every file is UTF-8 JSON with a top-level "v": 1.   Group elements appear in
files by name only; on save, groups are canonicalized to table form and
division parts to twisted form, so loaders need only handle the general
schemas.  File and parse failures raise with messages already carrying the
"file error:" / "parse error:" prefixes the CLI passes through.
"""

from __future__ import annotations

import json
from typing import Any

from .algebras import BasisElem
from .cocycles import Corrector, validate_cocycle
from .division import GradedDivisionAlgebra, pauli, trivial_division, _as_index
from .errors import InvalidInput
from .groups import Group, Subgroup, build_abelian, validate_table
from .iso import IsoWitness
from .presentations import FlagPresentation, make_presentation

__all__ = [
    "load_presentation",
    "save_presentation",
    "load_witness",
    "save_witness",
    "group_from_obj",
    "group_to_obj",
    "division_from_obj",
    "division_to_obj",
    "load_json_file",
    "load_group_file",
]


def load_json_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise InvalidInput(f"file error: {path}: {e.strerror or e}", code="file-error") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"parse error: {path}: {e}", code="parse-error") from None


def _require(obj: Any, key: str, where: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise InvalidInput(f"{where} is missing required key {key!r}", code="bad-schema")
    return obj[key]


def _check_version(obj: Any, where: str) -> None:
    if _require(obj, "v", where) != 1:
        raise InvalidInput(f'{where} must declare "v": 1', code="bad-schema")


# -- groups --------------------------------------------------------------------


def group_from_obj(obj: Any) -> Group:
    kind = _require(obj, "kind", "group object")
    if kind == "abelian":
        factors = _require(obj, "factors", "abelian group object")
        if not isinstance(factors, list) or not all(isinstance(f, int) for f in factors):
            raise InvalidInput("abelian factors must be a list of integers", code="bad-schema")
        return build_abelian(factors)
    if kind == "table":
        table = _require(obj, "table", "table group object")
        names = obj.get("names")
        return validate_table(table, names)
    raise InvalidInput(f"unknown group kind {kind!r}", code="bad-schema")


def group_to_obj(group: Group) -> dict:
    return {
        "kind": "table",
        "names": list(group.names),
        "table": [list(row) for row in group.table],
    }


def load_group_file(path: str) -> Group:
    obj = load_json_file(path)
    _check_version(obj, f"group file {path}")
    return group_from_obj(obj)


# -- division parts ------------------------------------------------------------


def division_from_obj(obj: Any, group: Group) -> GradedDivisionAlgebra:
    kind = _require(obj, "kind", "division object")
    if kind == "trivial":
        return trivial_division(group)
    if kind == "pauli":
        t = _require(obj, "t", "pauli division object")
        images = _require(obj, "images", "pauli division object")
        if not isinstance(images, list) or len(images) != 2:
            raise InvalidInput("pauli images must be a two-element list", code="bad-schema")
        return pauli(t, group, images)
    if kind == "twisted":
        listed = _require(obj, "support", "twisted division object")
        order = _require(obj, "root_order", "twisted division object")
        values = _require(obj, "values", "twisted division object")
        if not isinstance(order, int) or order < 1:
            raise InvalidInput("root_order must be a positive integer", code="bad-schema")
        members = [_as_index(group, x) for x in listed]
        if len(set(members)) != len(members):
            raise InvalidInput("twisted support lists an element twice", code="bad-schema")
        sub = Subgroup(group, tuple(members))
        n = len(members)
        if (
            not isinstance(values, list)
            or len(values) != n
            or any(not isinstance(r, list) or len(r) != n for r in values)
        ):
            raise InvalidInput(
                f"twisted values must be a {n}x{n} matrix of exponents", code="bad-schema"
            )
        # rows/columns of "values" follow the listed support order, not the
        # sorted member order the Subgroup ends up with
        pos = {h: sub.position_of(h) for h in members}
        tbl = [[0] * n for _ in range(n)]
        for i, a in enumerate(members):
            for j, b in enumerate(members):
                v = values[i][j]
                if not isinstance(v, int):
                    raise InvalidInput("twisted values must be integers", code="bad-schema")
                tbl[pos[a]][pos[b]] = v
        return GradedDivisionAlgebra(validate_cocycle(sub, order, tbl))
    raise InvalidInput(f"unknown division kind {kind!r}", code="bad-schema")


def division_to_obj(d: GradedDivisionAlgebra) -> dict:
    grp = d.group
    members = d.support.members
    return {
        "kind": "twisted",
        "support": [grp.name_of(h) for h in members],
        "root_order": d.order,
        "values": [
            [d.cocycle.val(a, b) for b in members] for a in members
        ],
    }


# -- presentations -------------------------------------------------------------


def presentation_from_obj(obj: Any, where: str = "presentation") -> FlagPresentation:
    _check_version(obj, where)
    group = group_from_obj(_require(obj, "group", where))
    division = division_from_obj(_require(obj, "division", where), group)
    blocks = _require(obj, "blocks", where)
    if not isinstance(blocks, list) or not all(isinstance(b, int) for b in blocks):
        raise InvalidInput("blocks must be a list of integers", code="bad-schema")
    degrees = _require(obj, "tuple", where)
    if not isinstance(degrees, list):
        raise InvalidInput("tuple must be a list of element names", code="bad-schema")
    return make_presentation(division, blocks, degrees)


def load_presentation(path: str) -> FlagPresentation:
    return presentation_from_obj(load_json_file(path), f"presentation file {path}")


def save_presentation(p: FlagPresentation, path: str) -> None:
    obj = {
        "v": 1,
        "group": group_to_obj(p.group),
        "division": division_to_obj(p.division),
        "blocks": list(p.shape.blocks),
        "tuple": list(p.degree_names()),
    }
    _dump(obj, path)


# -- witnesses -----------------------------------------------------------------


def save_witness(w: IsoWitness, path: str) -> None:
    _dump(witness_to_obj(w), path)


def witness_to_obj(w: IsoWitness) -> dict:
    grp = w.source.group
    order = w.scalar_order
    k = order // w.mu.order
    tgt_members = w.target.division.support.members
    alg_basis = sorted(w.mapping)  # mapping keys are the realized source basis

    def triple(b: BasisElem) -> list:
        return [b.row + 1, b.col + 1, grp.name_of(b.sup)]

    return {
        "v": 1,
        "g": grp.name_of(w.shift),
        "sigma": [s + 1 for s in w.sigma],
        "h": [grp.name_of(h) for h in w.correctors],
        "mu": {grp.name_of(h): (k * w.mu.exp_of(h)) % order for h in tgt_members},
        "root_order": order,
        "map": [
            {
                "from": triple(b),
                "to": triple(w.mapping[b][0]),
                "scalar_exp": w.mapping[b][1],
            }
            for b in alg_basis
        ],
    }


def witness_from_obj(
    obj: Any, source: FlagPresentation, target: FlagPresentation, where: str = "witness"
) -> IsoWitness:
    """Rebuild a witness verbatim: names are resolved and shapes checked, but the
    relation between tuples and the corrector law are left for verify_witness."""
    _check_version(obj, where)
    grp = source.group
    n = source.shape.n
    shift = _as_index(grp, _require(obj, "g", where))
    sigma_raw = _require(obj, "sigma", where)
    if (
        not isinstance(sigma_raw, list)
        or len(sigma_raw) != n
        or sorted(sigma_raw) != list(range(1, n + 1))
    ):
        raise InvalidInput(
            f"{where}: sigma must be a permutation of 1..{n}", code="invalid-witness-data"
        )
    sigma = tuple(s - 1 for s in sigma_raw)
    h_raw = _require(obj, "h", where)
    if not isinstance(h_raw, list) or len(h_raw) != n:
        raise InvalidInput(f"{where}: h must list {n} correctors", code="invalid-witness-data")
    correctors = tuple(_as_index(grp, x) for x in h_raw)
    sup = set(source.division.support.members)
    if any(h not in sup for h in correctors):
        raise InvalidInput(
            f"{where}: correctors must lie in the division support", code="invalid-witness-data"
        )
    order = _require(obj, "root_order", where)
    if not isinstance(order, int) or order < 1:
        raise InvalidInput(f"{where}: root_order must be a positive integer", code="invalid-witness-data")
    mu_raw = _require(obj, "mu", where)
    tgt_sup = target.division.support
    if not isinstance(mu_raw, dict) or sorted(mu_raw) != sorted(
        grp.name_of(h) for h in tgt_sup.members
    ):
        raise InvalidInput(
            f"{where}: mu must assign an exponent to each target support element",
            code="invalid-witness-data",
        )
    mu = Corrector(
        tgt_sup, order, tuple(int(mu_raw[grp.name_of(h)]) for h in tgt_sup.members)
    )
    map_raw = _require(obj, "map", where)
    if not isinstance(map_raw, list):
        raise InvalidInput(f"{where}: map must be a list", code="invalid-witness-data")
    mapping: dict[BasisElem, tuple[BasisElem, int]] = {}
    for entry in map_raw:
        frm = _triple_from(entry, "from", grp, where)
        to = _triple_from(entry, "to", grp, where)
        exp = _require(entry, "scalar_exp", f"{where} map entry")
        if not isinstance(exp, int):
            raise InvalidInput(f"{where}: scalar_exp must be an integer", code="invalid-witness-data")
        if frm in mapping:
            raise InvalidInput(
                f"{where}: map defines {tuple(frm)} twice", code="invalid-witness-data"
            )
        mapping[frm] = (to, exp % order)
    return IsoWitness(source, target, shift, sigma, correctors, mu, order, mapping)


def _triple_from(entry: Any, key: str, grp: Group, where: str) -> BasisElem:
    raw = _require(entry, key, f"{where} map entry")
    if not isinstance(raw, list) or len(raw) != 3:
        raise InvalidInput(
            f"{where}: map entry {key!r} must be [row, col, element]",
            code="invalid-witness-data",
        )
    i, j, h = raw
    if not isinstance(i, int) or not isinstance(j, int) or i < 1 or j < 1:
        raise InvalidInput(
            f"{where}: map positions are 1-based integers", code="invalid-witness-data"
        )
    return BasisElem(i - 1, j - 1, _as_index(grp, h))


def load_witness(path: str, source: FlagPresentation, target: FlagPresentation) -> IsoWitness:
    return witness_from_obj(load_json_file(path), source, target, f"witness file {path}")


def _dump(obj: dict, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(obj, f, indent=2)
            f.write("\n")
    except OSError as e:
        raise InvalidInput(f"file error: {path}: {e.strerror or e}", code="file-error") from None
