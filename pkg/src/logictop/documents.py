"""JSON documents for every object the workbench exchanges.

Six kinds: logic, poset, lattice, space, logic_map, point_map.  Maps
embed their endpoints as full sub-documents.  Emission is canonical
(fixed key order, index sets sorted ascending, families sorted, two
space indent, LF, trailing newline) so identical objects produce
byte-identical text.  Parsing is strict: unknown keys are rejected and
every index is range-checked, with errors carrying a JSON-pointer path
like /theories/0/0.

Orders travel as pairs of element names; reflexive and transitive
closure is applied on parse, and the full non-reflexive order is
written on emit, so a document stays stable under reparsing even when
a hand-written input listed only the covering pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .builders import FiniteLattice, FinitePoset
from .core import AbstractLogic, ConnectiveTables, TheoryFamily
from .duality import LogicMap, PointMap
from .errors import ParseError, SchemaError
from .topology import FiniteSpace

KINDS = ("logic", "poset", "lattice", "space", "logic_map", "point_map")


@dataclass(frozen=True)
class Document:
    kind: str
    value: object

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown document kind {self.kind!r}")


def parse_document(text: str) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}, column {e.colno}: {e.msg}", witness=(e.lineno, e.colno)) from None
    return _document_from_obj(obj, "")


def emit_document(doc: Document) -> str:
    emitters = {
        "logic": _logic_to_obj,
        "poset": _poset_to_obj,
        "lattice": _lattice_to_obj,
        "space": _space_to_obj,
        "logic_map": _logic_map_to_obj,
        "point_map": _point_map_to_obj,
    }
    obj = emitters[doc.kind](doc.value)
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# parsing


def _fail(path: str, message: str):
    raise SchemaError(message, path or "/")


def _as_object(v, path: str, allowed: tuple[str, ...]) -> dict:
    if not isinstance(v, dict):
        _fail(path, "expected an object")
    for key in v:
        if key not in allowed:
            _fail(f"{path}/{key}", "unexpected key")
    return v


def _require(obj: dict, key: str, path: str):
    if key not in obj:
        _fail(f"{path}/{key}", "missing required key")
    return obj[key]


def _as_list(v, path: str) -> list:
    if not isinstance(v, list):
        _fail(path, "expected an array")
    return v


def _as_names(v, path: str) -> tuple[str, ...]:
    items = _as_list(v, path)
    for i, s in enumerate(items):
        if not isinstance(s, str):
            _fail(f"{path}/{i}", "expected a string")
    if len(set(items)) != len(items):
        _fail(path, "names must be distinct")
    return tuple(items)


def _as_index(v, path: str, n: int) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        _fail(path, "expected an integer")
    if not 0 <= v < n:
        _fail(path, f"index {v} out of range 0..{n - 1}")
    return v


def _as_index_sets(v, path: str, n: int) -> list[frozenset[int]]:
    rows = _as_list(v, path)
    out = []
    for i, row in enumerate(rows):
        items = _as_list(row, f"{path}/{i}")
        out.append(frozenset(_as_index(x, f"{path}/{i}/{j}", n) for j, x in enumerate(items)))
    return out


def _as_table(v, path: str, n: int) -> tuple[tuple[int, ...], ...]:
    rows = _as_list(v, path)
    if len(rows) != n:
        _fail(path, f"expected {n} rows")
    out = []
    for i, row in enumerate(rows):
        items = _as_list(row, f"{path}/{i}")
        if len(items) != n:
            _fail(f"{path}/{i}", f"expected {n} entries")
        out.append(tuple(_as_index(x, f"{path}/{i}/{j}", n) for j, x in enumerate(items)))
    return tuple(out)


def _as_name_pairs(v, path: str, names: tuple[str, ...]) -> list[tuple[str, str]]:
    rows = _as_list(v, path)
    out = []
    for i, row in enumerate(rows):
        items = _as_list(row, f"{path}/{i}")
        if len(items) != 2:
            _fail(f"{path}/{i}", "expected a pair")
        for j, s in enumerate(items):
            if not isinstance(s, str):
                _fail(f"{path}/{i}/{j}", "expected a string")
            if s not in names:
                _fail(f"{path}/{i}/{j}", f"unknown element {s!r}")
        out.append((items[0], items[1]))
    return out


def _parse_logic(obj: dict, path: str) -> AbstractLogic:
    _as_object(obj, path, ("kind", "exprs", "theories", "connectives"))
    names = _as_names(_require(obj, "exprs", path), f"{path}/exprs")
    n = len(names)
    sets = _as_index_sets(_require(obj, "theories", path), f"{path}/theories", n)
    try:
        family = TheoryFamily(n, frozenset(sets))
    except ValueError as e:
        _fail(f"{path}/theories", str(e))
    tables = None
    if "connectives" in obj:
        c = _as_object(obj["connectives"], f"{path}/connectives",
                       ("join", "meet", "impl", "neg", "top", "bottom"))
        cp = f"{path}/connectives"
        if "join" not in c:
            _fail(f"{cp}/join", "missing required key")
        kwargs = {}
        for key in ("join", "meet", "impl"):
            if key in c:
                kwargs[key] = _as_table(c[key], f"{cp}/{key}", n)
        if "neg" in c:
            row = _as_list(c["neg"], f"{cp}/neg")
            if len(row) != n:
                _fail(f"{cp}/neg", f"expected {n} entries")
            kwargs["neg"] = tuple(_as_index(x, f"{cp}/neg/{j}", n) for j, x in enumerate(row))
        for key in ("top", "bottom"):
            if key in c:
                kwargs[key] = _as_index(c[key], f"{cp}/{key}", n)
        tables = ConnectiveTables(**kwargs)
    try:
        return AbstractLogic(names, family, tables)
    except ValueError as e:
        _fail(path, str(e))


def _parse_poset(obj: dict, path: str) -> FinitePoset:
    _as_object(obj, path, ("kind", "elements", "leq"))
    names = _as_names(_require(obj, "elements", path), f"{path}/elements")
    pairs = _as_name_pairs(_require(obj, "leq", path), f"{path}/leq", names)
    try:
        return FinitePoset.from_pairs(names, pairs)
    except ValueError as e:
        _fail(f"{path}/leq", str(e))


def _parse_lattice(obj: dict, path: str) -> FiniteLattice:
    _as_object(obj, path, ("kind", "elements", "leq", "impl", "top", "bottom"))
    names = _as_names(_require(obj, "elements", path), f"{path}/elements")
    n = len(names)
    pairs = _as_name_pairs(_require(obj, "leq", path), f"{path}/leq", names)
    try:
        order = FinitePoset.from_pairs(names, pairs)
    except ValueError as e:
        _fail(f"{path}/leq", str(e))
    impl = _as_table(obj["impl"], f"{path}/impl", n) if "impl" in obj else None
    try:
        lattice = FiniteLattice.from_leq(names, order.leq, impl=impl, bounded=False)
    except ValueError as e:
        _fail(f"{path}/leq", str(e))
    top = _as_index(obj["top"], f"{path}/top", n) if "top" in obj else None
    bottom = _as_index(obj["bottom"], f"{path}/bottom", n) if "bottom" in obj else None
    try:
        return replace(lattice, top=top, bottom=bottom)
    except ValueError as e:
        _fail(path, str(e))


def _parse_space(obj: dict, path: str) -> FiniteSpace:
    _as_object(obj, path, ("kind", "points", "basis", "basis_names"))
    names = _as_names(_require(obj, "points", path), f"{path}/points")
    sets = _as_index_sets(_require(obj, "basis", path), f"{path}/basis", len(names))
    basis_names = ()
    if "basis_names" in obj:
        basis_names = _as_names(obj["basis_names"], f"{path}/basis_names")
    try:
        return FiniteSpace(names, tuple(sets), basis_names)
    except ValueError as e:
        _fail(f"{path}/basis", str(e))


def _parse_endpoint(obj, path: str, kind: str):
    doc = _document_from_obj(obj, path)
    if doc.kind != kind:
        _fail(f"{path}/kind", f"expected a {kind} document")
    return doc.value


def _parse_logic_map(obj: dict, path: str) -> LogicMap:
    _as_object(obj, path, ("kind", "source", "target", "map"))
    source = _parse_endpoint(_require(obj, "source", path), f"{path}/source", "logic")
    target = _parse_endpoint(_require(obj, "target", path), f"{path}/target", "logic")
    row = _as_list(_require(obj, "map", path), f"{path}/map")
    if len(row) != source.universe_size:
        _fail(f"{path}/map", f"expected {source.universe_size} entries")
    mapping = tuple(_as_index(x, f"{path}/map/{j}", target.universe_size) for j, x in enumerate(row))
    return LogicMap(source, target, mapping)


def _parse_point_map(obj: dict, path: str) -> PointMap:
    _as_object(obj, path, ("kind", "source", "target", "map"))
    source = _parse_endpoint(_require(obj, "source", path), f"{path}/source", "space")
    target = _parse_endpoint(_require(obj, "target", path), f"{path}/target", "space")
    row = _as_list(_require(obj, "map", path), f"{path}/map")
    if len(row) != source.n_points:
        _fail(f"{path}/map", f"expected {source.n_points} entries")
    mapping = tuple(_as_index(x, f"{path}/map/{j}", target.n_points) for j, x in enumerate(row))
    return PointMap(source, target, mapping)


def _document_from_obj(obj, path: str) -> Document:
    if not isinstance(obj, dict):
        _fail(path, "expected an object")
    kind = obj.get("kind")
    if kind not in KINDS:
        _fail(f"{path}/kind", f"expected one of {', '.join(KINDS)}")
    parsers = {
        "logic": _parse_logic,
        "poset": _parse_poset,
        "lattice": _parse_lattice,
        "space": _parse_space,
        "logic_map": _parse_logic_map,
        "point_map": _parse_point_map,
    }
    return Document(kind, parsers[kind](obj, path))


# emission


def _order_pairs(names: tuple[str, ...], leq) -> list[list[str]]:
    n = len(names)
    return [[names[i], names[j]] for i in range(n) for j in range(n) if i != j and leq[i][j]]


def _logic_to_obj(logic: AbstractLogic) -> dict:
    obj = {
        "kind": "logic",
        "exprs": list(logic.expr_names),
        "theories": [sorted(t) for t in logic.theories],
    }
    c = logic.connectives
    if c is not None:
        tables = {}
        for key in ("join", "meet", "impl"):
            table = getattr(c, key)
            if table is not None:
                tables[key] = [list(row) for row in table]
        if c.neg is not None:
            tables["neg"] = list(c.neg)
        for key in ("top", "bottom"):
            v = getattr(c, key)
            if v is not None:
                tables[key] = v
        obj["connectives"] = tables
    return obj


def _poset_to_obj(poset: FinitePoset) -> dict:
    return {
        "kind": "poset",
        "elements": list(poset.element_names),
        "leq": _order_pairs(poset.element_names, poset.leq),
    }


def _lattice_to_obj(lattice: FiniteLattice) -> dict:
    obj = {
        "kind": "lattice",
        "elements": list(lattice.element_names),
        "leq": _order_pairs(lattice.element_names, lattice.leq),
    }
    if lattice.impl is not None:
        obj["impl"] = [list(row) for row in lattice.impl]
    if lattice.top is not None:
        obj["top"] = lattice.top
    if lattice.bottom is not None:
        obj["bottom"] = lattice.bottom
    return obj


def _space_to_obj(space: FiniteSpace) -> dict:
    return {
        "kind": "space",
        "points": list(space.point_names),
        "basis": [sorted(b) for b in space.basis],
        "basis_names": list(space.basis_names),
    }


def _logic_map_to_obj(m: LogicMap) -> dict:
    return {
        "kind": "logic_map",
        "source": _logic_to_obj(m.source),
        "target": _logic_to_obj(m.target),
        "map": list(m.mapping),
    }


def _point_map_to_obj(m: PointMap) -> dict:
    return {
        "kind": "point_map",
        "source": _space_to_obj(m.source),
        "target": _space_to_obj(m.target),
        "map": list(m.mapping),
    }
