"""JSON interchange for spaces, posets, maps, families, completions.

`to_json` emits a canonical byte-stable form (sorted keys, compact
separators, families in canonical order, subsets as sorted index lists);
`from_json` validates and reports problems as SchemaError with a JSON
pointer. Round trips are bit-exact on canonical forms.
"""

import json
from dataclasses import dataclass

from . import bits
from .catalog import CATALOG, SymbolicSpace
from .completion import CompletionResult, strong_completion
from .errors import SchemaError, SctopError
from .maps import SpaceMap
from .order import FinPoset
from .spaces import FinSpace


@dataclass(frozen=True)
class Family:
    """A family of subsets over a carrier, in canonical order."""
    size: int
    sets: tuple[int, ...]


def _mask_to_list(mask: int) -> list[int]:
    return bits.to_indices(mask)


def to_obj(value):
    if isinstance(value, FinSpace):
        return {
            "kind": "space",
            "size": value.size,
            "opens": [_mask_to_list(u) for u in value.opens_sorted],
            "names": list(value.names) if value.names else None,
        }
    if isinstance(value, FinPoset):
        pairs = sorted((i, j) for i in range(value.size)
                       for j in bits.iter_indices(value.up[i]))
        return {"kind": "poset", "size": value.size,
                "leq": [list(p) for p in pairs]}
    if isinstance(value, SpaceMap):
        return {"kind": "map", "src": to_obj(value.src), "dst": to_obj(value.dst),
                "table": list(value.table)}
    if isinstance(value, Family):
        return {"kind": "family", "size": value.size,
                "sets": [_mask_to_list(s)
                         for s in bits.family_sort(value.sets, value.size)]}
    if isinstance(value, SymbolicSpace):
        return {"kind": "symbolic", "id": value.id}
    if isinstance(value, CompletionResult):
        return {
            "kind": "completion",
            "base": to_obj(value.base),
            "gamma_elements": [_mask_to_list(c) for c in value.gamma.elements],
            "psi": _mask_to_list(value.psi_mask),
            "completion_indices": _mask_to_list(value.completion_mask),
            "eta": list(value.eta.table),
            "witnesses": dict(sorted(value.witnesses.items())),
        }
    raise TypeError(f"cannot serialize {type(value).__name__}")


def to_json(value) -> str:
    return json.dumps(to_obj(value), sort_keys=True, separators=(",", ":"))


def _expect(cond, path, message):
    if not cond:
        raise SchemaError(path, message)


def _int_list(v, path):
    _expect(isinstance(v, list) and all(isinstance(i, int) for i in v),
            path, "expected a list of integers")
    return v


def _read_space(obj, path):
    size = obj.get("size")
    _expect(isinstance(size, int) and size >= 0, path + "/size",
            "expected a nonnegative integer")
    opens_lists = obj.get("opens")
    _expect(isinstance(opens_lists, list), path + "/opens", "expected a list")
    masks = []
    for k, lst in enumerate(opens_lists):
        lst = _int_list(lst, f"{path}/opens/{k}")
        _expect(all(0 <= i < size for i in lst), f"{path}/opens/{k}",
                "index outside the carrier")
        masks.append(bits.from_indices(lst))
    names = obj.get("names")
    if names is not None:
        _expect(isinstance(names, list) and len(names) == size
                and all(isinstance(s, str) for s in names),
                path + "/names", "expected a list of strings matching size")
    try:
        return FinSpace(size, masks, names)
    except SctopError as e:
        raise SchemaError(path + "/opens", str(e)) from None


def from_obj(obj, path=""):
    _expect(isinstance(obj, dict), path or "/", "expected an object")
    kind = obj.get("kind")
    if kind == "space":
        return _read_space(obj, path)
    if kind == "poset":
        size = obj.get("size")
        _expect(isinstance(size, int) and size >= 0, path + "/size",
                "expected a nonnegative integer")
        leq = obj.get("leq")
        _expect(isinstance(leq, list), path + "/leq", "expected a list")
        pairs = []
        for k, pr in enumerate(leq):
            pr = _int_list(pr, f"{path}/leq/{k}")
            _expect(len(pr) == 2 and all(0 <= i < size for i in pr),
                    f"{path}/leq/{k}", "expected a pair of carrier indices")
            pairs.append((pr[0], pr[1]))
        try:
            return FinPoset.from_relation(size, pairs)
        except SctopError as e:
            raise SchemaError(path + "/leq", str(e)) from None
    if kind == "map":
        src = from_obj(obj.get("src"), path + "/src")
        dst = from_obj(obj.get("dst"), path + "/dst")
        _expect(isinstance(src, FinSpace), path + "/src", "expected a space")
        _expect(isinstance(dst, FinSpace), path + "/dst", "expected a space")
        table = _int_list(obj.get("table"), path + "/table")
        try:
            return SpaceMap(src, dst, table)
        except ValueError as e:
            raise SchemaError(path + "/table", str(e)) from None
    if kind == "family":
        size = obj.get("size")
        _expect(isinstance(size, int) and size >= 0, path + "/size",
                "expected a nonnegative integer")
        sets = obj.get("sets")
        _expect(isinstance(sets, list), path + "/sets", "expected a list")
        masks = []
        for k, lst in enumerate(sets):
            lst = _int_list(lst, f"{path}/sets/{k}")
            _expect(all(0 <= i < size for i in lst), f"{path}/sets/{k}",
                    "index outside the carrier")
            masks.append(bits.from_indices(lst))
        return Family(size, bits.family_sort(masks, size))
    if kind == "symbolic":
        name = obj.get("id")
        _expect(isinstance(name, str) and name in CATALOG, path + "/id",
                "unknown catalog id")
        return CATALOG[name]
    if kind == "completion":
        base = from_obj(obj.get("base"), path + "/base")
        _expect(isinstance(base, FinSpace), path + "/base", "expected a space")
        result = strong_completion(base)
        check = to_obj(result)
        for key in ("gamma_elements", "psi", "completion_indices", "eta", "witnesses"):
            _expect(check[key] == obj.get(key), f"{path}/{key}",
                    "stored completion differs from the reconstruction")
        return result
    raise SchemaError(path + "/kind", f"unknown kind {kind!r}")


def from_json(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("/", f"invalid JSON: {e}") from None
    return from_obj(obj)
