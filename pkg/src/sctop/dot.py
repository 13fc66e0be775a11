"""DOT export of specialization orders as Hasse diagrams.

The diagram carries the transitive reduction only; JSON interchange keeps
the full relation. Node order is the carrier order, so output is
deterministic.
"""

from .order import FinPoset
from .spaces import FinSpace


def _as_poset(target) -> tuple[FinPoset, tuple[str, ...]]:
    if isinstance(target, FinSpace):
        names = target.names or tuple(str(i) for i in range(target.size))
        return target.specialization, names
    if isinstance(target, FinPoset):
        return target, tuple(str(i) for i in range(target.size))
    raise TypeError(f"cannot draw {type(target).__name__}")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(target, graph_name: str = "hasse") -> str:
    poset, names = _as_poset(target)
    lines = [f"digraph {graph_name} {{", "  rankdir=BT;"]
    for i in range(poset.size):
        lines.append(f"  n{i} [label={_quote(names[i])}];")
    for i, j in poset.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
