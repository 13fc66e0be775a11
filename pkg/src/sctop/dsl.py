"""A small description language for spaces and maps.

    space  := 'finite' '{' 'elems' ':' names [';' 'leq' ':' pairs] [';'] '}'
            | 'lift' '(' space ')'
            | 'sum' '(' space ',' space ')'
            | NAME                                    -- catalog atom
    names  := NAME (',' NAME)*
    pairs  := [NAME '<' NAME (',' NAME '<' NAME)*]
    map    := 'map' '{' 'from' ':' space ';' 'to' ':' space ';'
              'pairs' ':' [NAME '->' NAME (',' NAME '->' NAME)*] [';'] '}'

leq pairs may be covering or general; elaboration takes the reflexive
transitive closure and rejects cycles with the offending pair. `lift` adds
a fresh bottom under a finite space; `sum` is the disjoint union of two
finite spaces (duplicate element names are rejected). Catalog atoms name
the symbolic entries. All errors carry line/column positions.
"""

import re
from dataclasses import dataclass, field

from .catalog import CATALOG, SymbolicSpace
from .errors import ParseError, PosetAxiomError, SemanticError
from .maps import SpaceMap
from .order import FinPoset
from .spaces import FinSpace, alexandroff

_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|->|[{}():;,<]|\S")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

KEYWORDS = {"finite", "lift", "sum", "map", "elems", "leq", "from", "to", "pairs"}


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        for m in _TOKEN_RE.finditer(line):
            out.append(Token(m.group(), lineno, m.start() + 1))
    last_line = text.count("\n") + 1
    out.append(Token("", last_line, len(text.splitlines()[-1]) + 1 if text.splitlines() else 1))
    return out


@dataclass(frozen=True)
class FiniteDoc:
    names: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]
    pos: tuple[int, int] = field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class AtomDoc:
    name: str
    pos: tuple[int, int] = field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class LiftDoc:
    inner: object
    pos: tuple[int, int] = field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class SumDoc:
    left: object
    right: object
    pos: tuple[int, int] = field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class MapDoc:
    src: object
    dst: object
    pairs: tuple[tuple[str, str], ...]
    pos: tuple[int, int] = field(default=(1, 1), compare=False)


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected: str):
        t = self.peek()
        found = repr(t.text) if t.text else "end of input"
        raise ParseError(t.line, t.col, expected, found)

    def take(self, text: str) -> Token:
        t = self.peek()
        if t.text != text:
            self.fail(repr(text))
        self.i += 1
        return t

    def take_name(self) -> Token:
        t = self.peek()
        if not _NAME_RE.match(t.text) or t.text in KEYWORDS:
            self.fail("a name")
        self.i += 1
        return t

    def at_end(self) -> bool:
        return self.peek().text == ""

    def space(self):
        t = self.peek()
        pos = (t.line, t.col)
        if t.text == "finite":
            self.i += 1
            self.take("{")
            self.take("elems")
            self.take(":")
            names = [self.take_name().text]
            while self.peek().text == ",":
                self.i += 1
                names.append(self.take_name().text)
            pairs = []
            if self.peek().text == ";":
                self.i += 1
                if self.peek().text == "leq":
                    self.i += 1
                    self.take(":")
                    while _NAME_RE.match(self.peek().text) and self.peek().text not in KEYWORDS:
                        a = self.take_name().text
                        self.take("<")
                        b = self.take_name().text
                        pairs.append((a, b))
                        if self.peek().text == ",":
                            self.i += 1
                        else:
                            break
                    if self.peek().text == ";":
                        self.i += 1
            self.take("}")
            return FiniteDoc(tuple(names), tuple(pairs), pos)
        if t.text == "lift":
            self.i += 1
            self.take("(")
            inner = self.space()
            self.take(")")
            return LiftDoc(inner, pos)
        if t.text == "sum":
            self.i += 1
            self.take("(")
            left = self.space()
            self.take(",")
            right = self.space()
            self.take(")")
            return SumDoc(left, right, pos)
        if _NAME_RE.match(t.text) and t.text not in KEYWORDS:
            self.i += 1
            return AtomDoc(t.text, pos)
        self.fail("'finite', 'lift', 'sum', or a catalog name")

    def map_doc(self):
        t = self.take("map")
        pos = (t.line, t.col)
        self.take("{")
        self.take("from")
        self.take(":")
        src = self.space()
        self.take(";")
        self.take("to")
        self.take(":")
        dst = self.space()
        self.take(";")
        self.take("pairs")
        self.take(":")
        pairs = []
        while _NAME_RE.match(self.peek().text) and self.peek().text not in KEYWORDS:
            a = self.take_name().text
            self.take("->")
            b = self.take_name().text
            pairs.append((a, b))
            if self.peek().text == ",":
                self.i += 1
            else:
                break
        if self.peek().text == ";":
            self.i += 1
        self.take("}")
        return MapDoc(src, dst, tuple(pairs), pos)


def parse_space(text: str):
    p = _Parser(text)
    doc = p.space()
    if not p.at_end():
        p.fail("end of input")
    return doc


def parse_map(text: str) -> MapDoc:
    p = _Parser(text)
    doc = p.map_doc()
    if not p.at_end():
        p.fail("end of input")
    return doc


def parse_document(text: str):
    p = _Parser(text)
    doc = p.map_doc() if p.peek().text == "map" else p.space()
    if not p.at_end():
        p.fail("end of input")
    return doc


def print_doc(doc) -> str:
    """Canonical text; printing then parsing is the identity on documents."""
    if isinstance(doc, FiniteDoc):
        body = "elems: " + ", ".join(doc.names)
        if doc.pairs:
            body += "; leq: " + ", ".join(f"{a} < {b}" for a, b in doc.pairs)
        return "finite { " + body + " }"
    if isinstance(doc, AtomDoc):
        return doc.name
    if isinstance(doc, LiftDoc):
        return f"lift({print_doc(doc.inner)})"
    if isinstance(doc, SumDoc):
        return f"sum({print_doc(doc.left)}, {print_doc(doc.right)})"
    if isinstance(doc, MapDoc):
        pairs = ", ".join(f"{a} -> {b}" for a, b in doc.pairs)
        return ("map { from: " + print_doc(doc.src) + "; to: " + print_doc(doc.dst)
                + "; pairs: " + pairs + " }")
    raise TypeError(f"not a document: {doc!r}")


def _fresh(name: str, taken) -> str:
    while name in taken:
        name = "_" + name
    return name


def elaborate(doc) -> FinSpace | SymbolicSpace:
    if isinstance(doc, FiniteDoc):
        names = doc.names
        seen = set()
        for nm in names:
            if nm in seen:
                raise SemanticError(*doc.pos, f"duplicate element name {nm!r}")
            seen.add(nm)
        index = {nm: i for i, nm in enumerate(names)}
        pairs = []
        for a, b in doc.pairs:
            for nm in (a, b):
                if nm not in index:
                    raise SemanticError(*doc.pos, f"unknown element {nm!r} in leq")
            pairs.append((index[a], index[b]))
        try:
            poset = FinPoset.from_cover_pairs(len(names), pairs)
        except PosetAxiomError as e:
            i, j = e.witness[:2]
            raise SemanticError(
                *doc.pos,
                f"{e.axiom} violated: {names[i]} and {names[j]} order each other"
            ) from None
        return alexandroff(poset, names)
    if isinstance(doc, AtomDoc):
        if doc.name not in CATALOG:
            raise SemanticError(*doc.pos, f"unknown catalog space {doc.name!r}")
        return CATALOG[doc.name]
    if isinstance(doc, LiftDoc):
        inner = elaborate(doc.inner)
        if not isinstance(inner, FinSpace):
            raise SemanticError(*doc.pos, "lift applies to finite spaces only")
        n = inner.size
        p = inner.specialization
        up = [row << 1 for row in p.up]          # shift: bottom takes index 0
        up.insert(0, (1 << (n + 1)) - 1)
        names = inner.names or tuple(str(i) for i in range(n))
        bottom = _fresh("bot", set(names))
        return alexandroff(FinPoset(tuple(up)), (bottom,) + names)
    if isinstance(doc, SumDoc):
        left = elaborate(doc.left)
        right = elaborate(doc.right)
        if not (isinstance(left, FinSpace) and isinstance(right, FinSpace)):
            raise SemanticError(*doc.pos, "sum applies to finite spaces only")
        lnames = left.names or tuple(str(i) for i in range(left.size))
        rnames = right.names or tuple(str(i) for i in range(right.size))
        dup = set(lnames) & set(rnames)
        if dup:
            raise SemanticError(
                *doc.pos, f"duplicate element name {sorted(dup)[0]!r} across sum operands")
        lp = left.specialization
        rp = right.specialization
        up = list(lp.up) + [row << left.size for row in rp.up]
        return alexandroff(FinPoset(tuple(up)), lnames + rnames)
    raise TypeError(f"not a space document: {doc!r}")


def elaborate_map(doc: MapDoc) -> SpaceMap:
    src = elaborate(doc.src)
    dst = elaborate(doc.dst)
    if not (isinstance(src, FinSpace) and isinstance(dst, FinSpace)):
        raise SemanticError(*doc.pos, "map endpoints must be finite spaces")
    snames = src.names or tuple(str(i) for i in range(src.size))
    dnames = dst.names or tuple(str(i) for i in range(dst.size))
    sindex = {nm: i for i, nm in enumerate(snames)}
    dindex = {nm: i for i, nm in enumerate(dnames)}
    table: dict[int, int] = {}
    for a, b in doc.pairs:
        if a not in sindex:
            raise SemanticError(*doc.pos, f"unknown source element {a!r}")
        if b not in dindex:
            raise SemanticError(*doc.pos, f"unknown target element {b!r}")
        if sindex[a] in table:
            raise SemanticError(*doc.pos, f"duplicate mapping for {a!r}")
        table[sindex[a]] = dindex[b]
    missing = [nm for nm in snames if sindex[nm] not in table]
    if missing:
        raise SemanticError(*doc.pos, f"map is not total: {missing[0]!r} has no image")
    return SpaceMap(src, dst, tuple(table[i] for i in range(src.size)))
