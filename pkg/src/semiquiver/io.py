"""Plain-text formats for bound quivers and representations.

Algebra files are line based (``#`` starts a comment)::

    vertex 1
    vertex 2
    arrow a 1 2
    arrow b 1 2
    relation 1 a c ; -1 b d       # terms separated by ';', arrows in walking order
    canonical 2,2,2 2             # optional: build the canonical algebra instead

Module files::

    dims 1,1
    field rational                # or a prime, e.g. 'field 5'
    map a 1 1                     # arrow, rows, cols, then that many rows
    1
    map b 1 1
    2
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from . import linalg
from .errors import FormatError
from .quiver import BoundQuiver, PathElement, Quiver
from .representation import Representation


def parse_number(tok: str):
    try:
        return linalg.normalize(Fraction(tok))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"not a rational number: {tok!r}") from None


def parse_vector(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise FormatError(f"not a comma-separated integer vector: {text!r}") from None


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_algebra(text: str) -> BoundQuiver:
    vertices, arrows, relations, canonical = [], [], [], None
    for no, line in _lines(text):
        head, _, rest = line.partition(" ")
        toks = rest.split()
        if head == "vertex" and len(toks) == 1:
            vertices.append(toks[0])
        elif head == "arrow" and len(toks) == 3:
            arrows.append(tuple(toks))
        elif head == "relation" and toks:
            relations.append((no, rest))
        elif head == "canonical" and 1 <= len(toks) <= 2:
            weights = parse_vector(toks[0])
            params = tuple(parse_number(t) for t in toks[1].split(",")) if len(toks) > 1 else ()
            canonical = (weights, params)
        else:
            raise FormatError(f"line {no}: cannot parse {line!r}")
    if canonical is not None:
        from .canonical import canonical_algebra

        a = canonical_algebra(*canonical)
        if vertices and (vertices != list(a.quiver.vertices)
                         or sorted(arrows) != sorted((x.name, x.source, x.target) for x in a.quiver.arrows)):
            raise FormatError("vertex/arrow lines disagree with the canonical line")
        return a
    q = Quiver(vertices, arrows)
    return BoundQuiver(q, [_parse_relation(q, no, body) for no, body in relations])


def _parse_relation(q: Quiver, no: int, body: str) -> PathElement:
    terms = {}
    ends = None
    for part in body.split(";"):
        toks = part.split()
        if len(toks) < 2:
            raise FormatError(f"line {no}: relation term needs a coefficient and arrows: {part.strip()!r}")
        coeff = parse_number(toks[0])
        try:
            path = q.path(*toks[1:])
        except Exception as exc:
            raise FormatError(f"line {no}: {exc}") from None
        if ends is None:
            ends = (path.source, path.target)
        elif ends != (path.source, path.target):
            raise FormatError(f"line {no}: relation terms are not parallel")
        terms[path] = terms.get(path, 0) + coeff
    return PathElement(ends[0], ends[1], terms)


def _fmt(x) -> str:
    return str(linalg.normalize(Fraction(x)))


def format_algebra(a: BoundQuiver) -> str:
    q = a.quiver
    out = [f"vertex {v}" for v in q.vertices]
    out += [f"arrow {x.name} {x.source} {x.target}" for x in q.arrows]
    for r in a.relations:
        parts = [f"{_fmt(c)} {' '.join(p.arrows)}" for p, c in sorted(r.terms.items(), key=lambda t: q.path_key(t[0]))]
        out.append("relation " + " ; ".join(parts))
    if a.canonical is not None:
        spec = a.canonical
        line = "canonical " + ",".join(map(str, spec.weights))
        if spec.params:
            line += " " + ",".join(_fmt(x) for x in spec.params)
        out.append(line)
    return "\n".join(out) + "\n"


def parse_module(a: BoundQuiver, text: str, p: Optional[int] = None) -> Representation:
    lines = list(_lines(text))
    dims, maps = None, {}
    k = 0
    while k < len(lines):
        no, line = lines[k]
        toks = line.split()
        k += 1
        if toks[0] == "dims" and len(toks) == 2:
            dims = parse_vector(toks[1])
        elif toks[0] == "field" and len(toks) == 2:
            if toks[1] in ("rational", "QQ"):
                p = None
            else:
                try:
                    p = int(toks[1])
                except ValueError:
                    raise FormatError(f"line {no}: field must be 'rational' or a prime") from None
        elif toks[0] == "map" and len(toks) == 4:
            name, r, c = toks[1], int(toks[2]), int(toks[3])
            rows = []
            for _ in range(r):
                if k >= len(lines):
                    raise FormatError(f"line {no}: matrix for {name!r} is truncated")
                rno, rline = lines[k]
                k += 1
                row = [parse_number(t) for t in rline.split()]
                if len(row) != c:
                    raise FormatError(f"line {rno}: expected {c} entries, got {len(row)}")
                rows.append(row)
            maps[name] = rows
        else:
            raise FormatError(f"line {no}: cannot parse {line!r}")
    if dims is None:
        raise FormatError("module file has no 'dims' line")
    if len(dims) != a.quiver.n:
        raise FormatError(f"dims has {len(dims)} entries, algebra has {a.quiver.n} vertices")
    return Representation(a, dims, maps, p=p)


def format_module(m: Representation) -> str:
    out = ["dims " + ",".join(map(str, m.dims)), "field " + ("rational" if m.p is None else str(m.p))]
    for x in m.quiver.arrows:
        mat = m.matrix(x.name)
        r, c = m.dim(x.target), m.dim(x.source)
        if not r or not c or not any(v for row in mat for v in row):
            continue
        out.append(f"map {x.name} {r} {c}")
        out += [" ".join(_fmt(v) for v in row) for row in mat]
    return "\n".join(out) + "\n"


def read_algebra(path: str) -> BoundQuiver:
    with open(path) as fh:
        return parse_algebra(fh.read())


def read_module(a: BoundQuiver, path: str, p: Optional[int] = None) -> Representation:
    with open(path) as fh:
        return parse_module(a, fh.read(), p)
