"""Line-oriented instance and witness files.

Instance::

    # comment
    psep <n> <m>
    v <label>            (optional; declares isolated vertices)
    e <label> <label>

Labels are arbitrary whitespace-free strings; ids are assigned by first
appearance. Witness files start with ``witness separator`` or
``witness crown``; see ``parse_witness``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TextIO

from .crown import CrownDecomposition
from .errors import InputError
from .graph import Graph


class InstanceFormatError(InputError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class Instance:
    graph: Graph
    labels: list[str]

    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_instance(text: str) -> Instance:
    header = None
    labels: list[str] = []
    index: dict[str, int] = {}
    edges = []
    n_edge_lines = 0

    def intern(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for lineno, tok in _lines(text):
        kind = tok[0]
        if header is None:
            if kind != "psep" or len(tok) != 3:
                raise InstanceFormatError(lineno, "expected header 'psep <n> <m>'")
            try:
                header = (int(tok[1]), int(tok[2]))
            except ValueError:
                raise InstanceFormatError(lineno, "header counts must be integers") from None
            if header[0] < 0 or header[1] < 0:
                raise InstanceFormatError(lineno, "header counts must be non-negative")
        elif kind == "v" and len(tok) == 2:
            intern(tok[1])
        elif kind == "e" and len(tok) == 3:
            edges.append((intern(tok[1]), intern(tok[2])))
            n_edge_lines += 1
        elif kind == "psep":
            raise InstanceFormatError(lineno, "duplicate header")
        else:
            raise InstanceFormatError(lineno, f"unrecognized line {' '.join(tok)!r}")
    if header is None:
        raise InstanceFormatError(0, "missing header 'psep <n> <m>'")
    n, m = header
    if len(labels) != n:
        raise InstanceFormatError(0, f"header declares {n} vertices, file names {len(labels)}")
    if n_edge_lines != m:
        raise InstanceFormatError(0, f"header declares {m} edges, file lists {n_edge_lines}")
    return Instance(Graph.from_edges(n, edges), labels)


def read_instance(path: str) -> Instance:
    with open(path) as fh:
        return parse_instance(fh.read())


def format_instance(g: Graph, labels: list[str] | None = None, comment: str | None = None) -> str:
    """Serialize with every vertex declared, so isolated vertices survive."""
    if labels is None:
        labels = [str(v) for v in g.vertices()]
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"psep {g.n} {g.m}")
    out.extend(f"v {labels[v]}" for v in g.vertices())
    out.extend(f"e {labels[u]} {labels[v]}" for u, v in g.edges())
    return "\n".join(out) + "\n"


# -- witnesses ---------------------------------------------------------------

SEPARATOR = "separator"
CROWN = "crown"


@dataclass(frozen=True)
class Witness:
    kind: str
    separator: frozenset[int] = frozenset()
    decomposition: CrownDecomposition | None = None


def parse_witness(text: str, inst: Instance, p: int) -> Witness:
    """Separator witness: ``s <label>`` lines. Crown witness: ``i``/``c``/``j``
    lines and one ``leaf <center> <label>...`` line per star leaf component.
    """
    index = inst.index()
    kind = None
    sep: set[int] = set()
    sets: dict[str, set[int]] = {"i": set(), "c": set(), "j": set()}
    stars: dict[int, list[frozenset[int]]] = {}

    def vertex(lineno: int, label: str) -> int:
        if label not in index:
            raise InstanceFormatError(lineno, f"unknown vertex label {label!r}")
        return index[label]

    for lineno, tok in _lines(text):
        if kind is None:
            if tok[0] != "witness" or len(tok) != 2 or tok[1] not in (SEPARATOR, CROWN):
                raise InstanceFormatError(lineno, "expected 'witness separator' or 'witness crown'")
            kind = tok[1]
        elif kind == SEPARATOR and tok[0] == "s" and len(tok) == 2:
            sep.add(vertex(lineno, tok[1]))
        elif kind == CROWN and tok[0] in sets and len(tok) == 2:
            sets[tok[0]].add(vertex(lineno, tok[1]))
        elif kind == CROWN and tok[0] == "leaf" and len(tok) >= 3:
            center = vertex(lineno, tok[1])
            stars.setdefault(center, []).append(
                frozenset(vertex(lineno, lab) for lab in tok[2:]))
        else:
            raise InstanceFormatError(lineno, f"unrecognized witness line {' '.join(tok)!r}")
    if kind is None:
        raise InstanceFormatError(0, "empty witness file")
    if kind == SEPARATOR:
        return Witness(SEPARATOR, separator=frozenset(sep))
    for c in sets["c"]:
        stars.setdefault(c, [])
    cd = CrownDecomposition(
        i_set=frozenset(sets["i"]), c_set=frozenset(sets["c"]), j_set=frozenset(sets["j"]),
        witness={c: tuple(v) for c, v in stars.items()}, p=p)
    return Witness(CROWN, decomposition=cd)


def format_separator_witness(sep: Iterable[int], labels: list[str]) -> str:
    return "witness separator\n" + "".join(f"s {labels[v]}\n" for v in sorted(sep))


def format_crown_witness(cd: CrownDecomposition, labels: list[str]) -> str:
    out = ["witness crown"]
    for tag, vs in (("i", cd.i_set), ("c", cd.c_set), ("j", cd.j_set)):
        out.extend(f"{tag} {labels[v]}" for v in sorted(vs))
    for center in sorted(cd.witness):
        for leaf in cd.witness[center]:
            out.append(f"leaf {labels[center]} " + " ".join(labels[v] for v in sorted(leaf)))
    return "\n".join(out) + "\n"


def write_text(path: str, text: str, stdout: TextIO) -> None:
    if path == "-":
        stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)
