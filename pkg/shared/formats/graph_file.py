"""
Directed graph format: ``@vertices <n>`` then ``@edge <i> <j>`` lines,
vertices 1-based.
"""

from pathlib import Path
from typing import Set, Tuple, Union

from backend.common.errors import FormatError
from backend.hardness.models import DiGraph

from .common import directives, read_text, write_text


def parse_graph(text: str) -> DiGraph:
    n = None
    edges: Set[Tuple[int, int]] = set()
    for d in directives(text):
        if d.keyword == "vertices":
            if n is not None:
                raise d.error("duplicate directive")
            if edges:
                raise d.error("@vertices must precede @edge")
            n = d.single_int()
            if n < 1:
                raise d.error("a graph needs at least one vertex")
        elif d.keyword == "edge":
            if n is None:
                raise d.error("@vertices must precede @edge")
            if len(d.args) != 2:
                raise d.error("expected '<i> <j>'")
            i, j = d.int_args()
            for v in (i, j):
                if not 1 <= v <= n:
                    raise d.error(f"vertex {v} out of range [1, {n}]")
            edges.add((i, j))
        else:
            raise d.error("unknown directive")
    if n is None:
        raise FormatError("missing @vertices")
    return DiGraph.of(n, edges)


def write_graph(g: DiGraph) -> str:
    lines = [f"@vertices {g.n}"] + [f"@edge {i} {j}" for i, j in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def load_graph(path: Union[str, Path]) -> DiGraph:
    try:
        return parse_graph(read_text(path))
    except FormatError as exc:
        raise FormatError(f"{path}: {exc.message}", exc.line) from None


def save_graph(g: DiGraph, path: Union[str, Path]) -> Path:
    return write_text(path, write_graph(g))
