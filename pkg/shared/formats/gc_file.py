"""
G_c instance format.

Example::

    @vars0 x y
    @vars1 z
    @clause x y z t
    @clause -x y -z -t
    @init x=1 y=1 z=1 t=1

Literals are a variable name or its negation ``-name``; the turn variable
``t`` is implicit in V and may appear in clauses.
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from backend.common.errors import FormatError
from backend.hardness.models import Clause, GcInstance, Literal

from .common import directives, read_text, write_text


def parse_gc(text: str) -> GcInstance:
    """
    Parse a G_c file.

    Raises:
        FormatError: syntax errors (with line) or an inconsistent instance
    """
    vars0: Optional[Tuple[str, ...]] = None
    vars1: Optional[Tuple[str, ...]] = None
    clauses: List[Clause] = []
    alpha: Dict[str, bool] = {}
    init_line = None

    for d in directives(text):
        if d.keyword in ("vars0", "vars1"):
            if (vars0 if d.keyword == "vars0" else vars1) is not None:
                raise d.error("duplicate directive")
            if d.keyword == "vars0":
                vars0 = tuple(d.args)
            else:
                vars1 = tuple(d.args)
        elif d.keyword == "clause":
            if len(d.args) != 4:
                raise d.error(f"expected 4 literals, got {len(d.args)}")
            if any(token in ("", "-") for token in d.args):
                raise d.error("empty literal")
            clauses.append(tuple(Literal.parse(token) for token in d.args))
        elif d.keyword == "init":
            if init_line is not None:
                raise d.error(f"duplicate directive (first on line {init_line})")
            init_line = d.line
            for token in d.args:
                name, sep, value = token.partition("=")
                if not sep or value not in ("0", "1") or not name:
                    raise d.error(f"expected name=0|1, got {token!r}")
                if name in alpha:
                    raise d.error(f"{name} assigned twice")
                alpha[name] = value == "1"
        else:
            raise d.error("unknown directive")

    if vars0 is None or vars1 is None:
        raise FormatError("missing @vars0 or @vars1")
    if init_line is None:
        raise FormatError("missing @init")
    try:
        return GcInstance(vars0, vars1, tuple(clauses), alpha)
    except ValueError as exc:
        raise FormatError(str(exc), init_line) from None


def write_gc(instance: GcInstance) -> str:
    lines = [
        " ".join(["@vars0", *instance.vars0]),
        " ".join(["@vars1", *instance.vars1]),
    ]
    for clause in instance.clauses:
        lines.append(" ".join(["@clause", *(lit.name for lit in clause)]))
    lines.append(" ".join(["@init", *(f"{v}={int(instance.alpha_init[v])}" for v in instance.variables)]))
    return "\n".join(lines) + "\n"


def load_gc(path: Union[str, Path]) -> GcInstance:
    try:
        return parse_gc(read_text(path))
    except FormatError as exc:
        raise FormatError(f"{path}: {exc.message}", exc.line) from None


def save_gc(instance: GcInstance, path: Union[str, Path]) -> Path:
    return write_text(path, write_gc(instance))
