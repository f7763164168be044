"""
Line-oriented directive reader shared by the text formats.

A format file is a sequence of ``@directive arg ...`` lines. Blank lines
and lines whose first non-blank character is ``#`` are skipped; there are
no trailing comments, so ``#`` stays usable as an alphabet symbol.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Union

from backend.common.errors import FormatError


@dataclass(frozen=True)
class Directive:
    """One ``@keyword args...`` line; line is 1-based"""
    line: int
    keyword: str
    args: List[str]

    def error(self, message: str) -> FormatError:
        return FormatError(f"@{self.keyword}: {message}", self.line)

    def single_int(self) -> int:
        if len(self.args) != 1:
            raise self.error(f"expected one integer, got {len(self.args)} arguments")
        return self.int_arg(self.args[0])

    def int_arg(self, token: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise self.error(f"not an integer: {token!r}") from None

    def int_args(self) -> List[int]:
        return [self.int_arg(token) for token in self.args]


def directives(text: str) -> Iterator[Directive]:
    """Split a format file into directives, skipping blanks and comments"""
    for number, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if not stripped.startswith("@"):
            raise FormatError(f"expected a directive, got {stripped.split()[0]!r}", number)
        head, *args = stripped.split()
        keyword = head[1:]
        if not keyword:
            raise FormatError("empty directive name", number)
        yield Directive(number, keyword, args)


def read_text(path: Union[str, Path]) -> str:
    return Path(path).read_text(encoding="utf-8")


def write_text(path: Union[str, Path], text: str) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    return target
