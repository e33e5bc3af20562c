"""

The `cursor` module defines `Cursor`, a list of lines and nested cursors that renders as indented text. Replay reports and the CLI catalog tables are built with it.

Example:
    ```python
    cursor = Cursor("SMT14-P1")
    with cursor.auto_indent() as body:
        body.append("1  t1 := RECIP 12  0;5  ok")
    str(cursor)  # 'SMT14-P1\\n  1  t1 := RECIP 12  0;5  ok'
    ```
"""
from contextlib import contextmanager
from typing import Iterable, Sequence, Union

__all__ = ("Cursor",)


class Cursor(list[Union[str, "Cursor"]]):
    """
    Text lines held at one indentation level.

    Attributes:
        indent (int):
             The number of spaces each line of this cursor is indented by.

    """

    def __init__(self, *data: Union[str, "Cursor"], indent: int = 0):
        super().__init__(data)
        self.indent = indent

    def __str__(self):
        content = "\n".join(str(item) for item in self)
        if not content:
            return ""
        return "\n".join(f"{' ' * self.indent}{line}" if line else line for line in content.split("\n"))

    @contextmanager
    def auto_indent(self, indent: int = 2):
        """Yields a nested cursor indented `indent` spaces further than this one."""
        formatted = Cursor(indent=indent)
        self.append(formatted)
        yield formatted

    def table(self, rows: Iterable[Sequence[str]], gap: int = 2):
        """Appends rows as left-aligned columns; the last column is not padded."""
        rows = [list(row) for row in rows]
        if not rows:
            return
        widths = [max(len(row[column]) for row in rows) for column in range(len(rows[0]))]
        for row in rows:
            cells = [cell.ljust(width + gap) for cell, width in zip(row[:-1], widths)]
            self.append(("".join(cells) + row[-1]).rstrip())
