"""
TableRenderer for displaying command payloads in Rich tables.

Provides console-based rendering of the JSON-level result of a command:
- A list of records becomes one table, one row per record
- A mapping becomes a Field/Value table, with nested record lists as sub-tables
- Cyan headers, right-aligned numeric columns
- NO_COLOR environment variable support

Values are rendered from the same JSON data the json format prints, so both
formats show identical numbers.
"""

import os
from typing import Any

from rich import box
from rich.console import Console
from rich.table import Table

from bn_walls.utils.formatting import format_cell_value, is_record_list


class TableRenderer:
    """
    Renders command payloads as Rich tables.

    Features:
    - Cyan column headers
    - Auto-sized columns with configurable max width
    - Right-align numeric columns, left-align text columns
    - Nested mappings flattened to dotted field names
    """

    def __init__(self, max_col_width: int = 60) -> None:
        """
        Initialize TableRenderer.

        Args:
            max_col_width: Maximum column width in characters (default 60)
        """
        self.max_col_width = max_col_width

    def render(self, data: Any, console: Console | None = None, title: str | None = None) -> None:
        """
        Render a payload.

        Args:
            data: JSON-level payload (dict, list of dicts, or scalar)
            console: Optional Rich Console instance (creates default if None)
            title: Optional title of the top-level table
        """
        console = self._console(console)

        if is_record_list(data):
            console.print(self._record_table(data, title))
            return
        if isinstance(data, dict):
            scalars, nested = self._split(data)
            if scalars:
                console.print(self._field_table(scalars, title))
            for name, records in nested:
                console.print(self._record_table(records, name))
            return
        if isinstance(data, list) and not data:
            console.print("[yellow]No results to display[/yellow]")
            return
        console.print(format_cell_value(data))

    def _console(self, console: Console | None) -> Console:
        no_color = os.environ.get("NO_COLOR")
        if console is None:
            if no_color:
                return Console(force_terminal=False, no_color=True, legacy_windows=False)
            return Console()
        return console

    def _split(
        self, data: dict[str, Any], prefix: str = ""
    ) -> tuple[dict[str, Any], list[tuple[str, list[dict[str, Any]]]]]:
        """Separate scalar fields (flattened) from nested record lists."""
        scalars: dict[str, Any] = {}
        nested: list[tuple[str, list[dict[str, Any]]]] = []
        for key, value in data.items():
            name = f"{prefix}{key}"
            if is_record_list(value):
                nested.append((name, value))
            elif isinstance(value, dict):
                inner_scalars, inner_nested = self._split(value, f"{name}.")
                scalars.update(inner_scalars)
                nested.extend(inner_nested)
            else:
                scalars[name] = value
        return scalars, nested

    def _field_table(self, fields: dict[str, Any], title: str | None) -> Table:
        table = Table(title=title, box=box.SQUARE, header_style="bold cyan")
        table.add_column("Field", style="white", no_wrap=True)
        table.add_column("Value", max_width=self.max_col_width, overflow="ellipsis")
        for key, value in fields.items():
            table.add_row(key, format_cell_value(value))
        return table

    def _record_table(self, records: list[dict[str, Any]], title: str | None) -> Table:
        columns: list[str] = []
        flat_rows: list[dict[str, Any]] = []
        for record in records:
            flat, _ = self._split(record)
            flat_rows.append(flat)
            for key in flat:
                if key not in columns:
                    columns.append(key)

        alignments = self._determine_alignments(flat_rows, columns)
        table = Table(title=title, box=box.SQUARE, header_style="bold cyan")
        for col in columns:
            table.add_column(
                col,
                justify=alignments[col],  # type: ignore[arg-type]
                max_width=self.max_col_width,
                overflow="ellipsis",
            )
        for row in flat_rows:
            table.add_row(*(format_cell_value(row.get(col)) for col in columns))
        return table

    def _determine_alignments(
        self, rows: list[dict[str, Any]], columns: list[str]
    ) -> dict[str, str]:
        """
        Determine alignment for each column based on data types.

        Args:
            rows: Row data
            columns: Column names

        Returns:
            Dict mapping column name to alignment ("left" or "right")
        """
        alignments: dict[str, str] = {}
        for col in columns:
            is_numeric = False
            for row in rows:
                value = row.get(col)
                if value is not None:
                    is_numeric = isinstance(value, int) and not isinstance(value, bool)
                    break
            alignments[col] = "right" if is_numeric else "left"
        return alignments
