"""
Unit tests for TableRenderer.

Tests record tables, field/value tables, nested sub-tables and cell formatting.
"""

from io import StringIO
from typing import Any

import pytest
from rich.console import Console

from bn_walls.renderers.table import TableRenderer
from bn_walls.utils.formatting import format_cell_value, is_record_list


def render(data: Any, title: str | None = None) -> str:
    output = StringIO()
    console = Console(file=output, width=160, legacy_windows=False, no_color=True)
    TableRenderer().render(data, console=console, title=title)
    return output.getvalue()


class TestTableCreation:
    """Test Rich table creation and basic rendering."""

    def test_record_list(self) -> None:
        """Should render one row per record."""
        result = render(
            [
                {"k": 1, "chi": 1, "moduli_dim": 13, "rho": 13},
                {"k": 2, "chi": 1, "moduli_dim": 13, "rho": 11},
            ],
            title="quadric",
        )
        assert "quadric" in result
        assert "moduli_dim" in result
        assert "13" in result
        assert "11" in result

    def test_mapping_with_nested_records(self) -> None:
        """Scalars go to a Field/Value table, record lists to sub-tables."""
        result = render(
            {
                "n": 14,
                "equivalence_asserted": True,
                "rows": [{"k": 1, "rho": 69}, {"k": 3, "rho": -1}],
            }
        )
        assert "Field" in result
        assert "equivalence_asserted" in result
        assert "yes" in result
        assert "rows" in result
        assert "69" in result
        assert "-1" in result

    def test_nested_mapping_is_flattened(self) -> None:
        result = render({"chern": {"rank": 2, "c2": 4}})
        assert "chern.rank" in result
        assert "chern.c2" in result

    def test_empty_list(self) -> None:
        assert "No results" in render([])

    def test_scalar(self) -> None:
        assert render(1).strip() == "1"


class TestAlignment:
    """Test numeric detection for column alignment."""

    def test_integer_columns_right_aligned(self) -> None:
        renderer = TableRenderer()
        rows = [{"k": 1, "label": "a", "flag": True}]
        alignments = renderer._determine_alignments(rows, ["k", "label", "flag"])
        assert alignments == {"k": "right", "label": "left", "flag": "left"}


class TestFormatting:
    """Test cell value formatting."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            (None, ""),
            (True, "yes"),
            (False, "no"),
            ([1, -2], "(1, -2)"),
            (["a", "b"], "a, b"),
            ([[1, 0], [0, 1]], "(1, 0), (0, 1)"),
            ("1/2", "1/2"),
            (-31, "-31"),
        ],
    )
    def test_format_cell_value(self, value: Any, expected: str) -> None:
        assert format_cell_value(value) == expected

    def test_is_record_list(self) -> None:
        assert is_record_list([{"a": 1}])
        assert not is_record_list([])
        assert not is_record_list([1, 2])
