import csv
import io
import json
import math

import pytest

from harmlog import tables
from harmlog.errors import DomainError
from harmlog.tables import ERRATA, TableId


def rows_by_inputs(report, **inputs):
    matches = [r for r in report.rows if all(r.inputs.get(k) == v for k, v in inputs.items())]
    assert matches, f"no row with inputs {inputs}"
    return matches


class TestTable21:
    def test_all_rows_match(self):
        report = tables.build(TableId.T2_1)
        assert len(report.rows) == 10
        assert all(r.match for r in report.rows)


class TestTable22:
    def test_scaled_rows_match(self):
        report = tables.build(TableId.T2_2)
        scaled = [r for r in report.rows if r.inputs["formula"] == "exp_scaled_m100"]
        assert len(scaled) == 8
        assert all(r.match for r in scaled)

    def test_singular_cell_and_erratum(self):
        report = tables.build(TableId.T2_2)
        (row,) = rows_by_inputs(report, x=1.0, formula="exp_full")
        assert row.calculated is None
        assert "degenerates" in row.erratum
        (slip,) = rows_by_inputs(report, x=2.0, formula="exp_full")
        assert not slip.match
        assert slip.erratum  # printed 2.00591 is an arithmetic slip


class TestTable23:
    def test_finite_rows_match(self):
        report = tables.build(TableId.T2_3)
        finite = [r for r in report.rows if r.inputs["x"] != 1]
        assert len(finite) == 8
        assert all(r.match for r in finite)

    def test_singular_rows(self):
        report = tables.build(TableId.T2_3)
        for row in rows_by_inputs(report, x=1):
            assert math.isinf(row.calculated)
            assert row.printed == "∞"
            assert row.match


class TestTable24:
    def test_nine_rows_match(self):
        report = tables.build(TableId.T2_4)
        clean = [r for r in report.rows if r.inputs["x"] != 30]
        assert len(clean) == 9
        assert all(r.match for r in clean)

    def test_row_30_flagged(self):
        report = tables.build(TableId.T2_4)
        (row,) = rows_by_inputs(report, x=30)
        assert not row.match
        assert "3.49119" in row.erratum and "3.40120" in row.erratum


class TestTable25:
    def test_seven_rows_match(self):
        report = tables.build(TableId.T2_5)
        clean = [r for r in report.rows if not r.erratum]
        assert len(clean) == 7
        assert all(r.match for r in clean)

    def test_19_over_10_row_flagged(self):
        report = tables.build(TableId.T2_5)
        (row,) = rows_by_inputs(report, m=10, p=19, q=10)
        assert not row.match
        assert "exact rational" in row.erratum
        # Even the slipped print is within 1e-7 relative of the true sum.
        assert abs(row.calculated - float(row.printed)) < 1e-7


class TestTable26:
    def test_clean_rows_match(self):
        report = tables.build(TableId.T2_6)
        assert len(report.rows) == 16
        for row in report.rows:
            if ("2.6", f"n={row.inputs['n']} calculated") in ERRATA:
                assert not row.match
                assert "swapped" in row.erratum
            else:
                assert row.match

    def test_n10_actual_cell_is_the_corrupted_one(self):
        (row,) = rows_by_inputs(tables.build(TableId.T2_6), n=10)
        assert row.match  # calculated 3621048 agrees with the formula
        assert "dropped digit" in row.erratum


class TestNrGammaTable:
    def test_three_variants_side_by_side(self):
        report = tables.build(TableId.NR_GAMMA)
        assert [r.inputs["variant"] for r in report.rows] == [
            "integral",
            "series",
            "limit",
        ]
        assert all(r.calculated is not None for r in report.rows)

    def test_integral_row_matches_print(self):
        report = tables.build(TableId.NR_GAMMA)
        (row,) = rows_by_inputs(report, variant="integral")
        assert row.match


class TestSerialization:
    def test_csv_shape(self):
        text = tables.generate(TableId.T2_4, "csv")
        reader = list(csv.reader(io.StringIO(text)))
        assert reader[0] == [
            "x",
            "calculated",
            "reference",
            "percent_error",
            "printed",
            "match",
            "erratum",
        ]
        assert len(reader) == 11

    def test_byte_stable(self):
        for fmt in ("csv", "markdown", "json"):
            assert tables.generate(TableId.T2_5, fmt) == tables.generate(
                TableId.T2_5, fmt
            )

    def test_json_round_trips(self):
        text = tables.generate(TableId.T2_6, "json")
        parsed = json.loads(text)
        assert json.dumps(parsed, indent=2) + "\n" == text
        assert len(parsed) == 16

    def test_markdown_pipe_table(self):
        text = tables.generate(TableId.T2_1, "markdown")
        lines = text.splitlines()
        assert lines[0].startswith("| x |")
        assert set(lines[1].replace(" ", "").strip("|")) <= {"-", "|"}

    def test_unknown_format_rejected(self):
        with pytest.raises(DomainError):
            tables.generate(TableId.T2_1, "xml")


class TestSweeps:
    def test_ln_rational_error_shrinks(self):
        report = tables.sweep_ln_rational(1, 2, [25, 50, 100, 200, 400])
        errors = [abs(r.percent_error) for r in report.rows]
        assert errors == sorted(errors, reverse=True)

    def test_factorial_sweep_matches_table(self):
        grid = [2, 5, 45, 160]
        report = tables.sweep_factorial(grid)
        by_n = {r.inputs["n"]: r.percent_error for r in report.rows}
        assert by_n[5] == pytest.approx(-0.44759, abs=1e-4)
        assert by_n[160] == pytest.approx(-0.01022, abs=1e-4)

    def test_nr_sweep_has_three_sequences(self):
        report = tables.sweep_nr([10, 100, 1000])
        variants = {r.inputs["variant"] for r in report.rows}
        assert variants == {"integral", "series", "limit"}
        assert len(report.rows) == 9

    def test_empty_grid_rejected(self):
        with pytest.raises(DomainError):
            tables.sweep_ln_rational(1, 2, [])
