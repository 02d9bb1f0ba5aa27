"""b-file parsing and sequence cross-check tests.

The positive-match files are built from values published independently
of this package's generators (the beta and Bell lists, the triangle
rows), so a match genuinely ties the code to external data.
"""

import pytest

from bellnum import oeis

BETA_PUBLISHED = [1, 0, 1, 1, 4, 11, 41, 162, 715, 3425, 17722, 98253, 580317]
BELL_PUBLISHED = [1, 1, 2, 5, 15, 52, 203, 877, 4140]
ARIMA_LINEAR_HEAD = [1, 1, 1, 2, 2, 1, 5, 6, 3, 1, 15, 20, 12, 4, 1, 52, 75, 50, 20, 5, 1]
STIRLING_LINEAR_HEAD = [1, -1, 1, 2, -3, 1, -6, 11, -6, 1, 24, -50, 35, -10, 1]


def lines(values, start=0):
    return "\n".join(f"{i} {v}" for i, v in enumerate(values, start=start))


class TestParsing:
    def test_comments_and_blanks_ignored(self):
        text = "# header\n\n0 1\n1 1\n# middle\n2 2\n"
        entries = oeis.parse_bfile(text)
        assert [(e.index, e.value) for e in entries] == [(0, 1), (1, 1), (2, 2)]

    def test_malformed_line_reports_number(self):
        with pytest.raises(oeis.BFileParseError) as exc:
            oeis.parse_bfile("0 1\nabc\n")
        assert exc.value.line_number == 2

    def test_non_integer_field(self):
        with pytest.raises(oeis.BFileParseError):
            oeis.parse_bfile("0 x")

    def test_three_fields(self):
        with pytest.raises(oeis.BFileParseError):
            oeis.parse_bfile("0 1 2")

    def test_indices_strictly_increasing(self):
        with pytest.raises(oeis.BFileParseError):
            oeis.parse_bfile("3 5\n3 6")

    def test_negative_values_allowed(self):
        assert oeis.parse_bfile("1 -6")[0].value == -6


class TestChecking:
    def test_bell_matches_published(self):
        r = oeis.check_bfile("bell", lines(BELL_PUBLISHED))
        assert r.ok and r.compared == len(BELL_PUBLISHED)

    def test_beta_matches_published(self):
        r = oeis.check_bfile("A000296", lines(BETA_PUBLISHED))
        assert r.ok
        assert BETA_PUBLISHED[5] == 11

    def test_arima_triangle_matches_published(self):
        r = oeis.check_bfile("arima", lines(ARIMA_LINEAR_HEAD, start=1))
        assert r.ok and r.compared == len(ARIMA_LINEAR_HEAD)

    def test_stirling_triangle(self):
        r = oeis.check_bfile("stirling", lines(STIRLING_LINEAR_HEAD, start=1))
        assert r.ok

    def test_mismatch_reported_with_expected_value(self):
        text = lines(BELL_PUBLISHED) + "\n9 11111"
        r = oeis.check_bfile("bell", text)
        assert not r.ok
        assert r.first_mismatch.index == 9
        assert r.expected == 21147

    def test_partial_file_with_offset_start(self):
        # a b-file tail starting mid-sequence still matches
        text = lines(BELL_PUBLISHED[4:], start=4)
        r = oeis.check_bfile("bell", text)
        assert r.ok and r.compared == len(BELL_PUBLISHED) - 4

    def test_unknown_sequence(self):
        with pytest.raises(KeyError):
            oeis.check_bfile("A999999", "0 1")

    def test_max_terms_cap(self):
        r = oeis.check_bfile("bell", lines(BELL_PUBLISHED), max_terms=3)
        assert r.ok and r.compared == 3

    def test_registry_self_consistency(self):
        # every registered generator yields enough terms and matches a
        # b-file generated from itself (offset handling round-trip)
        seen = set()
        for key, spec in oeis.REGISTRY.items():
            if spec.oeis_id in seen:
                continue
            seen.add(spec.oeis_id)
            values = spec.values(25)
            assert len(values) == 25
            text = lines(values, start=spec.first_index)
            r = oeis.check_bfile(key, text)
            assert r.ok and r.compared == 25, spec.oeis_id
