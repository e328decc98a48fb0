"""
Unit tests for the form text format and the shipped fixtures.
"""

import sys
import tempfile
import unittest
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root / 'src'))

from special_forms.construct import FIXTURE_NAMES, catalog
from special_forms.errors import FormParseError
from special_forms.exterior import SpecialForm
from special_forms.formio import format_form, load_form, parse_form, save_form

FIXTURES = project_root / "fixtures"

# fixture file -> catalog name
SHIPPED = {
    "epsilon4.form": "epsilon:4",
    "kahler3.form": "kahler:3",
    "g2.form": "g2",
    "star_g2.form": "star_g2",
    "spin7.form": "spin7",
    "t17.form": "t17",
    "su4u1_8d.form": "su4u1_8d",
    "phiA.form": "phiA",
    "omega10.form": "omega10",
}


class TestParse(unittest.TestCase):
    """Test parsing of the text format."""

    def test_parse_with_comments(self):
        text = "# psi fragment\n\ndim 7\ndeg 3\n+1 1 2 7  # first\n-1 1 3 6\n"
        f = parse_form(text)
        self.assertEqual(f, SpecialForm(7, 3, {(1, 2, 7): 1, (1, 3, 6): -1}))

    def test_zero_ten(self):
        text = "dim 10\ndeg 2\n+1 9 0\n"
        self.assertEqual(parse_form(text, zero_ten=True), SpecialForm(10, 2, {(9, 10): 1}))
        with self.assertRaises(FormParseError):
            parse_form(text)

    def test_errors_carry_line_numbers(self):
        cases = {
            "dim 4\ndeg 2\n1 1 2\n": 3,          # unsigned coefficient
            "dim 4\ndeg 2\n+1 2 1\n": 3,         # not increasing
            "dim 4\ndeg 2\n+1 1 2\n-1 1 2\n": 4,  # duplicate
            "dim 4\ndeg 2\n+1 1 5\n": 3,         # outside the space
            "dim 4\ndeg 2\n+1 1 2 3\n": 3,       # wrong degree
            "dim 4\ndeg 5\n": 2,
            "deg 4\n": 1,
        }
        for text, line in cases.items():
            with self.assertRaises(FormParseError) as ctx:
                parse_form(text)
            self.assertEqual(ctx.exception.line_number, line, text)

    def test_missing_header(self):
        with self.assertRaises(FormParseError):
            parse_form("# nothing\n")

    def test_format_is_sorted_and_signed(self):
        f = SpecialForm(4, 2, {(3, 4): -1, (1, 2): 1})
        self.assertEqual(format_form(f), "dim 4\ndeg 2\n+1 1 2\n-1 3 4\n")

    def test_format_zero_ten_and_comment(self):
        f = SpecialForm(10, 2, {(9, 10): 1})
        self.assertEqual(format_form(f, zero_ten=True, comment="plane"), "# plane\ndim 10\ndeg 2\n+1 9 0\n")


class TestFixtures(unittest.TestCase):
    """Test that the shipped fixtures agree with the catalog."""

    def test_fixtures_match_catalog(self):
        for filename, name in SHIPPED.items():
            f = catalog(name)
            loaded = load_form(FIXTURES / filename, zero_ten=(f.dim == 10))
            self.assertEqual(loaded, f, filename)

    def test_fixtures_round_trip(self):
        for filename in SHIPPED:
            path = FIXTURES / filename
            text = path.read_text(encoding="utf-8")
            zero_ten = "dim 10" in text
            f = parse_form(text, zero_ten=zero_ten)
            comment = text.splitlines()[0].lstrip("# ")
            self.assertEqual(format_form(f, zero_ten=zero_ten, comment=comment), text, filename)

    def test_default_fixture_list_is_shipped(self):
        self.assertEqual(sorted(FIXTURE_NAMES), sorted(SHIPPED.values()))

    def test_save_and_load(self):
        f = catalog("g2")
        with tempfile.TemporaryDirectory() as tmp:
            path = save_form(f, Path(tmp) / "nested" / "g2.form")
            self.assertEqual(load_form(path), f)


if __name__ == '__main__':
    unittest.main()
