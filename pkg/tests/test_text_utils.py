import time
import unittest

from library import Stopwatch, camel_case, clean_text


class TestCleanText(unittest.TestCase):

    def test_strips_whitespace(self):
        self.assertEqual(clean_text("  Pump \n"), "Pump")

    def test_blank_is_none(self):
        self.assertIsNone(clean_text(" \t\n"))

    def test_none_input(self):
        self.assertIsNone(clean_text(None))

    def test_inner_whitespace_kept(self):
        self.assertEqual(clean_text(" Max  Temp "), "Max  Temp")


class TestCamelCase(unittest.TestCase):

    def test_words(self):
        self.assertEqual(camel_case("Preferred Name"), "preferredName")

    def test_already_camel(self):
        self.assertEqual(camel_case("unitId"), "unitId")

    def test_separators(self):
        self.assertEqual(camel_case("source-of-definition"), "sourceOfDefinition")
        self.assertEqual(camel_case("value_format"), "valueFormat")

    def test_empty(self):
        self.assertEqual(camel_case(""), "")
        self.assertEqual(camel_case("--"), "")


class TestStopwatch(unittest.TestCase):

    def test_measures_block(self):
        with Stopwatch() as watch:
            time.sleep(0.01)
        self.assertGreaterEqual(watch.ms, 5)

    def test_frozen_after_exit(self):
        with Stopwatch() as watch:
            pass
        first = watch.ms
        time.sleep(0.01)
        self.assertEqual(watch.ms, first)


if __name__ == "__main__":
    unittest.main()
