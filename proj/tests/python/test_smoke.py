"""Smoke tests for the python bindings; plain unittest, no extra deps."""

import json
import os
import unittest

import tcatlib

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")


def fixture(name):
    with open(os.path.join(FIXTURES, name)) as handle:
        return handle.read()


class SimplexTests(unittest.TestCase):
    def test_hom_counts(self):
        self.assertEqual(len(tcatlib.simplex_hom(1, 1)), 3)
        self.assertEqual(len(tcatlib.simplex_hom(1, 1, top_preserving=True)), 2)
        # binomial counts at m = n = 4
        self.assertEqual(len(tcatlib.simplex_hom(4, 4)), 126)
        self.assertEqual(len(tcatlib.simplex_hom(4, 4, top_preserving=True)), 70)

    def test_tables_are_monotone(self):
        for values in tcatlib.simplex_hom(2, 3):
            self.assertEqual(values, sorted(values))


class MonadTests(unittest.TestCase):
    def test_laws(self):
        for kind in ("identity", "maybe", "writer-z2", "list"):
            report = tcatlib.monad_laws(kind, ["a", "b"], 3)
            self.assertTrue(report["ok"], msg=f"{kind}: {report['violations']}")


class DocumentTests(unittest.TestCase):
    def test_nerve_sizes(self):
        sizes = tcatlib.nerve_level_sizes(fixture("ordinal1.json"), depth=4)
        self.assertEqual(sizes, [2, 3, 4, 5, 6])
        bar = tcatlib.nerve_level_sizes(fixture("bar_z2.json"), depth=4)
        self.assertEqual(bar, [1, 2, 4, 8, 16])

    def test_segal(self):
        self.assertTrue(tcatlib.segal(fixture("ordinal1.json")))
        self.assertFalse(tcatlib.segal(fixture("mutated_nerve.json"), depth=2))

    def test_simplicial_identities(self):
        report = tcatlib.simplicial_identities(fixture("bar_z2.json"), depth=3)
        self.assertTrue(report["ok"])
        self.assertGreater(report["checked"], 0)

    def test_parse_roundtrip_is_idempotent(self):
        canonical = tcatlib.parse_roundtrip(fixture("multicat_list.json"))
        self.assertEqual(tcatlib.parse_roundtrip(canonical), canonical)

    def test_bad_document_raises(self):
        with self.assertRaises(tcatlib.DocumentError):
            tcatlib.parse_roundtrip("{}")

    def test_capability_error(self):
        with self.assertRaises(tcatlib.CapabilityError):
            tcatlib.run("comonad", [fixture("multicat_list.json")], 3)


class CommandTests(unittest.TestCase):
    def test_validate(self):
        report = tcatlib.run("validate", [fixture("ordinal1.json")])
        self.assertTrue(report["ok"])
        names = {c["name"] for c in report["checks"]}
        self.assertIn("associativity", names)
        self.assertIn("segal", names)

    def test_power(self):
        report = tcatlib.run("power-delta1", [fixture("ordinal1.json")], 2)
        self.assertTrue(report["ok"])
        self.assertEqual(report["fields"]["power-levels"], "3,6,10")

    def test_comonad(self):
        report = tcatlib.run("comonad", [fixture("bar_z2.json")], 3)
        self.assertTrue(report["ok"])

    def test_hom_count(self):
        count = tcatlib.hom_count(fixture("ordinal1.json"), fixture("ordinal1.json"), 1)
        self.assertEqual(count, 6)

    def test_report_shape(self):
        report = tcatlib.run("counts", [fixture("discrete_maybe.json")])
        self.assertTrue(report["ok"])
        json.dumps(report)  # serializable


if __name__ == "__main__":
    unittest.main()
