"""Runs the qes CLI on representative inputs: exit codes, schema validity of
every JSON payload, byte-identical reruns and the verify CSV layout."""
import json
import os
import subprocess
import sys
import unittest
from pathlib import Path

import jsonschema

CLI = sys.argv.pop(1) if len(sys.argv) > 1 else "build/qes"
SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"

CASES = [
    ("catalog_list", ["catalog", "list"], 0),
    ("catalog_show", ["catalog", "show", "Wplus", "--k", "2", "--n", "0", "--m", "3"], 0),
    ("catalog_show", ["catalog", "show", "S", "--n", "2", "--m", "1", "--index", "2"], 0),
    ("invariance", ["invariance", "--op", "J+", "--space", "v1", "--n", "3", "--m", "2"], 0),
    ("invariance", ["invariance", "--op", "J+", "--space", "p3", "--n", "2", "--m", "2"], 2),
    ("algebra", ["algebra", "--relation", "nlalgebra", "--n", "2", "--m", "2"], 0),
    ("algebra", ["algebra", "--relation", "so3", "--n", "3", "--tilde"], 0),
    ("hamiltonian", ["hamiltonian", "--case", "polypot", "--m", "3", "--kappa0", "1/2"], 0),
    ("hamiltonian", ["hamiltonian", "--case", "lame", "--m", "1"], 2),
    ("hamiltonian", ["hamiltonian", "--case", "bosehubbard"], 0),
    ("recurrence", ["recurrence", "--case", "lame", "--m", "1", "--to", "3"], 0),
    ("recurrence", ["recurrence", "--case", "bosehubbard", "--M", "2", "--parity", "1"], 0),
    ("spectrum", ["spectrum", "--case", "lame", "--m", "1", "--delta", "1/2", "--k2", "1/3"], 0),
    ("spectrum", ["spectrum", "--case", "bosehubbard", "--M", "2"], 0),
    ("spectrum", ["spectrum", "--case", "polypot", "--m", "2"], 0),
    ("verify", ["verify", "--case", "bosehubbard", "--grid", "400"], 0),
    ("verify", ["verify", "--case", "polypot", "--m", "2", "--grid", "400", "--tol", "1e-15"], 2),
    ("sweep", ["sweep", "--case", "lame", "--vary", "m=0,1", "--grid", "400"], 0),
]


def run(args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


class CliSchema(unittest.TestCase):
    def test_payloads_validate(self):
        for schema, args, code in CASES:
            with self.subTest(args=" ".join(args)):
                out = run(args)
                self.assertEqual(out.returncode, code, out.stderr)
                spec = json.loads((SCHEMAS / f"{schema}.json").read_text())
                jsonschema.validate(json.loads(out.stdout), spec)

    def test_rerun_is_byte_identical(self):
        args = ["spectrum", "--case", "lame", "--m", "2", "--k2", "2/5"]
        self.assertEqual(run(args).stdout, run(args).stdout)
        sweep = ["sweep", "--case", "lame", "--vary", "m=0,1", "--vary", "k2=1/3,1/2", "--grid", "400"]
        one = run(sweep, {**os.environ, "QES_WORKERS": "1"})
        two = run(sweep, {**os.environ, "QES_WORKERS": "3"})
        self.assertEqual(one.returncode, 0)
        self.assertEqual(one.stdout, two.stdout)

    def test_validation_errors_exit_1(self):
        for args in (
            ["spectrum", "--case", "lame", "--delta", "0.5"],
            ["spectrum", "--case", "lame", "--k2", "3/2"],
            ["verify", "--case", "bosehubbard", "--M", "7/4"],
            ["invariance", "--op", "nope"],
            ["catalog", "show", "Wplus", "--k", "1", "--n", "2", "--m", "3"],
            ["frobnicate"],
        ):
            with self.subTest(args=" ".join(args)):
                self.assertEqual(run(args).returncode, 1)
        self.assertEqual(run(["sweep", "--case", "lame", "--vary", "m=0"], {**os.environ, "QES_WORKERS": "x"}).returncode, 1)

    def test_verify_csv_columns(self):
        out = run(["verify", "--case", "lame", "--m", "1", "--grid", "400", "--emit", "csv"])
        rows = out.stdout.strip().split("\n")
        self.assertEqual(rows[0], "case,m,delta,k2,level,algebraic,numeric,residual")
        self.assertEqual(len(rows), 5)


if __name__ == "__main__":
    unittest.main()
