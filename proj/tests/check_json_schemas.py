"""Validates every JSON-emitting CLI command against the shipped schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

BAD_TABLE = """generator a even
generator b even
generator c even
bracket [a,b] = a
bracket [a,c] = b
"""


def run(args):
    proc = subprocess.run([CLI, *args, "--json"], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def main():
    with tempfile.TemporaryDirectory() as tmp:
        bad = pathlib.Path(tmp) / "bad.alg"
        bad.write_text(BAD_TABLE)
        cases = [
            ("basis_report", ["center", "--builtin", "gl(1,1)", "--deg", "2"], 0),
            ("basis_report", ["anticenter", "--builtin", "gl(1,1)", "--deg", "1"], 0),
            ("basis_report", ["hcenter", "--builtin", "gl(1,1)", "--deg", "2"], 0),
            ("validate", ["validate", "--builtin", "gl(2,1)"], 0),
            ("validate", ["validate", "--file", str(bad)], 1),
            ("normal_form", ["nf", "--builtin", "gl(1,1)", "--bosonized", "t*u*t"], 0),
            ("dg", ["dg", "--builtin", "gl(1,1)"], 0),
            ("growth", ["growth", "--builtin", "gl(1,1)"], 0),
            ("ispi", ["ispi", "--builtin", "abelian(1|2)"], 0),
            ("supertrace", ["str", "--blocks", "2,1", "--matrix", "1 0 0; 0 1/2 0; 0 0 3"], 0),
            ("verify", ["verify"], 0),
        ]
        failures = 0
        for schema_name, args, want_code in cases:
            schema = json.loads((SCHEMAS / f"{schema_name}.schema.json").read_text())
            code, out = run(args)
            try:
                if code != want_code:
                    raise AssertionError(f"exit code {code}, expected {want_code}")
                jsonschema.validate(json.loads(out), schema)
                print(f"ok   {' '.join(args)}")
            except (AssertionError, jsonschema.ValidationError, json.JSONDecodeError) as err:
                failures += 1
                print(f"FAIL {' '.join(args)}: {err}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
