"""Runs the front end and validates every JSON report against docs/schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "docs" / "schema"

RUNS = [
    ("analysis", ["analyze"]),
    ("analysis", ["analyze", "--m1", "(|3,2)", "--m2", "(1,0|)", "--convention", "both"]),
    ("analysis", ["analyze", "--m1", "(|3,2)", "--m2", "(1,0|)", "--alpha-value", "1/2", "--convention", "both"]),
    ("analysis", ["analyze", "--m2", "(|2)", "--alpha-offset", "-1", "--alpha-value", "1/3"]),
    ("spectrum", ["spectrum", "--m2", "(|1)", "--alpha-offset", "-1", "--alpha-value", "1/2", "--tau", "0",
                  "--window", "-1,4.7"]),
    ("spectrum", ["spectrum", "--alpha-value", "1/3", "--tau", "inf"]),
    ("polys", ["polys", "--m1", "(|3,2)", "--m2", "(1,0|)", "--count", "3"]),
    ("polys", ["polys", "--m2", "(|1)", "--alpha-offset", "-1", "--alpha-value", "1/2"]),
    ("oracle_check", ["oracle-check", "--max-index", "1"]),
    ("oracle_check", ["oracle-check", "--max-index", "1", "--perturb"]),
]


def main() -> int:
    exe = sys.argv[1]
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in SCHEMAS.glob("*.schema.json")}
    failures = 0
    for name, args in RUNS:
        out = subprocess.run([exe, *args, "--out", "json"], capture_output=True, text=True, check=False).stdout
        try:
            jsonschema.validate(json.loads(out), schemas[name])
            print(f"valid   {name}: {' '.join(args)}")
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"INVALID {name}: {' '.join(args)}: {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
