#!/usr/bin/env python3
"""Run each mcc subcommand with --format json and validate against schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("flag", ["flag", "--mu", "2,2", "--index", "1,3/2,4"], 0),
    ("flag", ["flag", "--mu", "1,2", "--index", "2/1,3", "--emit", "weightfn"], 0),
    ("flag", ["flag", "--mu", "2,2", "--index", "1,3/2,4", "--emit", "axioms"], 0),
    ("flag", ["flag", "--mu", "2,2", "--index", "1,3/2,4", "--emit", "axioms", "--corrupt", "3,4/1,2"], 1),
    ("matsch", ["matsch", "--k", "2", "--n", "3", "--J", "1,3", "--sum-check"], 0),
    ("matsch", ["matsch", "--k", "1", "--n", "2", "--J", "2"], 0),
    ("a2", ["a2", "--k", "2", "--n", "2", "--r", "1"], 0),
    ("a2", ["a2", "--k", "2", "--n", "3", "--r", "0", "--method", "sieve"], 0),
    ("a2", ["a2", "--k", "1", "--n", "1", "--r", "0", "--q-display"], 0),
    ("polytope", ["polytope", "--vars", "a,b", "--expr", "(1-a)*(1+y*b)"], 0),
    ("polytope", ["polytope", "--vars", "a,b", "--expr", "(1-a)*(1+y*b)", "--within", "(1-a^2)*(1+y*b^2)"], 0),
    ("qbinom", ["qbinom", "--a", "4", "--r", "2"], 0),
    ("limit", ["limit", "--expr", "(1+y*xi)/(1-xi)"], 0),
    ("limit", ["limit", "--expr", "(1+y*xi)/(1-xi)", "--s", "-1"], 0),
    ("selftest", ["selftest"], 0),
]


def main() -> int:
    mcc, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, args, expected in CASES:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        proc = subprocess.run([mcc, "--format", "json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != expected:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected}\n{proc.stderr}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema, cls=jsonschema.Draft202012Validator)
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"FAIL {label}: {e}")
            failures += 1
            continue
        print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
