"""Runs each fembed subcommand and validates its stdout against the shipped schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

fembed, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = root / "schemas"
samples = root / "samples"

registry = Registry()
for path in schemas.glob("*.schema.json"):
    registry = registry.with_resource(path.name, Resource.from_contents(json.loads(path.read_text())))


def s(name):
    return str(samples / name)


CASES = [
    ("embed-verdict", ["embed", "--set-a", s("a_small.json"), "--set-b", s("evens_40.json"), "--family", s("affine.json")], 0),
    ("embed-verdict", ["embed", "--set-a", s("words_a.json"), "--set-b", s("words.json"), "--family", s("suffix_a.json")], 0),
    ("embed-probes", ["embed", "--set-a", s("evens_40.json"), "--set-b", s("evens_40.json"), "--family", s("translations.json"), "--probes", "2,3"], 0),
    ("rich-certificate", ["rich", "--set", s("primes_200.json"), "--detect", "ap"], 0),
    ("rich-certificate", ["rich", "--set", s("primes_200.json"), "--detect", "gap"], 0),
    ("rich-certificate", ["rich", "--set", s("evens_40.json"), "--detect", "gap0"], 0),
    ("rich-certificate", ["rich", "--set", s("evens_40.json"), "--detect", "poly", "--D", "0,2"], 0),
    ("rich-thick", ["rich", "--set", s("evens_40.json"), "--detect", "thick", "--lengths", "0,1"], 0),
    ("rich-syndetic", ["rich", "--set", s("primes_200.json"), "--detect", "ps", "--g", "3", "--lengths", "4,40"], 0),
    ("embed-probes", ["rich", "--set", s("evens_40.json"), "--detect", "maxset", "--family", s("affine.json")], 0),
    ("density-report", ["density", "--set", s("evens_10k.json"), "--net", "interval:50", "--tail", "40"], 0),
    ("density-monotone", ["density", "verify-monotone", "--pairs", s("pairs.json"), "--family", s("translations.json"), "--tol", "0.02"], 0),
    ("pr-coloring", ["pr", "search", "--pattern", "ap:3", "--colors", "2", "--n", "8"], 0),
    ("pr-coloring", ["pr", "search", "--pattern", "ap:3", "--colors", "2", "--n", "9"], 0),
    ("pr-threshold", ["pr", "threshold", "--pattern", "schur", "--colors", "2", "--nmax", "30"], 0),
    ("pr-threshold", ["pr", "threshold", "--pattern", "ap:3", "--colors", "2", "--nmax", "5"], 0),
    ("pr-equation", ["pr", "equation", "--poly", "x^2+y^2-z^2", "--colors", "2", "--n", "30"], 0),
    ("pr-coloring", ["pr", "strong", "--pattern", "ap:3", "--values", "1,2,3,4,5,6,7,8"], 0),
    ("pr-solutions", ["pr", "solutions", "--poly", "x+y-z", "--values", "3,6,9,12", "--n", "30"], 0),
    ("run-report", ["verify", "--suite", "strong-pr", "--seed", "3", "--budget", "tiny"], 0),
]

failures = 0
for schema_name, argv, expected_exit in CASES:
    proc = subprocess.run([fembed, *argv], capture_output=True, text=True)
    label = " ".join(argv[:3])
    if proc.returncode != expected_exit:
        print(f"FAIL {label}: exit {proc.returncode}\n{proc.stderr}")
        failures += 1
        continue
    schema = json.loads((schemas / f"{schema_name}.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = list(validator.iter_errors(json.loads(proc.stdout)))
    if errors:
        print(f"FAIL {label}: {errors[0].message}")
        failures += 1
    else:
        print(f"ok   {label} -> {schema_name}")

sys.exit(1 if failures else 0)
