import json
import pathlib
import subprocess
import sys

import jsonschema

cli, docs = sys.argv[1], pathlib.Path(sys.argv[2])

cases = [
    ("report", ["verify", "--suite", "chow", "--reproducible"]),
    ("tables", ["tables", "--kind", "dnumbers", "--r-max", "3", "--format", "json"]),
    ("tables", ["tables", "--kind", "dnumbers", "--r-max", "3", "--q", "5", "--format", "json"]),
    ("tables", ["tables", "--kind", "satake_matrix", "--N", "4", "--format", "json"]),
    ("tables", ["tables", "--kind", "operators", "--N", "4", "--format", "json"]),
    ("eval", ["eval", "--N", "2", "--op", "Icirc", "--alpha", "3", "--format", "json"]),
    ("eval", ["eval", "--N", "4", "--op", "T1", "--alpha", "3,4", "--format", "json"]),
    ("count", ["count", "--kind", "window", "--q", "2", "--N", "2", "--format", "json"]),
    ("count", ["count", "--kind", "dl", "--q", "2", "--N", "2", "--h", "1", "--format", "json"]),
]
for schema, args in cases:
    out = subprocess.run([cli, *args], capture_output=True, text=True, check=True)
    with open(docs / f"{schema}.schema.json") as f:
        jsonschema.validate(json.loads(out.stdout), json.load(f))
