"""Validates compute output against the RunRecord schema and checks a JSON round trip."""
import json
import subprocess
import sys

import jsonschema

nda, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

runs = [
    ["compute", "--state", "3S_1s2s", "--components", "pot,kin,sum,standard,norm", "--samples", "2e4"],
    ["compute", "--state", "harmonic_mixed", "--samples", "2e4"],
    ["compute", "--state", "2P_2p", "--method", "quadrature"],
    ["compute", "--state", "3P_1s2p", "--method", "shell", "--components", "kin", "--samples", "2e4"],
]
for args in runs:
    out = subprocess.run([nda, *args, "--format", "json"], capture_output=True, text=True)
    if out.returncode not in (0, 3):
        sys.exit(f"{args}: exit {out.returncode}\n{out.stderr}")
    record = json.loads(out.stdout)
    jsonschema.validate(record, schema)
    print("valid:", " ".join(args))
