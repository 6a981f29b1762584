"""Validates the --json output of every command on every fixture."""
import glob
import json
import os
import subprocess
import sys

import jsonschema

MFC, DATA, SCHEMAS = sys.argv[1], sys.argv[2], sys.argv[3]

schemas = {}
for path in glob.glob(os.path.join(SCHEMAS, "*.schema.json")):
    with open(path) as fh:
        schemas[os.path.basename(path).split(".")[0]] = json.load(fh)

fixtures = sorted(glob.glob(os.path.join(DATA, "*.sc")) + glob.glob(os.path.join(DATA, "*.json")))
runs = []
for fx in fixtures:
    runs += [["analyze", fx], ["decompose", fx], ["loop-homology", fx, "--max-degree", "7"], ["check", fx]]
    runs += [["decompose", fx, "--target", "spheres", "--max-dim", "9", "--dims", None]]
runs += [["allday", "--dims", d, "--max-degree", "8"] + extra
         for d in ("1,1", "2,2,2", "1,2,1")
         for extra in ([], ["--product"], ["--check-bubenik"])]
runs += [["porter", n, k] for n, k in (("3", "1"), ("4", "2"), ("5", "4"))]
runs += [["porter", "3", "1", "--dims", "1,2,1", "--max-dim", "9"]]

failures = validated = 0
for args in runs:
    if None in args:
        # sphere target: one dimension per vertex
        code = subprocess.run([MFC, "analyze", args[1], "--json"], capture_output=True, text=True)
        if code.returncode != 0:
            continue
        n = json.loads(code.stdout)["complex"]["vertices"]
        args = [a if a is not None else ",".join(["2"] * n) for a in args]
    p = subprocess.run([MFC, *args, "--json"], capture_output=True, text=True, timeout=600)
    if p.returncode in (2, 3):
        if p.stdout.strip():
            failures += 1
            print("FAIL", " ".join(args), "| output on an error exit")
        continue
    try:
        doc = json.loads(p.stdout)
        jsonschema.validate(doc, schemas[args[0]])
        if list(doc)[0] != "command":
            raise ValueError("'command' is not the first key")
        validated += 1
    except Exception as e:  # noqa: BLE001
        failures += 1
        print("FAIL", " ".join(args), "|", str(e).splitlines()[0])

print(f"{validated} documents validated, {failures} failure(s)")
sys.exit(1 if failures or validated < 30 else 0)
