"""End-to-end driver for the homint CLI: exit codes and JSON contracts."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]

failures = []


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, cond, extra=""):
    if cond:
        print(f"ok: {name}")
    else:
        failures.append(name)
        print(f"FAIL: {name} {extra}")


def write(tmp, name, obj):
    p = Path(tmp) / name
    p.write_text(json.dumps(obj))
    return str(p)


def evaluate(poly, point):
    total = 0
    for t in poly["terms"]:
        term = int(t["coeff"])
        for e, x in zip(t["exps"], point):
            term *= x**e
        total += term
    if "modulus" in poly:
        total %= int(poly["modulus"])
    return total


with tempfile.TemporaryDirectory() as tmp:
    deg60 = write(tmp, "deg60.json", {"points": [[1, 4], [3, 5], [4, 5]]})
    bad5 = write(
        tmp, "bad5.json",
        {"points": [[1, 4], [3, 5], [4, 5]], "targets": ["1", "5", "1"]})
    noncoprime = write(tmp, "nc.json", {"points": [[2, 4]]})

    r = run("witness", deg60)
    check("witness exit 0", r.returncode == 0, r.stderr)
    out = json.loads(r.stdout)
    w = out["witness"]
    check("witness degree divisible by 60", w["degree"] % 60 == 0)
    check("witness values all 1",
          all(evaluate(w, p) == 1 for p in [(1, 4), (3, 5), (4, 5)]))

    # Round-trip: emitted polynomial re-verifies via `verify`.
    polypath = write(tmp, "w.json", w)
    r = run("verify", deg60, "--poly", polypath)
    check("verify round-trip exit 0", r.returncode == 0, r.stderr)
    check("verify verdict", json.loads(r.stdout)["verdict"] == "verified")

    r = run("witness", noncoprime)
    check("witness non-coprime exit 2", r.returncode == 2, r.stderr)

    r = run("feasible", deg60, "--degree", "60")
    check("feasible 60 exit 0", r.returncode == 0, r.stderr)
    r = run("feasible", deg60, "--degree", "59")
    check("feasible 59 exit 3", r.returncode == 3, r.stderr)
    cert = json.loads(r.stdout)["certificate"]
    check("feasible 59 snf certificate", cert["kind"] == "snf_nonmembership")

    r = run("min-degree", deg60, "--max-degree", "120")
    check("min-degree exit 0", r.returncode == 0, r.stderr)
    check("min-degree is 60", json.loads(r.stdout)["degree"] == 60)
    r = run("min-degree", deg60, "--max-degree", "59")
    check("min-degree budget exhausted exit 4", r.returncode == 4, r.stderr)

    r = run("obstruct", bad5, "--primes", "5")
    check("obstruct exit 3", r.returncode == 3, r.stderr)
    cert = json.loads(r.stdout)["certificate"]
    check("obstruct periodic certificate",
          cert["kind"] == "modular_periodic" and cert["prime"] == "5")
    r = run("obstruct", deg60, "--primes", "5", "7")
    check("obstruct feasible instance exit 4", r.returncode == 4, r.stderr)

    m100 = write(tmp, "m100.json", {"points": [[2, 3], [5, 7], [11, 13]]})
    r = run("mod-witness", m100, "--modulus", "100")
    check("mod-witness exit 0", r.returncode == 0, r.stderr)
    w = json.loads(r.stdout)["witness"]
    check("mod-witness unit values", all(
        __import__("math").gcd(evaluate(w, p), 100) == 1
        for p in [(2, 3), (5, 7), (11, 13)]))

    # Deterministic output for fixed inputs.
    a = run("witness", deg60).stdout
    b = run("witness", deg60).stdout
    check("witness deterministic",
          json.loads(a)["witness"] == json.loads(b)["witness"])

    r = run("nonsense")
    check("unknown subcommand exit 1", r.returncode == 1)
    r = run("feasible", deg60)
    check("missing --degree exit 1", r.returncode == 1)
    garbled = Path(tmp) / "garbled.json"
    garbled.write_text("{not json")
    r = run("witness", str(garbled))
    check("garbled file exit 2", r.returncode == 2)

if failures:
    print(f"{len(failures)} failures")
    sys.exit(1)
print("all CLI checks passed")
