#!/usr/bin/env python3
"""End-to-end checks of the orbits CLI: schemas, examples, round trips, exit codes."""
import json
import pathlib
import subprocess
import sys

import jsonschema

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
failures = []


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=120)


def check(cond, what):
    if not cond:
        failures.append(what)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.json").read_text())


def validate(name, doc, what):
    try:
        jsonschema.validate(doc, schema(name))
    except jsonschema.ValidationError as e:
        failures.append(f"{what}: {e.message}")


# subcommand arguments, schema for one result
CASES = [
    (["dim", "(1,6)(3,4)(5,7)", "--n", "7"], "dim"),
    (["q", "(1,6)(3,4)(5,7)", "--n", "7"], "q"),
    (["rank", "(1,5)(3,4)", "--n", "5"], "rank"),
    (["valid", "[[0,0,0,1,2],[0,0,0,1,1],[0,0,0,0,1],[0,0,0,0,0],[0,0,0,0,0]]"], "valid"),
    (["leq", "(1,3)", "(1,2)", "--n", "3"], "leq"),
    (["meet", "(1,5)(3,4)", "(2,4)(3,5)", "--n", "5"], "rank"),
    (["recover", "[[0,1],[0,0]]"], "involution"),
    (["desc", "(2,6)(3,5)(7,9)(8,10)", "--n", "11"], "moves"),
    (["anc", "(1,3)(2,4)", "--n", "4"], "moves"),
    (["cover", "(1,5)(3,4)", "--n", "5"], "moves"),
    (["closure", "(1,2)", "--n", "3"], "list"),
    (["intersect", "(1,5)(3,4)", "(2,4)(3,5)", "--n", "5"], "intersect"),
    (["intersect", "(1,2)", "(1,2)(3,4)", "--n", "4", "--force"], "intersect"),
    (["codim", "(1,2)", "(1,3)", "--n", "3"], "codim"),
    (["depth", "(1,2)(3,4)", "--n", "4", "--k", "1"], "depth"),
    (["hasse", "--n", "4"], "hasse"),
    (["tab2inv", "1,2,3,6|4,5,7,8"], "tableau"),
    (["inv2tab", "(1,8)(2,5)(3,4)(6,7)", "--n", "8"], "inv2tab"),
    (["inv2tab", "(1,4)(2,5)", "--n", "5"], "inv2tab"),
    (["partners", "1,2,3,6|4,5,7,8"], "partners"),
    (["change", "1,2,3,6|4,5,7,8", "3", "4"], "change"),
    (["rs-witness", "1,2|3,4", "1,3|2,4"], "witness"),
    (["rs-witness", "1,3,5|2,4,6", "1,2,3|4,5,6"], "witness"),
    (["enumerate", "--n", "4"], "list"),
    (["verify", "--suite", "descendants", "--n", "5"], "report"),
]

outputs = {}
for args, name in CASES:
    r = run(*args, "--json")
    key = " ".join(args)
    check(r.returncode == 0, f"{key}: exit {r.returncode}: {r.stderr.strip()}")
    if r.returncode != 0:
        continue
    doc = json.loads(r.stdout)
    outputs[key] = doc
    validate(name, doc, key)

# Worked examples.
check(run("dim", "(1,6)(3,4)(5,7)", "--n", "7").stdout.strip() == "10", "dim example")
check(run("tab2inv", "1,2,3,6|4,5,7,8").stdout.strip() == "(1,8)(2,5)(3,4)(6,7)", "tab2inv example")
check(run("q", "(1,6)(3,4)(5,7)", "--n", "7").stdout.strip() == "[0,0,3]", "q example")
red = outputs.get("intersect (1,5)(3,4) (2,4)(3,5) --n 5", {})
check(red.get("irreducible") is False, "n=5 intersection is reducible")
check([c["involution"] for c in red.get("components", [])] == ["(1,4)(3,5)", "(1,5)(2,4)"], "n=5 components")
check(all(c["dim"] == 4 for c in red.get("components", [])), "n=5 component dimensions")
forced = outputs.get("intersect (1,2) (1,2)(3,4) --n 4 --force", {})
check(forced.get("note") == "outside theorem scope", "forced intersection is flagged")
check(outputs.get("rs-witness 1,3,5|2,4,6 1,2,3|4,5,6", {}).get("witness", 0) is None, "no-witness pair")

# Batch input from stdin: one job per line, JSON array out.
r = run("dim", "--n", "5", "--json", stdin="(1,5)(3,4)\n(2,4)(3,5)\n")
check(r.returncode == 0, "batch dim exit code")
if r.returncode == 0:
    batch = json.loads(r.stdout)
    check(isinstance(batch, list) and len(batch) == 2, "batch dim is a two-element array")
    for doc in batch if isinstance(batch, list) else []:
        validate("dim", doc, "batch dim")
r = run("codim", "--n", "5", stdin="(1,5)(3,4) ; (1,5)(2,4)\n")
check(r.returncode == 0 and r.stdout.strip() == "1", "batch codim with ';' separator")

# Round trips: every emitted involution and tableau reparses to itself.
r = run("enumerate", "--n", "6")
for line in r.stdout.split():
    back = run("recover", json.dumps(json.loads(run("rank", line, "--n", "6", "--json").stdout)["rank_matrix"]))
    check(back.stdout.strip() == line, f"rank/recover round trip of {line}")
for t in [p["tableau"] for p in outputs.get("partners 1,2,3,6|4,5,7,8", {}).get("partners", [])]:
    inv = run("tab2inv", t).stdout.strip()
    check(run("inv2tab", inv, "--n", "8").stdout.strip() == t, f"tableau round trip of {t}")

# Deterministic output.
check(run("hasse", "--n", "5", "--json").stdout == run("hasse", "--n", "5", "--json").stdout, "hasse is deterministic")

# DOT output carries the dimension as a rank hint.
dot = run("hasse", "--n", "3", "--dot").stdout
check(dot.startswith("digraph") and "rank=same" in dot and "orbit_dim" in dot, "dot output")

# Exit codes: 1 with a one-line diagnostic on bad input.
for bad in (["dim", "(1,9)", "--n", "5"], ["dim", "(1,2)(2,3)", "--n", "4"], ["tab2inv", "2,3|1,4"],
            ["intersect", "(1,2)", "(1,2)(3,4)", "--n", "4"], ["valid", "[[0,1]"], ["verify", "--suite", "bogus"],
            ["hasse", "--n", "12"], ["depth", "(1,2)", "--n", "4", "--k", "2"]):
    r = run(*bad)
    check(r.returncode == 1, f"{' '.join(bad)}: exit {r.returncode}, want 1")
    check(r.stderr.strip() != "", f"{' '.join(bad)}: no diagnostic")
check(run("verify", "--suite", "codim", "--n", "5").returncode == 0, "verify exit 0 on pass")

if failures:
    for f in failures:
        print("FAIL", f)
    sys.exit(1)
print(f"cli checks passed ({len(CASES)} schema cases)")
