"""End-to-end checks of the msvkit binary: exit codes, goldens, JSON schemas."""

import json
import os
import pathlib
import subprocess
import sys

import jsonschema

BIN = sys.argv[1]
ROOT = pathlib.Path(sys.argv[2])
SCHEMAS = ROOT / "schemas"
GOLDEN = ROOT / "golden"

failures = []


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def check(cond, what):
    if not cond:
        failures.append(what)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def validate(lines, name):
    s = schema(name)
    for line in lines:
        try:
            jsonschema.validate(json.loads(line), s)
        except jsonschema.ValidationError as e:
            failures.append(f"{name}: {e.message}")


def json_lines(proc):
    return [l for l in proc.stdout.splitlines() if l.strip()]


# Diagrams: '1' and '*' placement must match the goldens exactly.
for w in ["35142", "361452", "352614", "462153"]:
    p = run("diagram", w)
    check(p.returncode == 0, f"diagram {w} exit {p.returncode}")
    grid = [l for l in p.stdout.splitlines()
            if l.startswith(("+", "|")) and not l.startswith("|D")]
    golden = (GOLDEN / f"{w}.txt").read_text().splitlines()
    blank = lambda rows: [r.replace(".", " ") for r in rows]
    check(blank(grid) == blank(golden), f"diagram {w} differs from golden")
    validate(json_lines(run("diagram", w, "--json")), "diagram")

p = run("diagram", "1234")
check(p.returncode == 0 and p.stdout.count("1") == 4 and "*" not in p.stdout
      and "." not in p.stdout, "identity diagram")

# ci 462153: verdict true, 9 generators.
p = run("ci", "462153", "--json", "--mu")
check(p.returncode == 0, "ci 462153 exit")
report = json.loads(p.stdout)
check(report["verdict"] and len(report["generators"]) == 9 and report["mu"] == 9,
      "ci 462153 report")
validate([p.stdout], "ci")
t = run("ci", "462153")
check("generators (9)" in t.stdout and "complete intersection: yes" in t.stdout,
      "ci 462153 text")

# Non-CI: exit 1, text and JSON agree.
for w, cell in [("361452", [2, 5]), ("352614", [4, 4])]:
    j = run("ci", w, "--json")
    t = run("ci", w)
    check(j.returncode == 1 and t.returncode == 1, f"ci {w} exit")
    r = json.loads(j.stdout)
    check(not r["verdict"] and r["witness"]["cell"] == cell, f"ci {w} witness")
    check("complete intersection: no" in t.stdout, f"ci {w} text verdict")
    validate([j.stdout], "ci")

# Verifiers, JSON and text verdicts agree.
for sub, name, key in [("verify-gb", "verify-gb", "match"),
                       ("verify-lemma2", "verify-lemma2", "lemma2"),
                       ("verify-localize", "verify-localize", "I_eq_Iprime"),
                       ("verify-all", "verify-all", "lemma1")]:
    for w in ["35142", "3412", "4132"]:
        j = run(sub, w, "--json")
        t = run(sub, w)
        check(j.returncode == 0 and t.returncode == 0, f"{sub} {w} exit")
        validate(json_lines(j), name)
        r = json.loads(j.stdout)
        check(r.get("skipped", False) or r[key] is True, f"{sub} {w} verdict")
        check("FAILED" not in t.stdout, f"{sub} {w} text")

r = json.loads(run("verify-all", "3412", "--json").stdout)
check(r["skipped"] and r["c"] is None, "regular w is skipped")

# Corrupted generator list must fail with exit 1 in both modes.
for extra in [[], ["--json"]]:
    p = run("verify-gb", "35142", "--corrupt-generators", *extra)
    check(p.returncode == 1, f"corrupted verify-gb exit {p.returncode}")
p = run("verify-gb", "35142", "--corrupt-generators", "--json")
check(json.loads(p.stdout)["match"] is False, "corrupted verify-gb JSON")

# Usage and capability errors.
p = run("diagram", "35143")
check(p.returncode == 2 and "position 5" in p.stderr, "malformed permutation")
p = run("verify-all", "4213657")
check(p.returncode == 2 and "n <= 5" in p.stderr, "capability bound")
p = run("census")
check(p.returncode == 2, "census without --n")
p = run("diagram", "35142", "--file", "x.txt")
check(p.returncode == 2, "inline and file targets together")
p = run("bogus")
check(p.returncode == 2, "unknown subcommand")
p = run("diagram", "10 2 1 3 4 5 6 7 8 9")
check(p.returncode == 0 and p.stdout.count("|1|") + p.stdout.count("1|") >= 10,
      "S_10 diagram")

# Partial permutation from a file.
part = ROOT / "golden" / "partial_2x3.txt"
p = run("diagram", "--file", str(part), "--json")
check(p.returncode == 0, "partial diagram exit")
validate(json_lines(p), "diagram")
p = run("ci", "--file", str(part), "--json")
validate(json_lines(p), "ci")

# Census: JSON lines validate, text and JSON agree, counts match goldens,
# and the prime modulus override is honoured.
counts = json.loads((GOLDEN / "census_counts.json").read_text())
for n in ["3", "4", "5"]:
    j = run("census", "--n", n, "--json")
    check(j.returncode == 0, f"census {n} exit")
    lines = json_lines(j)
    validate(lines, "census")
    rows = [json.loads(l) for l in lines]
    ci = [r for r in rows if r["verdict"]]
    check(len(rows) == counts[n]["total"] and len(ci) == counts[n]["ci"],
          f"census {n} counts")
    check(all((r["mu"] == r["codim"]) == r["verdict"] for r in rows),
          f"census {n} oracle agreement")
    only = [json.loads(l) for l in json_lines(run("census", "--n", n, "--filter", "ci", "--json"))]
    check([r["w"] for r in only] == [r["w"] for r in ci], f"census {n} ci filter")
    t = run("census", "--n", n)
    check(f"{len(rows)} permutations, {len(ci)} CI" in t.stdout, f"census {n} text")
    s = run("census", "--n", n, "--json", "--serial")
    check(s.stdout == j.stdout, f"census {n} serial differs")

env = dict(os.environ, MSVKIT_PRIME="101")
p = run("census", "--n", "4", "--json", "--coeff", "prime", env=env)
check(p.returncode == 0, "prime census exit")

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli: all checks passed")
