#!/usr/bin/env python3
"""End-to-end checks of the domtree CLI: formats, exit codes, round-trips."""

import json
import os
import subprocess
import sys
import tempfile

CLI = None
failures = 0


def run(*args, env=None, expect=0):
    global failures
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)
    if expect is not None and proc.returncode != expect:
        failures += 1
        print(f"FAIL: {' '.join(args)} -> exit {proc.returncode}, expected {expect}")
        print(proc.stderr)
    return proc


def check(cond, message):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL: {message}")


def main():
    global CLI
    CLI = sys.argv[1]

    # generate: counts, formats, byte stability
    out = run("generate", "--family", "ht", "--levels", "3", "--format", "json").stdout
    g = json.loads(out)
    check(len(g["vertices"]) == 15, "ht(3) should have 15 vertices")
    check(len(g["edges"]) == 21, "ht(3) should have 21 edges")
    check(g["family"] == "ht" and g["n"] == 3, "json records the family spec")
    check(g["levels"]["9"] == 3, "levels map label to level")
    again = run("generate", "--family", "ht", "--levels", "3", "--format", "json").stdout
    check(out == again, "json export is byte stable")

    el = run("generate", "--family", "st", "--levels", "1", "--format", "edgelist").stdout
    check(el == "1 2\n1 3\n2 3\n", "st(1) edgelist")

    dot = run("generate", "--family", "st", "--levels", "1", "--format", "dot").stdout
    check(dot == "graph st_1 {\n  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n}\n", "st(1) dot")

    # invalid family spec is a usage error
    proc = run("generate", "--family", "ht-star", "--levels", "1", expect=2)
    check("unsupported level count" in proc.stderr, "ht-star(1) error message")
    run("generate", "--family", "nope", "--levels", "2", expect=2)
    run("nonsense", expect=2)

    # solve
    solved = json.loads(run("solve", "--family", "ht-star", "--levels", "2",
                            "--variant", "ltd").stdout)
    check(solved["value"] == 3, "ltd(HT*(2)) = 3")
    check(solved["witness"] == [2, 3, 4], "deterministic lexicographic witness")
    check(solved["header"]["tool"] == "domtree" and "version" in solved["header"],
          "solve report carries the tool header")

    infeasible = json.loads(run("solve", "--family", "ht", "--levels", "0",
                                "--variant", "td").stdout)
    check(infeasible["value"] is None and infeasible["status"] == "infeasible",
          "td on a single vertex is infeasible")

    oracle = json.loads(run("solve", "--family", "st", "--levels", "2",
                            "--variant", "ltd", "--oracle").stdout)
    check(oracle["value"] == 4, "oracle ltd(ST_2) = 4")

    # construct
    cons = json.loads(run("construct", "--family", "ht", "--levels", "2",
                          "--variant", "ltd", "--check").stdout)
    check(cons["set"] == [2, 3, 4] and cons["valid"], "construct ltd(HT(2))")

    # env-provided workers, flag-provided time limit
    with_env = json.loads(run("solve", "--family", "ht", "--levels", "3", "--variant", "dom",
                              env={"DOMTREE_WORKERS": "2"}).stdout)
    check(with_env["value"] == 5, "dom(HT(3)) = 5 with DOMTREE_WORKERS")

    # round-trip: JSON export re-ingested gives identical results
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "st3.json")
        run("generate", "--family", "st", "--levels", "3", "--format", "json",
            "--output", path)
        direct = run("solve", "--family", "st", "--levels", "3", "--variant", "ltd").stdout
        via_file = run("solve", "--input", path, "--variant", "ltd").stdout
        check(direct == via_file, "solve round-trips through the JSON export")

        c_direct = run("construct", "--family", "st", "--levels", "3", "--variant", "ld",
                       "--check").stdout
        c_file = run("construct", "--input", path, "--variant", "ld", "--check").stdout
        check(c_direct == c_file, "construct round-trips through the JSON export")

        run("solve", "--input", path, "--family", "st", "--levels", "3",
            "--variant", "ld", expect=2)  # --input excludes --family

    # verify: 24 full matches at n<=3, nonzero exit on a corrupted formula
    with tempfile.TemporaryDirectory() as tmp:
        csv_path = os.path.join(tmp, "rows.csv")
        json_path = os.path.join(tmp, "rows.json")
        run("verify", "--max-n", "3", "--csv", csv_path, "--json", json_path)
        lines = open(csv_path).read().strip().splitlines()
        check(len(lines) == 25, "verify csv has header + 24 rows")
        check(all(line.endswith("full-match") for line in lines[1:]),
              "all base cases are full matches")
        report = json.load(open(json_path))
        check(report["header"]["max_n"] == 3, "verify json header")
        check(len(report["rows"]) == 24, "verify json rows")

    proc = run("verify", "--max-n", "2", "--corrupt-formula", "ht:dom:2", expect=1)
    check("mismatch" in proc.stdout, "corrupted formula yields a mismatch row")

    up = run("verify", "--max-n", "4", "--solve-up-to", "0").stdout
    check("upper-bound-only" in up and "mismatch" not in up,
          "solver-skipped rows degrade to upper bounds")

    # table
    table = run("table", "--max-n", "6").stdout.strip().splitlines()
    check(table[0] == "family,variant,n,value", "table header")
    rows = {tuple(line.split(",")[:3]): line.split(",")[3] for line in table[1:]}
    check(rows[("ht", "ld", "4")] == "13", "table ld(HT(4)) = 13")
    check(rows[("st", "ltd", "2")] == "4", "table ltd(ST_2) = 4")
    check(rows[("ht", "dom", "6")] == "37", "table dom(HT(6)) = 37")
    check(len(table) == 1 + 2 * 4 * 6, "table row count")
    run("table", "--max-n", "65", expect=2)

    # audit
    findings = json.loads(run("audit", "--claim", "ld-level-n", "--families", "ht",
                              "--max-level", "3").stdout)
    check(len(findings) == 2, "audit emits one finding per level")
    refuted = [f for f in findings if f["n"] == 2][0]
    check(refuted["status"] == "refuted" and refuted["counterexample"] == [2, 3, 4],
          "claim B is refuted on HT(2) by {2,3,4}")
    check("locating-dominating" in refuted["quote"], "findings embed the claim quote")

    md = run("audit", "--claim", "all", "--format", "md", "--max-level", "2").stdout
    check(md.startswith("# Level-lemma audit"), "markdown audit rendering")
    run("audit", "--claim", "bogus", expect=2)

    print("all cli tests passed" if failures == 0 else f"{failures} cli tests FAILED")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
