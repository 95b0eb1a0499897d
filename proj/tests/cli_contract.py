#!/usr/bin/env python3
"""Script-level contract for the hyperconn command line tool.

usage: cli_contract.py <tool> <report.schema.json> [corpus dir]

Witnesses are re-checked here with an independent deletion routine, so a
report that claims verified=true but carries a bad witness still fails.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema

TOOL = sys.argv[1]
SCHEMA = json.loads(Path(sys.argv[2]).read_text())
CORPUS = Path(sys.argv[3]) if len(sys.argv) > 3 else Path(__file__).parent / "corpus"
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)
FAILURES = []


def check(ok, what):
    if not ok:
        FAILURES.append(what)
        print("FAIL:", what)


def run(args, stdin="", env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    proc = subprocess.run([TOOL, *args], input=stdin, capture_output=True, text=True, env=full_env)
    return proc.returncode, proc.stdout, proc.stderr


def report(args, stdin=""):
    code, out, err = run([*args, "--json"], stdin)
    check(code == 0, f"{args}: exit {code}: {err.strip()}")
    if code != 0:
        return None
    data = json.loads(out)
    errors = list(VALIDATOR.iter_errors(data))
    check(not errors, f"{args}: schema violation: {errors[:1]}")
    return data


def parse_hgr(text):
    n = None
    edges = []
    for line in text.split("\n"):
        if line.startswith("c"):
            continue
        if n is None:
            if line.strip():
                _, _, n, m = line.split()
                n, m = int(n), int(m)
            continue
        if len(edges) < m:
            edges.append([int(t) - 1 for t in line.split()])
    return n, edges


def serialize(n, edges):
    lines = [f"p hgr {n} {len(edges)}"]
    lines += [" ".join(str(v + 1) for v in sorted(e)) for e in edges]
    return "\n".join(lines) + "\n"


def component_count(alive, edges):
    parent = {v: v for v in alive}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        members = [v for v in set(e) if v in parent]
        for a, b in zip(members, members[1:]):
            parent[find(a)] = find(b)
    return len({find(v) for v in alive})


def joined(alive, edges, u, v):
    parent = {x: x for x in alive}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for e in edges:
        members = [x for x in set(e) if x in parent]
        for a, b in zip(members, members[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    return find(u) == find(v)


def after(n, edges, witness, kind):
    """Vertices and edges left after deleting the 0-based witness."""
    w = set(witness)
    if kind == "weak-vertex":
        return set(range(n)) - w, [[x for x in e if x not in w] for e in edges]
    if kind == "strong-vertex":
        return set(range(n)) - w, [e for e in edges if not (set(e) & w)]
    if kind == "weak-edge":
        return set(range(n)), [e for i, e in enumerate(edges) if i not in w]
    gone = set().union(*(set(edges[i]) for i in w)) if w else set()
    return set(range(n)) - gone, [[x for x in e if x not in gone] for i, e in enumerate(edges) if i not in w]


KIND = {
    "kappa-w": "weak-vertex",
    "kappa-w-pair": "weak-vertex",
    "kappa-s": "strong-vertex",
    "kappa-s-pair": "strong-vertex",
    "kappa-we": "weak-edge",
    "kappa-se": "strong-edge",
}


def verify_cut(name, command, n, edges, r):
    if r is None or not r["attained"]:
        if r is not None:
            check(r["witness"] == [], f"{name} {command}: unattained value with a witness")
        return
    witness = [x - 1 for x in r["witness"]]
    check(len(witness) == r["value"], f"{name} {command}: witness size != value")
    alive, rest = after(n, edges, witness, KIND[command])
    if "pair" in r:
        u, v = r["pair"][0] - 1, r["pair"][1] - 1
        check(u in alive and v in alive and not joined(alive, rest, u, v), f"{name} {command}: pair not separated")
    else:
        check(component_count(alive, rest) >= 2, f"{name} {command}: witness does not disconnect")


def test_corpus():
    for path in sorted(CORPUS.glob("*.hgr")):
        text = path.read_text()
        n, edges = parse_hgr(text)
        for command in ["kappa-w", "kappa-we", "kappa-s", "kappa-se"]:
            verify_cut(path.name, command, n, edges, report([command, str(path)]))
        if n >= 2:
            for command in ["kappa-w-pair", "kappa-s-pair", "kappa-we", "kappa-se"]:
                r = report([command, str(path), "--u", "1", "--v", str(n)])
                verify_cut(path.name, command.replace("-pair", "") + ("-pair" if "pair" in command else ""), n, edges, r)
        t = report(["tau", str(path)])
        hit = set(x - 1 for x in t["witness"])
        check(all(not e or set(e) & hit for e in edges), f"{path.name}: tau witness misses an edge")
        a = report(["alpha", str(path)])
        chosen = [set(edges[i - 1]) for i in a["witness"]]
        check(all(c and not (c & d) for i, c in enumerate(chosen) for d in chosen[i + 1:]) and all(chosen),
              f"{path.name}: alpha witness is not a matching")
        comp = report(["components", str(path)])
        check(sorted(x for group in comp["details"]["components"] for x in group) == list(range(1, n + 1)),
              f"{path.name}: components do not partition V")
        report(["classify", str(path)])


def test_round_trip():
    for family in ["fig1", "fig3", "two-books", "fano", "fano-doubled", "random", "random-interval"]:
        code, text, err = run(["generate", family, "--seed", "7"])
        check(code == 0, f"generate {family}: exit {code}")
        n, edges = parse_hgr(text)
        body = "\n".join(line for line in text.split("\n") if not line.startswith("c"))
        check(serialize(n, edges) == body, f"generate {family}: output is not canonical HGR")
        code, again, _ = run(["normalize"], text)
        code2, twice, _ = run(["normalize"], again)
        check(code == 0 and code2 == 0 and again == twice, f"normalize is not a fixed point on {family}")
    odd = "p hgr 4 3\n1 1 4\n\n3\n"
    r = report(["normalize"], odd)
    check(r["hgr"] == "p hgr 4 1\n1 4\n", "normalize drops empty and singleton edges and repeats")


def test_pipes():
    proc = subprocess.run(f"'{TOOL}' generate fig2 --n 3 | '{TOOL}' kappa-w --json", shell=True,
                          capture_output=True, text=True)
    check(proc.returncode == 0 and json.loads(proc.stdout)["value"] == 4, "generate fig2 --n 3 | kappa-w != 4")
    code, text, _ = run(["generate", "fig1"])
    r = report(["kappa-s"], text)
    check(r["value"] == 1 and r["witness"] == [9], "kappa-s on fig1 is not 1 via vertex 9")
    r = report(["kappa-w-pair", "--u", "1", "--v", "2"], "p hgr 3 2\n1 2\n2 3\n")
    check(r["value"] == 2 and r["attained"] is False, "adjacent pair convention")


def test_exit_codes():
    fd = run(["generate", "fano-doubled"])[1]
    cases = [
        (["kappa-w"], "p hgr 2 1\n3\n", {}, 2),
        (["kappa-w"], "p hgr 2 2\n1 2\n", {}, 2),
        (["kappa-w", "/no/such/file"], "", {}, 2),
        (["kappa-s", "--budget-subsets", "4"], fd, {}, 3),
        (["kappa-s"], fd, {"HYPERCONN_BUDGET_SUBSETS": "4"}, 3),
        (["classify", "--budget-trees", "2"], fd, {}, 3),
        (["kappa-s-pair", "--u", "4", "--v", "8", "--via-paths"], fd, {"HYPERCONN_BUDGET_PATHS": "2"}, 3),
        (["kappa-w", "--no-such-flag"], fd, {}, 4),
        (["not-a-command"], "", {}, 4),
        (["kappa-s-pair", "--u", "1"], fd, {}, 4),
        (["kappa-s-pair", "--u", "1", "--v", "1"], fd, {}, 4),
        (["kappa-s"], fd, {"HYPERCONN_BUDGET_SUBSETS": "-1"}, 4),
        (["generate", "fig2", "--n", "1"], "", {}, 4),
        (["kappa-s"], fd, {}, 0),
    ]
    for args, stdin, env, expected in cases:
        code, _, err = run(args, stdin, env)
        check(code == expected, f"{args} env={env}: exit {code}, expected {expected} ({err.strip()})")
    code, out, _ = run(["kappa-s", "--budget-subsets", "4", "--json"], fd)
    data = json.loads(out)
    check(code == 3 and data["budget"]["status"] == "exhausted" and data["value"] is None,
          "budget exhaustion report")
    check(not list(VALIDATOR.iter_errors(data)), "budget exhaustion report violates the schema")


if __name__ == "__main__":
    test_round_trip()
    test_pipes()
    test_exit_codes()
    test_corpus()
    print(f"{len(FAILURES)} failures")
    sys.exit(1 if FAILURES else 0)
