# Copyright 2026 the adz authors
# SPDX-License-Identifier: Apache-2.0
"""End-to-end checks of the adz command-line interface.

Usage: test_cli.py <path-to-adz> <configs-dir>

Covers exit codes (0 success, 2 config errors, 3 self-check failures,
4 infeasible preconditions), the RFC-4180 CSV shape with its provenance
preamble, CSV/JSON payload equivalence, seed override and byte-identical
reruns of the sampling campaign across thread counts.
"""

import json
import os
import subprocess
import sys
import tempfile

ADZ = os.path.abspath(sys.argv[1])
CONFIGS = os.path.abspath(sys.argv[2])

FAILURES = []
CHECKS = [0]


def check(name, cond, detail=""):
    CHECKS[0] += 1
    if not cond:
        FAILURES.append(f"{name}: {detail}")
        print(f"FAIL {name}: {detail}", flush=True)
    else:
        print(f"ok   {name}", flush=True)


def run(*args, timeout=600):
    return subprocess.run([ADZ, *args], capture_output=True, text=True,
                          timeout=timeout)


def write_config(tmp, name, payload):
    path = os.path.join(tmp, name)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
    return path


def parse_csv(raw):
    """Returns (preamble_lines, header, rows) and checks CRLF endings."""
    check("csv.crlf", raw.count("\r\n") >= 3 and not raw.replace("\r\n", "").count("\r"),
          "expected CRLF line endings")
    lines = raw.split("\r\n")
    if lines and lines[-1] == "":
        lines.pop()
    preamble = [ln for ln in lines if ln.startswith("#")]
    body = [ln for ln in lines if not ln.startswith("#")]
    header = body[0].split(",") if body else []
    rows = [ln.split(",") for ln in body[1:]]
    return preamble, header, rows


SIGMA_SMALL = {"n": 3, "x_max": 5.0, "x_count": 24, "seed": 1}

with tempfile.TemporaryDirectory() as tmp:
    # --- argument handling -------------------------------------------------
    check("version.exit", run("--version").returncode == 0)
    check("version.text", "adz" in run("--version").stdout)
    check("nosub.exit2", run().returncode == 2)
    check("badsub.exit2", run("frobnicate").returncode == 2)
    check("noconfig.exit2", run("sigma").returncode == 2)
    check("missingfile.exit2",
          run("sigma", "--config", os.path.join(tmp, "nope.json")).returncode == 2)

    # --- sigma: CSV shape, provenance, seed override -----------------------
    sigma_cfg = write_config(tmp, "sigma.json", SIGMA_SMALL)
    out_csv = os.path.join(tmp, "sigma.csv")
    res = run("sigma", "--config", sigma_cfg, "--out", out_csv)
    check("sigma.exit0", res.returncode == 0, res.stderr)
    with open(out_csv, newline="", encoding="utf-8") as fh:
        raw = fh.read()
    preamble, header, rows = parse_csv(raw)
    check("sigma.preamble.tool", any(p.startswith("# adz ") for p in preamble))
    check("sigma.preamble.command", "# command: sigma" in preamble)
    check("sigma.preamble.seed", "# seed: 1" in preamble)
    check("sigma.preamble.config", any(p.startswith("# config: ") for p in preamble))
    check("sigma.header", len(header) > 2 and len(set(header)) == len(header))
    check("sigma.rows", len(rows) >= SIGMA_SMALL["x_count"])
    check("sigma.width", all(len(r) == len(header) for r in rows))
    flat = [c for r in rows for c in r]
    check("sigma.no_nan", all("nan" not in c.lower() and "inf" not in c.lower()
                              for c in flat), "NaN/Inf in output")

    seeded = run("sigma", "--config", sigma_cfg, "--out", out_csv, "--seed", "5")
    check("sigma.seed_override.exit0", seeded.returncode == 0, seeded.stderr)
    with open(out_csv, newline="", encoding="utf-8") as fh:
        check("sigma.seed_override.preamble", "# seed: 5" in fh.read())

    # --- CSV / JSON payload equivalence ------------------------------------
    json_cfg = write_config(tmp, "sigma_json.json", {**SIGMA_SMALL, "format": "json"})
    out_json = os.path.join(tmp, "sigma.json.out")
    res = run("sigma", "--config", json_cfg, "--out", out_json)
    check("sigma.json.exit0", res.returncode == 0, res.stderr)
    with open(out_json, encoding="utf-8") as fh:
        doc = json.load(fh)
    check("sigma.json.keys",
          all(k in doc for k in ("tool", "command", "seed", "columns", "rows")))
    check("sigma.json.columns", doc["columns"] == header)
    check("sigma.json.rowcount", len(doc["rows"]) == len(rows))
    same = len(doc["rows"]) == len(rows)
    if same:
        for jrow, crow in zip(doc["rows"], rows):
            for jcell, ccell in zip(jrow, crow):
                if jcell is None:
                    same = same and ccell == ""
                elif isinstance(jcell, str):
                    same = same and ccell == jcell
                else:
                    same = same and ccell != "" and \
                        abs(float(ccell) - jcell) <= 1e-12 * max(1.0, abs(jcell))
    check("sigma.json.payload", same, "CSV and JSON payloads differ")

    # --- schema validation: unknown keys, types, nested density ------------
    for name, payload in [
        ("unknown_key", {**SIGMA_SMALL, "bogus": 1}),
        ("bad_type", {**SIGMA_SMALL, "x_count": "ten"}),
        ("bad_format", {**SIGMA_SMALL, "format": "yaml"}),
    ]:
        cfg = write_config(tmp, f"{name}.json", payload)
        res = run("sigma", "--config", cfg)
        check(f"schema.{name}.exit2", res.returncode == 2, res.stderr)
    bogus_cfg = os.path.join(tmp, "notjson.json")
    with open(bogus_cfg, "w", encoding="utf-8") as fh:
        fh.write("{not json")
    check("schema.malformed.exit2",
          run("sigma", "--config", bogus_cfg).returncode == 2)

    rep_base = {"n": 3, "alpha": 2, "r": 1.0, "grid_resolution": 2,
                "sphere_resolution": 10,
                "density": {"id": "shifted_gaussian", "params": {}}, "seed": 1}
    for name, payload in [
        ("no_density", {k: v for k, v in rep_base.items() if k != "density"}),
        ("density_params", {**rep_base,
                            "density": {"id": "shifted_gaussian",
                                        "params": {"a": 1}}}),
        ("density_unknown", {**rep_base, "density": {"id": "mystery", "params": {}}}),
        ("density_string", {**rep_base, "density": "shifted_gaussian"}),
    ]:
        cfg = write_config(tmp, f"rep_{name}.json", payload)
        res = run("represent", "--config", cfg)
        check(f"schema.{name}.exit2", res.returncode == 2, res.stderr)

    # --- exit 4: infeasible preconditions ----------------------------------
    infeasible = write_config(tmp, "rvfl_bad_r.json", {
        "n": 3, "alpha": 2, "r": 50.0, "m_list": [256], "trials": 30,
        "grid_resolution": 2, "sphere_resolution": 8,
        "density": {"id": "shifted_gaussian", "params": {}}, "seed": 1})
    res = run("rvfl", "--config", infeasible)
    check("infeasible.rvfl_r.exit4", res.returncode == 4, res.stderr)
    check("infeasible.rvfl_r.message", "infeasible" in res.stderr)

    # --- exit 3: numerical self-check failure ------------------------------
    selfcheck = write_config(tmp, "mellin_asym.json", {
        "n_list": [3], "l_max": 2, "y_list": [0.5], "alpha_max": 2, "k_max": 4,
        "asym_y": 10.0, "asym_l_max": 4, "asym_alpha_max": 1, "seed": 1})
    res = run("mellin-check", "--config", selfcheck)
    check("selfcheck.mellin.exit3", res.returncode == 3, res.stderr)
    check("selfcheck.mellin.message", "self-check" in res.stderr)

    # --- shipped configs run clean ------------------------------------------
    for cmd, cfg in [("bounds", "bounds.json"), ("mellin-check", "mellin-check.json"),
                     ("represent", "represent.json"), ("decompose", "decompose.json")]:
        out = os.path.join(tmp, f"shipped_{cmd}.csv")
        res = run(cmd, "--config", os.path.join(CONFIGS, cfg), "--out", out)
        check(f"shipped.{cmd}.exit0", res.returncode == 0, res.stderr[-400:])
        with open(out, newline="", encoding="utf-8") as fh:
            pre, hdr, body = parse_csv(fh.read())
        check(f"shipped.{cmd}.rows", len(body) > 0)
        check(f"shipped.{cmd}.width", all(len(r) == len(hdr) for r in body))

    # --- campaign determinism across threads and reruns ---------------------
    small = os.path.join(CONFIGS, "rvfl_small.json")
    outs = {}
    for tag, threads in [("a", "1"), ("b", "3"), ("c", "1")]:
        path = os.path.join(tmp, f"campaign_{tag}.csv")
        res = run("rvfl", "--config", small, "--out", path, "--threads", threads)
        check(f"campaign.{tag}.exit0", res.returncode == 0, res.stderr[-400:])
        with open(path, "rb") as fh:
            outs[tag] = fh.read()
    check("campaign.threads_identical", outs["a"] == outs["b"],
          "1-thread and 3-thread runs differ")
    check("campaign.rerun_identical", outs["a"] == outs["c"],
          "repeated identical runs differ")

    reseeded = os.path.join(tmp, "campaign_d.csv")
    res = run("rvfl", "--config", small, "--out", reseeded, "--seed", "99")
    check("campaign.reseed.exit0", res.returncode == 0, res.stderr[-400:])
    with open(reseeded, "rb") as fh:
        check("campaign.reseed_differs", fh.read() != outs["a"],
              "seed override did not change the campaign output")

print(f"\n{CHECKS[0] - len(FAILURES)}/{CHECKS[0]} CLI checks passed")
if FAILURES:
    sys.exit(1)
