#!/usr/bin/env python3
"""Exit-code and output contract checks for the quintsect CLI."""

import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]
failures = []


def run(args, env_extra=None, expect_code=0, contains=(), not_contains=()):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([CLI] + args, capture_output=True, text=True, env=env)
    label = " ".join(args)
    if proc.returncode != expect_code:
        failures.append(
            f"[{label}] exit {proc.returncode}, expected {expect_code}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
        return proc
    for needle in contains:
        if needle not in proc.stdout:
            failures.append(f"[{label}] stdout missing {needle!r}:\n{proc.stdout}")
    for needle in not_contains:
        if needle in proc.stdout:
            failures.append(f"[{label}] stdout unexpectedly has {needle!r}")
    return proc


def main():
    # eval: values to 17 significant digits plus diagnostics.
    run(
        ["eval", "pfq", "1,0.5;1.5", "@", "-0.25"],
        contains=["value = 0.92729521800161", "status = converged", "classification = unit-disk"],
    )
    run(["eval", "fn", "K", "@", "0"], contains=["value = 1.5707963267948966"])
    run(["eval", "psi", "(1:1);(2:1)", "@", "1"], contains=["value = 1.718281828459045"])
    run(["eval", "psi*", "(1:2);(1:1)", "@", "0"], contains=["value = 1"])
    run(["diagnose", "psi", "(1:1);(2:1)", "@", "1"], contains=["Delta* = 0", "sigma* = 1"])

    # parse errors exit 2.
    run(["eval", "pfq", "1,0.5;;1.5", "@", "-0.25"], expect_code=2)
    run(["eval", "walrus", "1;2", "@", "0"], expect_code=2)
    run(["eval", "pfq", "1,0.5;1.5", "-0.25"], expect_code=2)

    # domain / classification errors exit 3.
    run(["eval", "pfq", "1,0.5;1.5", "@", "2"], expect_code=3)
    run(["eval", "fn", "K", "@", "1.5"], expect_code=3)
    run(["eval", "pfq", "1;-2"], expect_code=2)  # invalid spec string + missing '@'

    # non-convergence exits 4 (max terms too small for the point).
    run(
        ["eval", "pfq", "0.5,0.5;1", "@", "0.9"],
        env_extra={"QUINTSECT_MAX_TERMS": "15"},
        expect_code=4,
    )

    # verify: pass / fail / not-evaluable / unknown case.
    run(
        ["verify", "--case", "eq4.6-arctan", "--x", "0.5", "--tol", "1e-9"],
        contains=["verdict = pass"],
    )
    run(["verify", "--case", "eq4.6-arctan", "--x", "1.5"], expect_code=3,
        contains=["verdict = not-evaluable"])
    run(["verify", "--case", "eq4.99-moonshine", "--x", "0.5"], expect_code=2)
    run(
        ["verify", "--theorem", "pfq-even", "--spec", "0F1;1.5", "--c", "-0.25", "--x", "0.8"],
        contains=["verdict = pass"],
    )
    run(
        ["verify", "--theorem", "psistar-weighted", "--spec", "(0.8:1);(1.9:2)",
         "--c", "-1", "--x", "0.5"],
        contains=["verdict = pass"],
    )
    # The printed eq4.8 form is discrepant: verify fails with exit 5.
    run(["verify", "--case", "eq4.8-E", "--x", "0.45"], expect_code=5,
        contains=["verdict = fail"])

    with tempfile.TemporaryDirectory() as tmp:
        report = os.path.join(tmp, "report.csv")
        run(["verify-all", "--tol", "1e-8", "--out", report])
        with open(report) as fh:
            lines = fh.read().splitlines()
        if len(lines) != 21:
            failures.append(f"verify-all: expected 21 lines, got {len(lines)}")
        if not lines[0].startswith("case_id,printed_label,param,domain_radius"):
            failures.append(f"verify-all: bad header {lines[0]!r}")
        if sum(1 for ln in lines if ln.endswith(",discrepant")) != 1:
            failures.append("verify-all: expected exactly one discrepant row")

        # Determinism: identical invocations produce byte-identical output.
        report2 = os.path.join(tmp, "report2.csv")
        run(["verify-all", "--tol", "1e-8", "--out", report2])
        if open(report).read() != open(report2).read():
            failures.append("verify-all: output is not deterministic")

        # structured-records format.
        records = os.path.join(tmp, "report.records")
        run(["verify-all", "--tol", "1e-8", "--format", "structured-records",
             "--out", records])
        body = open(records).read()
        if "case_id=eq4.8-E" not in body or "status=discrepant" not in body:
            failures.append("verify-all records: missing discrepant case data")

        # sweep: inclusive endpoints, header row, small residuals for eq4.13.
        sweep = os.path.join(tmp, "sweep.csv")
        run(["sweep", "--case", "eq4.2-sin", "--x-min", "0", "--x-max", "2",
             "--steps", "50", "--out", sweep])
        lines = open(sweep).read().splitlines()
        if len(lines) != 52:
            failures.append(f"sweep: expected 52 lines, got {len(lines)}")
        if lines[0] != "x,lhs_re,lhs_im,rhs_re,rhs_im,residual":
            failures.append(f"sweep: bad header {lines[0]!r}")

        sweep_k = os.path.join(tmp, "sweep_k.csv")
        run(["sweep", "--case", "eq4.13-K", "--x-min", "0", "--x-max", "0.9",
             "--steps", "9", "--out", sweep_k])
        for ln in open(sweep_k).read().splitlines()[1:]:
            residual = float(ln.split(",")[-1])
            if residual > 1e-9:
                failures.append(f"sweep eq4.13-K: residual {residual} too large")

        # Bad input never leaves a partial file behind.
        ghost = os.path.join(tmp, "ghost.csv")
        run(["sweep", "--case", "eq4.99-moonshine", "--x-min", "0", "--x-max", "1",
             "--steps", "3", "--out", ghost], expect_code=2)
        if os.path.exists(ghost):
            failures.append("sweep wrote an output file for an unknown case")

        # Custom catalog file: one record, overridden parameter and samples.
        catalog = os.path.join(tmp, "cases.txt")
        with open(catalog, "w") as fh:
            fh.write("case_id=eq4.19-conformal\nparam=0.75\n"
                     "sample_points=0.2,0.5\nstatus=unverified\n\n")
        proc = run(["verify-all", "--catalog", catalog, "--format", "human"])
        if "eq4.19-conformal" not in proc.stdout or "verified" not in proc.stdout:
            failures.append(f"verify-all --catalog: unexpected output:\n{proc.stdout}")

    # Parameterized single-case verification through --param.
    run(["verify", "--case", "eq4.19-conformal", "--x", "0.5", "--param", "0.75"],
        contains=["verdict = pass"])
    run(["verify", "--case", "eq4.17-incgamma", "--x", "0.5", "--param", "0.6"],
        expect_code=5, contains=["verdict = fail"])

    # I/O errors exit 6.
    run(["verify-all", "--out", "/nonexistent-dir/report.csv"], expect_code=6)

    if failures:
        print("CLI contract failures:")
        for f in failures:
            print("---")
            print(f)
        return 1
    print("cli contract: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
