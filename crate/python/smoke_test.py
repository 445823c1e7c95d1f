#!/usr/bin/env python3
"""Smoke test for the trifood_py extension module.

Builds the cdylib if needed, copies it next to this script under an
importable name, and checks a handful of known values end to end.

Usage: python3 python/smoke_test.py
"""
import math
import shutil
import subprocess
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def build_module() -> Path:
    lib = REPO / "target" / "debug" / "libtrifood_py.so"
    if not lib.exists():
        subprocess.run(
            ["cargo", "build", "-p", "trifood-py"], cwd=REPO, check=True
        )
    target = Path(__file__).resolve().parent / "trifood_py.so"
    shutil.copy2(lib, target)
    return target


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def main() -> None:
    build_module()
    sys.path.insert(0, str(Path(__file__).resolve().parent))
    import trifood_py as tf

    third = 1.0 / 3.0
    centroid = (third, third, third)

    # Closed form: indifferent Cat 2 is balanced by the uniform first move.
    assert close(tf.solve((0.0, 0.0, 0.0)), centroid)
    p = tf.solve((0.5, 0.2, 0.35))
    assert abs(sum(p) - 1.0) < 1e-12
    assert close(tf.cat2_diet(p, (0.5, 0.2, 0.35)), centroid)

    # Classification conventions for both players.
    assert tf.classify("cat2", (0.5, 0.2, 0.35)) == "cycle_a"
    assert tf.classify("cat1", (0.3, 0.3, 0.3)) == "cycle_b"
    assert tf.classify("cat2", (0.5, -0.5, 0.5)) == "transitive:2>1>0"

    # Cat 1's equal-parameter family balances lambda at a Cat 2 optimum.
    assert close(tf.cat1_diet(p, (0.5, 0.2, 0.35), (0.7, 0.7, 0.7)), centroid)
    assert tf.cat1_residual(p, (0.5, 0.2, 0.35), (0.7, 0.7, 0.7)) < 1e-12

    # Feasibility: the centroid line spans [-sqrt(3), sqrt(3)]; a first move
    # over the 2/3 bound is infeasible in both models.
    lo, hi = tf.classical_feasible(centroid)
    assert abs(lo + math.sqrt(3)) < 1e-9 and abs(hi - math.sqrt(3)) < 1e-9
    assert tf.classical_feasible((0.7, 0.2, 0.1)) is None
    assert tf.quantum_feasible((0.7, 0.2, 0.1)) == []

    # Quantum contrast at the centroid: two balanced qubit strategies, both
    # cycles, and no transitive one anywhere on the sphere.
    points = tf.quantum_feasible(centroid)
    assert len(points) == 2
    assert {label for _, label in points} == {"cycle_a", "cycle_b"}
    assert not tf.quantum_class_available(centroid, "transitive")
    assert tf.quantum_class_available(centroid, "intransitive")

    # Cat 1's two qubit optima.
    t = 1.0 / math.sqrt(3.0)
    optima = tf.quantum_optima()
    assert close(optima[0][0], (-t, t, -t), 1e-14)
    assert close(optima[1][0], (t, -t, t), 1e-14)
    assert all(label.startswith("cycle") for _, label in optima)

    # Membership flags and deterministic region sampling.
    assert tf.membership(centroid) == (True, "both", True)
    assert tf.membership((0.7, 0.2, 0.1)) == (False, None, False)
    samples = tf.region_samples("classical", "intransitive", 200, 7)
    assert samples == tf.region_samples("classical", "intransitive", 200, 7)
    assert all(max(pt) <= 2.0 / 3.0 + 1e-12 for pt, _ in samples)

    # Seeded simulation reproduces the analytic frequencies at 3 sigma.
    c1, c2, disc, lam, omega = tf.simulate(
        p, (0.3, 0.3, 0.3), (0.5, 0.2, 0.35), 100_000, 7
    )
    assert sum(c1) == sum(c2) == sum(disc) == 100_000
    assert close(lam, centroid, 0.005) and close(omega, centroid, 0.005)

    # Pure-function audit: exactly the two cyclic corners balance.
    audit = tf.audit_pure(centroid, (0.0, 0.0, 0.0))
    assert len(audit) == 8
    assert [k for k, _, balanced in audit if balanced] == [2, 5]
    assert tf.pure_as_params(2) in {(1.0, 1.0, 1.0), (-1.0, -1.0, -1.0)}

    # Sphere-to-parameters identification.
    assert close(tf.sphere_strategy("cat2", (0.0, 0.0, 1.0)), (0.0, 0.0, 1.0))

    print("OK")


if __name__ == "__main__":
    main()
