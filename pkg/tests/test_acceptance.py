"""Acceptance suite: one pass/fail line per criterion.

Run with ``pytest -v tests/test_acceptance.py`` or directly with
``python3 tests/test_acceptance.py``.
"""

import math
import sys

import numpy as np
import pytest

from solv3.algebra import Triple
from solv3.curvature import ricci_diagonal, ricci_from_connection, ricci_matrix, rotation, diag_angle, \
    sectional_curvatures
from solv3.errors import StratumError
from solv3.group import coord_from_left, exp_M, inverse, left_frame, multiply, right_frame, right_in_left
from solv3.index import Stratum, cross_check_parallel_fields, index, same_span, stratum, subindex
from solv3.killing import P_matrix, P_right, killing_residual, right_invariant_field, special_fields
from solv3.table import table1

SEED = 20261014
E = np.eye(3)


def random_triple(rng, lo=0.0, hi=2.0):
    a, b = rng.uniform(lo, hi, 2)
    return Triple(a, b, rng.uniform(-b, b))


# One representative family per nongeneric stratum, each as a sampler of valid triples.
def _g1(rng):
    a, b = rng.uniform(0.5, 2, 2)
    b = max(a, b) * 1.1
    return Triple(a, b, a * a / b)


NONGENERIC = {
    "abelian": lambda rng: Triple(0, 0, 0),
    "hyperbolic (a, b, -b)": lambda rng: (lambda a, b: Triple(a, b, -b))(*rng.uniform(0.5, 2, 2)),
    "g_I (a, 0, 0)": lambda rng: Triple(rng.uniform(0.5, 2), 0, 0),
    "g(1) symmetric (a, a, a)": lambda rng: (lambda a: Triple(a, a, a))(rng.uniform(0.5, 2)),
    "g(1) with b != c": _g1,
    "e(1,1) (0, b, b)": lambda rng: (lambda b: Triple(0, b, b))(rng.uniform(0.5, 2)),
    "Heisenberg (0, b, 0)": lambda rng: Triple(0, rng.uniform(0.5, 2), 0),
    "flat e(2) (0, b, -b)": lambda rng: (lambda b: Triple(0, b, -b))(rng.uniform(0.5, 2)),
}

# Hand-derived reference P-matrices of the special Killing fields.
REFERENCE_P = {
    "X_g1": lambda a, b: [[0, b, a], [-b, 0, 0], [-a, 0, 0]],
    "X1_hyp": lambda a, b: [[0, -1 / a, 0], [1 / a, 0, 0], [0, 0, 0]],
    "X2_hyp": lambda a, b: [[0, 0, 1 / a], [0, 0, 0], [-1 / a, 0, 0]],
    "X3_hyp": lambda a, b: [[0, 0, 0], [0, 0, -2], [0, 2, 0]],
    "X_heis": lambda a, b: [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
    "X_flat": lambda a, b: [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
}


def criterion_1():
    """13 table rows, 2 samples each, index and span of S_e exact."""
    records = table1(samples_per_row=2, seed=SEED)
    rows = sorted({r.row for r in records})
    bad = sorted({r.row for r in records if not r.match})
    ok = len(rows) == 13 and len(records) == 26 and not bad
    return ok, f"{len(rows) - len(bad)}/{len(rows)} rows reproduced over {len(records)} samples" + (
        f"; mismatched rows {bad}" if bad else "")


def criterion_2():
    """Index is never 2."""
    rng = np.random.default_rng(SEED)
    triples = [random_triple(rng) for _ in range(5000)]
    triples += [f(rng) for f in NONGENERIC.values() for _ in range(5)]
    seen, errors = set(), 0
    for t in triples:
        try:
            seen.add(index(t)[0])
        except StratumError:
            errors += 1
    ok = seen <= {0, 1, 3} and not errors
    return ok, f"{len(triples)} triples, indices seen {sorted(seen)}, stratum errors {errors}"


def criterion_3():
    """Killing residuals of right-invariant and special fields below 1e-6."""
    rng = np.random.default_rng(SEED)
    worst, count = 0.0, 0
    for _ in range(20):
        t = random_triple(rng)
        fields = [right_invariant_field(t, j) for j in (1, 2, 3)]
        for p in rng.uniform(-1, 1, (20, 3)):
            for X in fields:
                worst = max(worst, np.linalg.norm(killing_residual(t, X, p)))
                count += 1
    names = set()
    for sampler in NONGENERIC.values():
        for _ in range(3):
            t = sampler(rng)
            for X in special_fields(t):
                names.add(X.name)
                for p in rng.uniform(-1, 1, (20, 3)):
                    # both the hand-derived partials and finite differences
                    for analytic in (True, False):
                        worst = max(worst, np.linalg.norm(killing_residual(t, X, p, analytic=analytic)))
                        count += 1
    ok = worst < 1e-6 and names == set(REFERENCE_P)
    return ok, f"max residual {worst:.2e} over {count} evaluations, special fields {sorted(names)}"


def criterion_4():
    """Closed-form P matrices against finite differences and hand-derived references."""
    rng = np.random.default_rng(SEED)
    worst_r = 0.0
    for _ in range(50):
        t = random_triple(rng)
        for j in (1, 2, 3):
            worst_r = max(worst_r, np.abs(P_matrix(t, right_invariant_field(t, j)) - P_right(t, j)).max())
    worst_s, names = 0.0, set()
    for sampler in NONGENERIC.values():
        t = sampler(rng)
        for X in special_fields(t):
            names.add(X.name)
            worst_s = max(worst_s, np.abs(P_matrix(t, X) - np.array(REFERENCE_P[X.name](t.a, t.b))).max())
    ok = worst_r < 1e-8 and worst_s < 1e-8 and len(names) == 6
    return ok, f"P(R_j) max error {worst_r:.2e}; {len(names)} special-field P max error {worst_s:.2e}"


def criterion_5():
    """Ricci closed form, rotation to diagonal form and diagonal entries."""
    rng = np.random.default_rng(SEED)
    e_oracle = e_off = e_diag = 0.0
    for _ in range(200):
        t = random_triple(rng)
        R = ricci_matrix(t)
        e_oracle = max(e_oracle, np.abs(R - ricci_from_connection(t)).max())
        r = rotation(diag_angle(t))
        Rd = r.T @ R @ r
        e_off = max(e_off, np.abs(Rd - np.diag(np.diag(Rd))).max())
        e_diag = max(e_diag, np.abs(np.diag(Rd) - ricci_diagonal(t)).max())
    ok = e_oracle < 1e-12 and e_off < 1e-10 and e_diag < 1e-10
    return ok, f"oracle {e_oracle:.2e}, off-diagonal {e_off:.2e}, diagonal entries {e_diag:.2e}"


def criterion_6():
    """Group-model identities to 1e-9."""
    rng = np.random.default_rng(SEED)
    worst = {"homomorphism": 0.0, "det": 0.0, "associativity": 0.0, "inverse": 0.0, "frames": 0.0}
    for _ in range(200):
        t = random_triple(rng)
        s1, s2 = rng.uniform(-1, 1, 2)
        M12 = exp_M(t, s1 + s2)
        worst["homomorphism"] = max(worst["homomorphism"],
                                    np.abs(exp_M(t, s1) @ exp_M(t, s2) - M12).max() / max(1.0, np.abs(M12).max()))
        worst["det"] = max(worst["det"], abs(np.linalg.det(exp_M(t, s1)) / math.exp(2 * t.a * s1) - 1))
        g, h, k = rng.uniform(-1, 1, (3, 3))
        worst["associativity"] = max(worst["associativity"], np.abs(
            multiply(t, multiply(t, g, h), k) - multiply(t, g, multiply(t, h, k))).max())
        worst["inverse"] = max(worst["inverse"], np.abs(multiply(t, g, inverse(t, g))).max(),
                               np.abs(multiply(t, inverse(t, g), g)).max())
        worst["frames"] = max(worst["frames"], np.abs(left_frame(t, g) @ coord_from_left(t, g) - E).max(),
                              np.abs(right_in_left(t, g) @ left_frame(t, g) - right_frame(t, g)).max())
    ok = max(worst.values()) < 1e-9
    return ok, ", ".join(f"{k} {v:.1e}" for k, v in worst.items())


def criterion_7():
    """Sectional curvature -a^2 on (a, b, -b) and 0 on (0, b, -b)."""
    rng = np.random.default_rng(SEED)
    e_h = e_f = 0.0
    for _ in range(50):
        a, b = rng.uniform(0.5, 2, 2)
        e_h = max(e_h, np.abs(sectional_curvatures(Triple(a, b, -b)) + a * a).max())
        e_f = max(e_f, np.abs(sectional_curvatures(Triple(0, b, -b))).max())
    e_h = max(e_h, np.abs(sectional_curvatures(Triple(1.5, 0, 0)) + 2.25).max())
    ok = e_h < 1e-10 and e_f < 1e-10
    return ok, f"hyperbolic max error {e_h:.2e}, flat max error {e_f:.2e}"


def _sqrt_row(rng):
    a, K = rng.uniform(0.5, 2), rng.uniform(-2, 0.95)
    r = math.sqrt(1 - K)
    return Triple(a, a + a * r, a - a * r)


def _bb_not_one(rng):
    a, b = rng.uniform(0.5, 2, 2)
    if abs(b - a) < 0.1:
        b = a + 0.5
    return Triple(a, b, b)


SUBINDEX_STRATA = [
    ("g(K), K > 0, K != 1, (a, b, b)", _bb_not_one, [E[0]]),
    ("g(1), (a, a, a)", lambda rng: (lambda a: Triple(a, a, a))(rng.uniform(0.5, 2)), [E[0], E[1] - E[2]]),
    ("g(K), K < 1, (a, a + a sqrt(1-K), a - a sqrt(1-K))", _sqrt_row, [E[1] - E[2]]),
    ("g_I, (a, 0, 0)", lambda rng: Triple(rng.uniform(0.5, 2), 0, 0), [E[0]]),
    ("e(1,1), (0, b, b)", lambda rng: (lambda b: Triple(0, b, b))(rng.uniform(0.5, 2)), [E[0]]),
    ("e(2), (0, b, -b)", lambda rng: (lambda b: Triple(0, b, -b))(rng.uniform(0.5, 2)), [E[1] - E[2]]),
    ("abelian", lambda rng: Triple(0, 0, 0), E),
]


def _on_special_stratum(t, tol=1e-9):
    return abs(t.b - t.c) < tol or abs(2 * t.a - (t.b + t.c)) < tol


def criterion_8():
    """Subindex on each special stratum, trivial subindex everywhere else."""
    rng = np.random.default_rng(SEED)
    failures = []
    for name, sampler, expected in SUBINDEX_STRATA:
        for _ in range(5):
            t = sampler(rng)
            S = subindex(t)
            if S.dim != len(expected) or not same_span(S.vectors, expected):
                failures.append(f"{name}: got dim {S.dim} {S} at {t.as_tuple()}, expected dim {len(expected)}")
                break
    others = [random_triple(rng) for _ in range(500)]
    others += [NONGENERIC["Heisenberg (0, b, 0)"](rng), NONGENERIC["hyperbolic (a, b, -b)"](rng),
               NONGENERIC["g(1) with b != c"](rng)]
    others = [t for t in others if not _on_special_stratum(t)]
    nonzero = [t.as_tuple() for t in others if subindex(t).dim != 0]
    if nonzero:
        failures.append(f"{len(nonzero)} other triples with nonzero subindex, e.g. {nonzero[0]}")
    detail = f"{len(SUBINDEX_STRATA)} strata, {len(others)} other triples"
    return not failures, detail + ("; " + "; ".join(failures) if failures else "")


def criterion_9():
    """Generic triples never reach the catalog, and index equals subindex."""
    rng = np.random.default_rng(SEED)
    n = catalog = mismatch = 0
    while n < 1000:
        t = random_triple(rng)
        if stratum(t) is not Stratum.GENERIC:
            continue
        n += 1
        ind, S = index(t)
        Sbar = subindex(t)
        mismatch += ind != Sbar.dim or not same_span(S.vectors, Sbar.vectors)
        try:
            cross_check_parallel_fields(t)
            catalog += 1
        except StratumError:
            pass
    ok = catalog == 0 and mismatch == 0
    return ok, f"{n} generic triples, catalog path taken {catalog}, index != subindex {mismatch}"


def criterion_10():
    """Parallel Killing witnesses span S_e on every nongeneric stratum."""
    rng = np.random.default_rng(SEED)
    problems, checked = [], 0
    for name, sampler in NONGENERIC.items():
        for _ in range(3):
            t = sampler(rng)
            ind, S = index(t)
            ws = cross_check_parallel_fields(t)
            values = np.array([w.value for w in ws]).reshape(-1, 3)
            worst = max(w.residual for w in ws)
            rank = np.linalg.matrix_rank(values, 1e-10) if len(ws) else 0
            spans = same_span(values, S.vectors) and (ind != 3 or same_span(values, E))
            checked += 1
            if ind not in (1, 3) or len(ws) != ind or rank != ind or worst >= 1e-8 or not spans:
                problems.append(f"{name} at {t.as_tuple()}: index {ind}, {len(ws)} witnesses, rank {rank}, "
                                f"max |P| {worst:.1e}")
    return not problems, f"{checked} stratum samples" + ("; " + "; ".join(problems) if problems else "")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10]


def report_line(number, fn):
    ok, detail = fn()
    title = fn.__doc__.strip().rstrip(".")
    return ok, f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title} ({detail})"


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number, capsys):
    ok, line = report_line(number, CRITERIA[number - 1])
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report_line(i, fn) for i, fn in enumerate(CRITERIA, 1)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
