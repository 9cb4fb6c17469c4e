"""Named verification suites, each a list of reports."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List

from .catalan import catalan_seq, combo_seq, verify_T, verify_T_columns
from .exact import BivarPoly
from .hankel import det_cofactor, det_fraction_free, principal_minors
from .identities import REGISTRY, check_readings, verify_identity
from .jfrac import jfraction_extract, ratio_check, tridiag_from_jfraction
from .matrix import Matrix
from .reference_data import JFRAC_EXAMPLE
from .report import ConjectureReport

Suite = Callable[[dict], List[ConjectureReport]]


def conjecture_t(opts: dict) -> List[ConjectureReport]:
    return [verify_T(opts.get("m_max", 5), opts.get("n_max", 6), opts.get("workers", 1))]


def conjecture_t_full(opts: dict) -> List[ConjectureReport]:
    m_max, n_max = opts.get("m_max", 5), opts.get("n_max", 6)
    return conjecture_t(opts) + [verify_T_columns(m_max, n_max), verify_identity("T-truncations")]


def identity(opts: dict) -> List[ConjectureReport]:
    name = opts.get("name")
    if not name:
        raise ValueError("verify identity needs --name")
    params = {k: opts[k] for k in ("r", "k", "m", "a", "b", "n", "n_max") if opts.get(k) is not None}
    return [verify_identity(name, params)]


def ratio(opts: dict) -> List[ConjectureReport]:
    ms = [opts["m"]] if opts.get("m") is not None else range(4)
    avals = [opts["a"]] if opts.get("a") is not None else (1, 2, 3)
    bvals = [opts["b"]] if opts.get("b") is not None else (1, 2, 3)
    n_max = opts.get("n_max", 5)
    out = ConjectureReport("ratio", {"m": list(ms), "a": list(avals), "b": list(bvals), "n_max": n_max})
    for m in ms:
        for a in avals:
            for b in bvals:
                out.extend(ratio_check(m, a, b, n_max))
    return [out]


def jfrac(opts: dict) -> List[ConjectureReport]:
    report = ConjectureReport("jfrac")
    depth = 8
    jf = jfraction_extract(catalan_seq(2 * depth), depth)
    report.add("Catalan alphas", (1,) + (2,) * (depth - 1), jf.alphas)
    report.add("Catalan betas", (1,) * (depth - 1), jf.betas)
    depth = len(JFRAC_EXAMPLE["alphas"])
    jf = jfraction_extract(combo_seq(2, 1, 1, 2 * depth), depth)
    report.add("C(n+2)+C(n+3) alphas", [Fraction(s) for s in JFRAC_EXAMPLE["alphas"]], list(jf.alphas))
    report.add("C(n+2)+C(n+3) betas", [Fraction(s) for s in JFRAC_EXAMPLE["betas"]], list(jf.betas))
    minors = principal_minors(tridiag_from_jfraction(jf, depth))
    report.add("C(n+2)+C(n+3) minors", [Fraction(s) for s in JFRAC_EXAMPLE["minors"]], minors)
    return [report]


def random_poly(rng: random.Random, degree: int = 2) -> BivarPoly:
    terms = {}
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            if rng.random() < 0.5:
                terms[(i, j)] = rng.randint(-3, 3)
    return BivarPoly(terms)


def random_matrix(rng: random.Random, size: int, symbolic: bool) -> Matrix:
    if symbolic:
        return Matrix.from_function(size, size, lambda i, j: random_poly(rng))
    # sparse-ish entries so zero pivots and row swaps actually occur
    return Matrix.from_function(size, size, lambda i, j: rng.choice([0, 0, rng.randint(-9, 9)]))


def oracle(opts: dict) -> List[ConjectureReport]:
    seed = opts.get("seed", 11)
    count = opts.get("count") or 200
    rng = random.Random(seed)
    report = ConjectureReport("oracle", {"seed": seed, "count": count})
    for t in range(count):
        symbolic = t % 2 == 1
        size = rng.randint(1, 5)
        M = random_matrix(rng, size, symbolic)
        kind = "Z[a,b]" if symbolic else "Z"
        report.add(f"#{t} {size}x{size} over {kind}", det_cofactor(M), det_fraction_free(M))
    return [report]


def _registry(*names) -> Suite:
    """Entries are identity names or ``(name, params)`` pairs."""
    calls = [(n, {}) if isinstance(n, str) else n for n in names]
    return lambda opts: [verify_identity(n, p) for n, p in calls]


ABM_NUMERIC = ("abm-gf", {"a": 2, "b": 3, "m": 5})


SUITES: Dict[str, Suite] = {
    "conjecture-T": conjecture_t,
    "identity": identity,
    "ratio": ratio,
    "bands": _registry("bands"),
    "tables": _registry("shifted-table", "pair-table", "T-truncations", "m4-column-gf"),
    "gf-lists": _registry("shifted-gf-list", "pair-gf-list"),
    "closed-forms": _registry("closed-forms", "shift2-general-gf", "abm-gf", ABM_NUMERIC, "sec7-gf"),
    "pentadiagonal": _registry("pentadiagonal-gf"),
    "residuals": _registry("consecutive-diff", "spine"),
    "production": _registry("production"),
    "jfrac": jfrac,
    "oracle": oracle,
    "readings": lambda opts: [check_readings()],
}


def run_all(opts: dict) -> List[ConjectureReport]:
    reports = conjecture_t_full(opts)
    covered = {"T-truncations"}
    for name in REGISTRY:
        if name not in covered:
            reports.append(verify_identity(name))
    reports.append(verify_identity(*ABM_NUMERIC))
    reports += ratio({"n_max": 5}) + jfrac(opts) + oracle({}) + [check_readings()]
    return reports


SUITES["all"] = run_all
