#!/usr/bin/env python3
"""Pass counts and scan work across the three canonical input shapes.

Best-case inputs (range under (w-1)*n) sort in one pass.  Adversarial
spacing forces one pass per value, and the total scan work stays within
2*(n + m/(w-1)).  Uniform inputs with range multiplier beta shed a 1/beta
fraction per pass, so total scan work tracks beta*n.
"""

import sys
from pathlib import Path

try:
    import assocsort
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from assocsort import (
    DatasetSpec,
    WordSpec,
    gen_adversarial,
    gen_best_case,
    generate,
    predict_average_work,
    predict_worst_pass_bound,
    sort,
)

print("== best case: one pass regardless of size ==")
word = WordSpec(32)
for n in (16, 256, 4096):
    data = gen_best_case(n, word, seed=n)
    report = sort(data, word)
    print(f"  n={n:<5} passes={report.pass_count}")

print("\n== adversarial: one pass per value, bounded scan work ==")
for n in (8, 64, 256):
    data = gen_adversarial(n, word)
    m = max(data) + 1
    report = sort(data, word)
    bound = predict_worst_pass_bound(n, m, word)
    work_cap = 2 * (n + m / (word.w - 1))
    print(
        f"  n={n:<4} passes={report.pass_count:<4} bound={bound:<4} "
        f"scanned={report.words_scanned:<7} cap={work_cap:.0f}"
    )

print("\n== uniform: geometric shrink, work tracks beta*n ==")
n = 4096
word = WordSpec(64)
for beta in (2, 4, 8):
    data = generate(DatasetSpec("uniform", n, 64, beta=beta, seed=1))
    report = sort(data, word)
    predicted = predict_average_work(n, beta, word)
    print(
        f"  beta={beta}: passes={report.pass_count:<3} "
        f"scanned={report.words_scanned:<7} predicted~{predicted} "
        f"ratio={report.words_scanned / predicted:.2f}"
    )
