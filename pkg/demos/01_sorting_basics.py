#!/usr/bin/env python3
"""First contact: sort a list in place and read the report.

The sorter works on plain Python lists of distinct unsigned integers.  A
word width w picks the universe [0, 2**w): one bit is reserved for tagging,
the rest carry values or records.  Each sort returns a report with one tally
per pass plus work counters.
"""

import sys
from pathlib import Path

try:
    import assocsort
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from assocsort import WordSpec, sort

# A 16-bit universe holds values up to 65535; anything at or above 2**15
# takes the split-and-shift path because of the tag bit.
word = WordSpec(16)
data = [40_000, 7, 5_000, 62_001, 0, 33_000, 12, 9_999]

print("before:", data)
report = sort(data, word)
print("after: ", data)
print()
print(f"passes:        {report.pass_count}")
print(f"words scanned: {report.words_scanned}")
print(f"words written: {report.words_written}")
print(f"elapsed:       {report.elapsed_ns} ns")
print()

# Each pass covers one value interval; its tally says how many values became
# nodes (n_d), how many were absorbed as idle duplicates of a node's
# interval (n_c), and how many waited for a later pass (n_d_prime).
for i, tally in enumerate(report.passes, start=1):
    print(
        f"pass {i}: n_d={tally.n_d} n_c={tally.n_c} "
        f"deferred={tally.n_d_prime} next_min={tally.delta_prime}"
    )

# The sort is on-line: after each pass, a fully sorted prefix is in place.
# Sorting is strict about its contract -- duplicates abort loudly.
from assocsort import DuplicateDetected

try:
    sort([3, 3], word)
except DuplicateDetected as exc:
    print(f"\nduplicates are rejected: {exc}")
