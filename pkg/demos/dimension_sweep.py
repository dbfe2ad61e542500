"""Compare the closed-form dimension count against the linear-system oracle.

The closed form only needs dimensions of the projected star; the oracle
builds the full smoothness system on the original complex and takes its
nullity. They must agree cell by cell.

Run: python3 demos/dimension_sweep.py
"""

import time

from orangesplines import SWEEP_NAMES, run_sweep
from orangesplines.catalog import get

t0 = time.perf_counter()
grand_total = 0
for name in SWEEP_NAMES:
    entry = get(name)
    report = run_sweep(entry.complex, range(3), range(6))
    status = "ok" if report.all_match else "MISMATCH"
    print(f"{name} ({entry.profile.k},{entry.profile.i}): {status}")
    header = "  d:    " + "  ".join(f"{d:>5}" for d in range(6))
    print(header)
    for r in range(3):
        row = [c for c in report.cells if c.r == r]
        print(f"  r={r}  " + "  ".join(f"{c.formula:>5}" for c in row))
        assert all(c.match for c in row)
    grand_total += len(report.cells)
print(f"\n{grand_total} cells verified in {time.perf_counter() - t0:.2f}s")
