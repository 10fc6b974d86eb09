"""
Reduced reflexive simplices in small dimension
==============================================

Reflexive weight systems come from writing 1 as a sum of n+1 unit
fractions.  For each one we build the simplex and test hard Lefschetz both
from the box elements of its fan and from the weight formulas.
"""

import time

from latticespec.report import classification_table, format_row, TABLE_COLUMNS

for n in (2, 3, 4):
    t0 = time.perf_counter()
    rows = classification_table(n, method="auto")
    print(f"dim {n}: {len(rows)} systems in {time.perf_counter() - t0:.2f} s")
    print("  HL:", ", ".join("(" + ",".join(map(str, r["weights"])) + ")" for r in rows if r["hl"]))

print()
print(";".join(TABLE_COLUMNS))
for row in classification_table(3):
    print(format_row(row))

# dimension 5 via the weight formulas only
rows = classification_table(5, method="box")
print("dim 5:", len(rows), "systems,", sum(r["hl"] for r in rows), "with HL")
