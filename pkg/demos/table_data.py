"""
Plot-ready threshold grid
=========================

Writes the d=5 table up to n=20 as CSV and prints a coarse text heatmap.
The CSV is what ``wernerext table`` emits; any plotting tool can read it.
"""

import sys

from wernerext.cli import render_table, table_rows

rows = table_rows(5, 20, 20, "alpha")
with open("alpha_d5.csv", "w") as fh:
    fh.write(render_table(rows, "csv"))

shades = " .:-=+*#%@"
grid = {(r["n_left"], r["n_right"]): r["value_float"] for r in rows}
for nl in range(1, 21):
    line = "".join(shades[min(int(-grid[nl, nr] * 9.99), 9)] for nr in range(1, 21))
    sys.stdout.write(f"{nl:3d} {line}\n")
print("darker = closer to -1; saturated for n_L + n_R <= 5")
