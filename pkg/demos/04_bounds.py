# %% [markdown]
# Bounds on the number of summands
#
# Exact integer evaluation of the GL(3) and GL(4) bounds, plus the scans that
# confirm the piecewise thresholds.

# %%
from schurlift.bounds import bounds_row, rows_to_markdown, threshold_scan

print(rows_to_markdown([bounds_row("gl4", k) for k in range(13, 24)]))

# %%
scan = threshold_scan("gl3", 500)
print(scan.passed, scan.first_k)

# %%
scan = threshold_scan("gl4", 1000)
for claim in scan.summary()["claims"]:
    print(claim["claim"], claim["holds"])
