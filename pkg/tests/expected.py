"""Frozen expected values for the built-in consultation chain.

Every number here was produced by an independent exact-rational replay
(Fraction arithmetic over frozensets, no package code) and frozen before the
implementation was tested against it. Chain comparisons use CHAIN_TOL: the
package folds in 64-bit floats, whose worst observed drift from the exact
values across all five conditions is under 3e-14.
"""

CHAIN_TOL = 1e-12

SIX = ("AT", "B", "DF", "M", "R", "WN")
ALL7 = ("AT", "B", "DF", "M", "R", "WN", "L")

# fever ⊕ red-urine under condition 1 (exact decimals: 13/20, 91/400, 49/400)
M3 = {
    ("B",): 0.65,
    SIX: 0.2275,
    ALL7: 0.1225,
}
M3_CONFLICT = 0.0
M3_BEL_B = 0.65
M3_BEL_SIX = 0.8775
M3_PL_B = 1.0
M3_PL_L = 0.1225

# ⊕ skin-rash (the step the published chain first breaks on)
M5_CONFLICT = 0.570375  # exactly 4563/8000
M5 = {
    ("B",): 0.5295315682281059,
    ("L",): 0.18533604887983707,
    SIX: 0.18533604887983707,
    ALL7: 0.09979633401221996,
}

# per-step conflict K for the full condition-1 chain (step 1 = first symptom)
STEP_KS_C1 = [
    0.0,
    0.0,
    0.570375,
    0.46466395112016295,
    0.3661118508655126,
    0.4610387564331478,
    0.38922770367050247,
    0.350499258570313,
    0.3627607721659296,
    0.6027302942723898,
    0.6083547480058615,
]

# final mass after all 11 symptoms, condition 1
FINAL_C1 = {
    ("AT",): 0.36336268781882114,
    ("B",): 0.10633411686237366,
    ("DF",): 0.10633411686237366,
    ("L",): 0.14355105776420446,
    ("M",): 0.04684649903726952,
    ("R",): 0.06998057263592113,
    ("WN",): 0.10633411686237366,
    SIX: 0.03721694090183078,
    ALL7: 0.020039891254831962,
}
AT_BEL_C1 = 0.36336268781882114
AT_PL_C1 = 0.4206195199754839

# final AT singleton mass per condition, all 11 symptoms
FINAL_AT = {
    "1": 0.36336268781882114,
    "2": 0.5112489461219035,
    "3": 0.6489569150644496,
    "4": 0.7210323722792856,
    "5": 0.6846123983768382,
}

# descending singleton mass, exact rational ties broken lexicographically
RANKINGS = {
    "1": ("AT", "L", "B", "DF", "WN", "R", "M"),
    "2": ("AT", "B", "DF", "WN", "L", "M", "R"),
    "3": ("AT", "B", "DF", "WN", "L", "M", "R"),
    "4": ("AT", "DF", "WN", "R", "L", "B", "M"),
    "5": ("AT", "DF", "R", "WN", "L", "B", "M"),
}

# what the published chain printed (used by the errata tests)
PRINTED_ROW_SUMS = [1.00, 0.90, 0.84, 0.77, 0.63, 0.52, 0.38, 0.27, 0.129, 0.064]
PRINTED_FINAL_AT = {"1": 0.03, "2": 0.02, "3": 0.07, "4": 0.07, "5": 0.02}
# printed-value deviations > 0.02 per combination step (steps 2..10)
VALUE_ERRATA_PER_STEP = {2: 1, 3: 2, 4: 3, 5: 5, 6: 6, 7: 6, 8: 6, 9: 7, 10: 8}
