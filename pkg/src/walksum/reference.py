"""Known values used to check the generated families.

Rows are written high-to-low, the way the polynomials are usually printed;
``P_ROWS[r]`` lists the coefficients of P_r(n)/n for r >= 1.
"""

P_ROWS = {
    0: None,  # P_0 = 1
    1: [1],
    2: [2, -1],
    3: [6, -8, 3],
    4: [24, -60, 54, -17],
    5: [120, -480, 762, -556, 155],
}

Q_ROWS = {
    0: None,  # Q_0 = 1
    1: [1],
    2: [3, -1],
    3: [15, -15, 4],
    4: [105, -210, 147, -34],
    5: [945, -3150, 4095, -2370, 496],
}

GANDHI_ROWS = [
    [1],
    [2, 1],
    [6, 8, 3],
    [24, 60, 54, 17],
    [120, 480, 762, 556, 155],
    [720, 4200, 10248, 12840, 8146, 2073],
]

QTILDE_ROWS = [
    [1],
    [3, 1],
    [15, 15, 4],
    [105, 210, 147, 34],
    [945, 3150, 4095, 2370, 496],
    [10395, 51975, 107415, 111705, 56958, 11056],
]

# G_2, G_4, ..., G_12
GENOCCHI = [-1, 1, -3, 17, -155, 2073]


def family_rows_low_to_high(rows_desc: dict) -> dict[int, list[int]]:
    """Full low-to-high coefficient lists of P_r / Q_r (restoring the factor n)."""
    out = {}
    for r, row in rows_desc.items():
        out[r] = [1] if row is None else [0] + row[::-1]
    return out
