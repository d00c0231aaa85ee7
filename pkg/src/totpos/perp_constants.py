"""Calibrated conventions for the orthogonal-flag map.

Generated by ``python -m totpos.calibrate``; do not edit by hand.
For each ambient dimension m: a sign vector applied after row
reversal of the inverse transpose, and a fixed symmetric matrix
multiplied on the right (the inverse of the bilinear form realizing
orthogonality).
"""

PERP_CONVENTIONS = {
    2: ((1, 1), ((0, 1), (1, 0))),
    3: ((1, 1, 1), ((0, 0, 1), (0, 1, 0), (1, 0, 0))),
    4: ((1, 1, 1, 1), ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))),
}
