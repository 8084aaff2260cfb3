"""Published benchmark values for the non-dimensional frequency parameter.

Reference solutions for the free vibration of a shear-deformable beam
with nu = 0.3 and shear correction factor 5/6, tabulated as
lambda = sqrt(omega L^2 sqrt(rho A / (E I))) for ten modes at seven
thickness-to-span ratios. Thick-ratio entries include second-spectrum
(shear branch) transverse modes, which interleave with the bending
branch when sorted by frequency; axial modes are excluded.

The thin-ratio high-mode entries carry the original computation's own
discretization error of up to ~0.3 % (pinned-pinned) and ~1 %
(clamped-clamped) above the converged values.
"""

from __future__ import annotations

import numpy as np

H_OVER_L = (0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.2)

N_MODES = 10

# rows: modes 1..10; columns: h/L ratios in H_OVER_L order
PINNED_PINNED = np.array([
    [3.1417,  3.1415,  3.1413,  3.1405,  3.135,   3.1157,  3.0453],
    [6.2839,  6.2828,  6.2811,  6.2747,  6.2314,  6.0907,  5.6716],
    [9.4271,  9.4234,  9.4177,  9.3964,  9.2554,  8.8405,  7.8395],
    [12.5718, 12.5632, 12.5497, 12.4995, 12.1814, 11.3431, 9.6571],
    [15.7187, 15.7017, 15.6755, 15.5787, 14.9928, 13.6132, 11.2221],
    [18.8682, 18.8388, 18.7937, 18.6286, 17.6812, 15.6792, 12.6023],
    [22.021,  21.9742, 21.9028, 21.645,  20.245,  17.5707, 13.0323],
    [25.1776, 25.1075, 25.0014, 24.6237, 22.6866, 19.3144, 13.4443],
    [28.3388, 28.2386, 28.0882, 27.5614, 25.0117, 20.9328, 13.8434],
    [31.5052, 31.3672, 31.162,  30.4553, 27.2271, 22.4445, 14.4378],
])

CLAMPED_CLAMPED = np.array([
    [4.72998, 4.72963, 4.72840, 4.72350, 4.68991, 4.57955, 4.24201],
    [7.9272,  7.8877,  7.8606,  7.8321,  7.7042,  7.3314,  6.418],
    [11.1019, 11.0423, 10.9991, 10.9396, 10.641,  9.8563,  8.2853],
    [14.2781, 14.1946, 14.1304, 14.0223, 13.4622, 12.1456, 9.9038],
    [17.4574, 17.3452, 17.2541, 17.0761, 16.1602, 14.2327, 11.3488],
    [20.6401, 20.4939, 20.3685, 20.0964, 18.7332, 16.149,  12.6403],
    [23.827,  23.6404, 23.4724, 23.0791, 21.184,  17.9218, 13.4567],
    [27.0187, 26.7843, 26.5644, 26.0209, 23.5185, 19.5727, 13.8102],
    [30.216,  29.9254, 29.6431, 28.9188, 25.7439, 21.1189, 14.4806],
    [33.4195, 33.0636, 32.7075, 31.7707, 27.8682, 22.5739, 14.9384],
])

TABLES = {1: ("pinned-pinned", PINNED_PINNED),
          2: ("clamped-clamped", CLAMPED_CLAMPED)}
