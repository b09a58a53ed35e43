"""Acceptance thresholds fixed by the pre-build oracle runs.

See ``calibration/ORACLE_RUNS.md`` for the runs that produced these numbers.
They are not tuned against the library.
"""

# l1 model fit over q = 2**10 .. 2**17, K = floor(q**0.7), N = floor(q/3), M = 0
L1_FIT_A_ORACLE = 0.354161
L1_FIT_A_BAND = (0.344, 0.364)

# sup over grid x and n <= 10**4 of sum |sin jx|/j - (2/pi) ln n, grid = 10**4
POM_C_EMP = 1.0
POM_STABILISATION = 0.2

# max over primitive chi, primes 500 < q <= 3000, eps = 0.05
LONG_SUM_THRESHOLD = 1.25
LONG_SUM_ORACLE_MAX = 1.218602
