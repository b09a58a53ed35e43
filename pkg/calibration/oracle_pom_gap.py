"""Pre-build oracle: max over a uniform x-grid of sum_{j<=n} |sin jx|/j - (2/pi) log n."""
import math

import numpy as np


def gap(n, grid):
    x = np.pi * np.arange(grid) / grid
    acc = np.zeros(grid)
    for j in range(1, n + 1):
        acc += np.abs(np.sin(j * x)) / j
    return float(acc.max() - 2 / math.pi * math.log(n))


def main():
    for n in (1, 10, 100, 1000, 10000):
        print(n, f"{gap(n, 10**4):.6f}")



def running_max(n_max, grid):
    """Largest gap over every n <= n_max, scanning j once."""
    x = np.pi * np.arange(grid) / grid
    acc = np.zeros(grid)
    best, arg = -np.inf, 0
    for j in range(1, n_max + 1):
        acc += np.abs(np.sin(j * x)) / j
        g = acc.max() - 2 / math.pi * math.log(j)
        if g > best:
            best, arg = g, j
    return float(best), arg


if __name__ == "__main__":
    main()
    print("sup over n<=10^4:", running_max(10**4, 10**4))
