import mpmath as mp
import numpy as np

from holospaces import multiindex as mi
from holospaces.taylor import TaylorSeries


def random_polynomial(rng, n, max_degree, density=1.0, scale=1.0):
    """Dense-ish random polynomial with standard-normal complex coefficients."""
    coeffs = {}
    for k in range(max_degree + 1):
        for p in mi.enumerate_indices(n, k):
            if density < 1.0 and rng.uniform() > density:
                continue
            coeffs[p] = scale * complex(rng.standard_normal(), rng.standard_normal())
    return TaylorSeries(n, coeffs)


def random_point(rng, n, max_norm):
    """Point in C^n with |z| uniformly at most max_norm."""
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    norm = np.linalg.norm(v)
    if norm == 0:
        return tuple(0j for _ in range(n))
    r = max_norm * rng.uniform() ** (1.0 / (2 * n))
    return tuple(complex(c) for c in v / norm * r)


def pfq_reference(nums, dens, z, terms=200, dps=34):
    """Direct partial summation of pFq at elevated precision (test oracle)."""
    with mp.workdps(dps):
        total = mp.mpc(0)
        term = mp.mpc(1)
        zz = mp.mpc(z)
        for k in range(terms):
            total += term
            ratio = mp.mpf(1)
            for a in nums:
                ratio *= mp.mpf(a) + k
            for b in dens:
                ratio /= mp.mpf(b) + k
            term *= ratio * zz / (k + 1)
        return complex(total)
