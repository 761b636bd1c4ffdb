"""Polynomial Taylor series in several complex variables.

A series is a sparse map from exponent tuples to complex coefficients; all
operations here are exact on that finite data.  Zero coefficients are pruned
on construction so equality of series is plain map equality, and every sum
over stored terms runs in the canonical order (ascending degree, then
lexicographically descending parts) to keep results bit-reproducible.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

from . import multiindex as mi


def as_point(z, dimension: int | None = None) -> tuple[complex, ...]:
    """Coerce to a tuple of finite complex components."""
    pt = tuple(complex(c) for c in z)
    if len(pt) < 1:
        raise ValueError("point must have at least one component")
    if dimension is not None and len(pt) != dimension:
        raise ValueError(f"dimension mismatch: expected {dimension}, got {len(pt)}")
    if any(not cmath.isfinite(c) for c in pt):
        raise ValueError(f"point has non-finite components: {pt}")
    return pt


def inner(z, w) -> complex:
    """Hermitian inner product sum_j z_j * conj(w_j)."""
    zt = as_point(z)
    wt = as_point(w, len(zt))
    return sum((zj * wj.conjugate() for zj, wj in zip(zt, wt)), 0j)


def vector_norm(z) -> float:
    """Euclidean norm |z| = sqrt(<z, z>)."""
    return math.sqrt(sum(abs(c) ** 2 for c in as_point(z)))


def canonical_order(keys):
    """Sort exponent tuples by degree, then lexicographically descending."""
    return sorted(keys, key=lambda p: (sum(p), tuple(-x for x in p)))


@dataclass(frozen=True, eq=True)
class TaylorSeries:
    """Sparse polynomial sum_p a_p z^p in ``dimension`` complex variables."""

    dimension: int
    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dimension}")
        clean = {}
        for p, a in self.coefficients.items():
            q = mi.as_multiindex(p)
            if len(q) != self.dimension:
                raise ValueError(
                    f"index {q} has length {len(q)}, series dimension is {self.dimension}"
                )
            a = complex(a)
            if a != 0:
                clean[q] = a
        object.__setattr__(self, "coefficients", clean)

    @property
    def max_degree(self) -> int:
        """Largest total degree with a nonzero coefficient; -1 for the zero series."""
        if not self.coefficients:
            return -1
        return max(sum(p) for p in self.coefficients)

    def evaluate(self, z) -> complex:
        """Value sum_p a_p z^p, accumulated in canonical index order."""
        pt = as_point(z, self.dimension)
        total = 0j
        for p in canonical_order(self.coefficients):
            term = self.coefficients[p]
            for zj, pj in zip(pt, p):
                term *= zj**pj
            total += term
        return total

    def split(self, m: int) -> tuple[TaylorSeries, TaylorSeries]:
        """Degree split: terms with |p| < m and terms with |p| >= m."""
        if m < 0:
            raise ValueError(f"split order must be >= 0, got {m}")
        low = {p: a for p, a in self.coefficients.items() if sum(p) < m}
        high = {p: a for p, a in self.coefficients.items() if sum(p) >= m}
        return TaylorSeries(self.dimension, low), TaylorSeries(self.dimension, high)

    def derivative(self, q) -> TaylorSeries:
        """Mixed partial of multi-order q; term a_p z^p maps to a_p p!/(p-q)! z^(p-q).

        Terms with any exponent below q vanish.
        """
        qt = mi.as_multiindex(q)
        if len(qt) != self.dimension:
            raise ValueError(
                f"derivative order {qt} has length {len(qt)}, series dimension is {self.dimension}"
            )
        out = {}
        for p, a in self.coefficients.items():
            if any(pj < qj for pj, qj in zip(p, qt)):
                continue
            factor = 1
            for pj, qj in zip(p, qt):
                factor *= math.perm(pj, qj)
            out[tuple(pj - qj for pj, qj in zip(p, qt))] = a * factor
        return TaylorSeries(self.dimension, out)

    def to_json_dict(self) -> dict:
        """Wire form {"n": int, "terms": [{"p": [...], "re": f, "im": f}]}."""
        terms = [
            {"p": list(p), "re": self.coefficients[p].real, "im": self.coefficients[p].imag}
            for p in canonical_order(self.coefficients)
        ]
        return {"n": self.dimension, "terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> TaylorSeries:
        coeffs = {}
        for term in data["terms"]:
            p = tuple(term["p"])
            coeffs[p] = coeffs.get(p, 0j) + complex(term["re"], term["im"])
        return cls(int(data["n"]), coeffs)

    @classmethod
    def from_json(cls, text: str) -> TaylorSeries:
        return cls.from_json_dict(json.loads(text))


def monomial(p) -> TaylorSeries:
    """The series z^p with unit coefficient."""
    q = mi.as_multiindex(p)
    return TaylorSeries(len(q), {q: 1.0 + 0j})


def zero(dimension: int) -> TaylorSeries:
    return TaylorSeries(dimension, {})
