"""Basis-function series with controlled truncation.

The cosine-type basis at harmonic k is

    v_k cos(kt) + cos_outer * sum_{m=1..M} (-1)^(m*I1)
        [ v_{mN+k} cos((mN+k)t) + cos_inner * v_{mN-k} cos((mN-k)t) ],

and the sine-type basis is the same with sines and the (sin_outer, sin_inner)
signs.  The infinite series is cut at M alias blocks; M is chosen from the
tail bound and a policy, and the same M is used for the basis series and for
the interpolation factors so that the two truncate consistently.

Summation runs over ascending m with compensated (Kahan) accumulation across
chunks, since the terms are not monotone for the sinc-power family.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import numpy as np

from .errors import InvalidGrid, TruncationNotConverged
from .factors import FactorFamily, factor_at, factor_values, tail_bound

# Default fixed summation order for families without a tail bound (r = 0).
DEFAULT_FIXED_M = 10_000

# Soft cap on elements held per summation chunk.
_CHUNK_ELEMENTS = 1 << 20


@dataclass(frozen=True)
class TruncationPolicy:
    """How to cut the alias series.

    ``tol`` is the target bound on the discarded absolute tail; summation
    stops at the smallest m >= ``m_min`` whose tail bound is below it, capped
    at ``m_max``.  Setting ``fixed_m`` bypasses the tolerance logic entirely
    and sums exactly that many blocks; this is the only supported mode for
    families with no tail bound (r = 0, or custom tables with no declared
    decay exponent).
    """

    tol: float = 1e-10
    m_min: int = 4
    m_max: int = 20_000
    fixed_m: int | None = None

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol!r}")
        try:
            object.__setattr__(self, "m_min", operator.index(self.m_min))
            object.__setattr__(self, "m_max", operator.index(self.m_max))
            if self.fixed_m is not None:
                object.__setattr__(self, "fixed_m", operator.index(self.fixed_m))
        except TypeError:
            raise ValueError("m_min, m_max, and fixed_m must be integers") from None
        if not 1 <= self.m_min <= self.m_max:
            raise ValueError(f"need 1 <= m_min <= m_max, got {self.m_min}, {self.m_max}")
        if self.fixed_m is not None and self.fixed_m < 1:
            raise ValueError(f"fixed_m must be a positive integer, got {self.fixed_m!r}")


def _check_harmonic(n_nodes: int, k: int) -> None:
    if n_nodes < 3 or n_nodes % 2 == 0:
        raise InvalidGrid(f"n_nodes must be odd and >= 3, got {n_nodes}")
    half = (n_nodes - 1) // 2
    if not 1 <= k <= half:
        raise ValueError(f"k must be in [1, {half}], got {k}")


def truncation_order(
    family: FactorFamily, n_nodes: int, k: int, policy: TruncationPolicy
) -> int:
    """Number of alias blocks M to sum for harmonic k under the policy.

    Every consumer of the series (basis evaluation, interpolation factors,
    spline sampling) obtains M through this function, which is what makes the
    truncated basis exactly proportional to the truncated factors at the
    interpolation nodes.

    Raises
    ------
    TruncationNotConverged
        If the family admits no tail bound and no ``fixed_m`` was requested.
    """
    _check_harmonic(n_nodes, k)
    if policy.fixed_m is not None:
        return policy.fixed_m

    lo = policy.m_min
    b = tail_bound(family, n_nodes, k, lo)
    if math.isinf(b):
        raise TruncationNotConverged(
            "family has no tail bound (r = 0 or undeclared table decay); "
            "request fixed-M summation instead"
        )
    if b < policy.tol:
        return lo
    hi = policy.m_max
    if tail_bound(family, n_nodes, k, hi) >= policy.tol:
        return hi  # tolerance unreachable within the cap
    # Bound is nonincreasing in m: bisect for the smallest admissible m.
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail_bound(family, n_nodes, k, mid) < policy.tol:
            hi = mid
        else:
            lo = mid
    return hi


def alias_sum(
    family: FactorFamily,
    n_nodes: int,
    k: int,
    m_count: int,
    alternating: int,
    inner_sign: int,
    t=None,
    trig=None,
):
    """Compensated sum of the alias blocks m = 1..m_count.

    Each block contributes ``(-1)^(m*alternating) * [v_{mN+k} * g((mN+k)t)
    + inner_sign * v_{mN-k} * g((mN-k)t)]`` where g is ``trig`` (np.cos or
    np.sin).  With ``trig=None`` the trigonometric weights are 1, which is the
    form the interpolation factors need.  ``t`` may be a scalar or a 1-D
    array; the result matches its shape.
    """
    if trig is not None:
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        width = t_arr.size
    else:
        t_arr = None
        width = 1
    total = np.zeros(width)
    comp = np.zeros(width)

    chunk = max(1, _CHUNK_ELEMENTS // max(1, width))
    for start in range(1, m_count + 1, chunk):
        stop = min(start + chunk, m_count + 1)
        m = np.arange(start, stop)
        j_plus = m * n_nodes + k
        j_minus = m * n_nodes - k
        v_plus = factor_values(family, j_plus)
        v_minus = factor_values(family, j_minus)
        if alternating:
            sgn = np.where(m % 2 == 1, -1.0, 1.0)
            v_plus = v_plus * sgn
            v_minus = v_minus * sgn
        if trig is None:
            part = np.array([(v_plus + inner_sign * v_minus).sum()])
        else:
            terms = v_plus * trig(np.outer(t_arr, j_plus))
            terms += inner_sign * v_minus * trig(np.outer(t_arr, j_minus))
            part = terms.sum(axis=1)
        # Kahan step: fold the chunk's partial sum into the running total.
        y = part - comp
        snew = total + y
        comp = (snew - total) - y
        total = snew

    if trig is None:
        return float(total[0])
    return total


def _basis(family, signs, i1, n_nodes, k, t, policy, trig, outer, inner):
    _check_harmonic(n_nodes, k)
    if i1 not in (0, 1):
        raise ValueError(f"i1 must be 0 or 1, got {i1!r}")
    m_count = truncation_order(family, n_nodes, k, policy)
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.ndim == 0
    tt = np.atleast_1d(t_arr)
    v_k = factor_at(family, k)
    out = v_k * trig(k * tt) + outer * alias_sum(
        family, n_nodes, k, m_count, alternating=i1, inner_sign=inner, t=tt, trig=trig
    )
    return float(out[0]) if scalar else out


def basis_cos(family, signs, i1: int, n_nodes: int, k: int, t, policy: TruncationPolicy):
    """Cosine-type basis series at harmonic k, truncated per the policy.

    Parameters
    ----------
    family : FactorFamily
        Convergence factors v.
    signs : SignMatrix
        Sign-distribution element; only its cosine row enters here.
    i1 : int
        Crosslink grid index; contributes the (-1)^(m*i1) alternation.
    n_nodes : int
        Odd node count N.
    k : int
        Harmonic index, 1 <= k <= (N-1)/2.
    t : float or np.ndarray
        Evaluation angle(s).
    policy : TruncationPolicy
        Truncation control.
    """
    return _basis(
        family, signs, i1, n_nodes, k, t, policy, np.cos, signs.cos_outer, signs.cos_inner
    )


def basis_sin(family, signs, i1: int, n_nodes: int, k: int, t, policy: TruncationPolicy):
    """Sine-type basis series at harmonic k; parameters as in :func:`basis_cos`."""
    return _basis(
        family, signs, i1, n_nodes, k, t, policy, np.sin, signs.sin_outer, signs.sin_inner
    )
