"""Numeric evaluation of zeta-type series and their chained variants.

All evaluators share the same truncation semantics: a depth N caps every
summation index, so an r-fold sum runs over the part of its index region
inside the box {1..N}^r.  Values are plain float64; each comes with an
err_bound field holding a truncation estimate:

* monotone sums (zeta, multiple_zeta, multiple_zeta_star) use an
  integral tail bound for the outer index times partial-sum bounds for
  the inner ones, which is a genuine upper bound;
* alternating sums (dirichlet_eta, the chained sums) use the magnitude
  of the first omitted outer term with a safety factor, which is a
  heuristic estimate validated by the depth-doubling tests.

A small floating-point noise allowance is folded into every bound.
Final reductions go through math.fsum (exactly rounded compensated
summation); intermediate per-level prefix sums are sequential float64
cumulative sums in fixed ascending-index order, so single-threaded runs
are bitwise reproducible.

For even integer arguments the exact values are available as rational
multiples of powers of pi through zeta_even_exact and
dirichlet_eta_even_exact; verification code prefers those where it can.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

import numpy as np

from .exact import bernoulli

__all__ = [
    "EvalConfig",
    "SeriesValue",
    "default_config",
    "zeta",
    "zeta_even_exact",
    "dirichlet_eta",
    "dirichlet_eta_even_exact",
    "multiple_zeta",
    "multiple_zeta_star",
    "alternating_chain_sum",
    "alternating_chain_tail",
    "alternating_chain_tail_family",
    "symmetrize",
    "innermost_peel_residual",
    "bottom_block_residual",
]

DEFAULT_TOL = 1e-6
DEFAULT_MARGIN = 0.05
DEPTH_LOW_RANK = 1_000_000  # default depth for 1- and 2-fold sums
DEPTH_HIGH_RANK = 200_000  # default depth for deeper sums
MAX_SYMMETRIZE_PARTS = 6

_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class EvalConfig:
    """Truncation depth plus the tolerances the caller is aiming for.

    ``depth`` caps every summation index.  ``target_tol`` is carried
    along for report formatting.  ``min_exponent_margin`` is the delta
    in the requirement s >= 1 + delta on every exponent, which keeps the
    truncation bounds finite and meaningful.
    """

    depth: int = DEPTH_HIGH_RANK
    target_tol: float = DEFAULT_TOL
    min_exponent_margin: float = DEFAULT_MARGIN

    def __post_init__(self) -> None:
        if self.depth < 2:
            raise ValueError("depth must be at least 2")
        if not self.target_tol > 0:
            raise ValueError("target_tol must be positive")
        if not self.min_exponent_margin > 0:
            raise ValueError("min_exponent_margin must be positive")


def default_config(parts: int) -> EvalConfig:
    """Default depth by number of nested indices: 10^6 up to 2, 2*10^5 beyond."""
    if parts < 1:
        raise ValueError("parts must be at least 1")
    return EvalConfig(depth=DEPTH_LOW_RANK if parts <= 2 else DEPTH_HIGH_RANK)


@dataclass(frozen=True)
class SeriesValue:
    """A float value bundled with its truncation-error estimate."""

    value: float
    err_bound: float

    def __post_init__(self) -> None:
        if not self.err_bound >= 0:
            raise ValueError("err_bound must be nonnegative")

    def __float__(self) -> float:
        return self.value


def _validate_exponents(s: Sequence[float], cfg: EvalConfig) -> list[float]:
    out = [float(x) for x in s]
    if not out:
        raise ValueError("need at least one exponent")
    floor = 1.0 + cfg.min_exponent_margin
    for x in out:
        if not x >= floor:
            raise ValueError(
                f"exponent {x} below 1 + margin = {floor}; the truncated sum "
                "would not be meaningful"
            )
    return out


@lru_cache(maxsize=8)
def _powers(s: float, depth: int) -> np.ndarray:
    """n^(-s) for n = 1..depth, cached read-only."""
    n = np.arange(1, depth + 1, dtype=np.float64)
    p = n ** (-s)
    p.flags.writeable = False
    return p


def _signed_powers(s: float, depth: int) -> np.ndarray:
    """(-1)^n n^(-s) for n = 1..depth (fresh writable array)."""
    p = _powers(s, depth).copy()
    p[0::2] = -p[0::2]
    return p


def _fsum(arr: np.ndarray) -> float:
    return math.fsum(arr.tolist())


def _noise(l1_scale: float, depth: int, levels: int) -> float:
    # worst-case linear accumulation model for the per-level cumulative sums
    return _EPS * depth * max(levels, 1) * abs(l1_scale)


def zeta(s: float, cfg: EvalConfig | None = None) -> SeriesValue:
    """Truncated zeta(s) = sum_{n<=N} n^(-s) with an integral tail bound."""
    cfg = cfg or default_config(1)
    (s,) = _validate_exponents([s], cfg)
    p = _powers(s, cfg.depth)
    value = _fsum(p)
    tail = cfg.depth ** (1.0 - s) / (s - 1.0)
    return SeriesValue(value, tail + _noise(value, cfg.depth, 1))


def zeta_even_exact(k: int) -> Fraction:
    """The rational q with zeta(2k) = q * pi^(2k).

    Derived from the alternating-sum evaluation: eta(2k) is the rational
    pi-multiple (2^(2k-1) - 1) B_k / (2k)! and zeta = eta / (1 - 2^(1-s)).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return dirichlet_eta_even_exact(k) / (1 - Fraction(2) ** (1 - 2 * k))


def dirichlet_eta(s: float, cfg: EvalConfig | None = None) -> SeriesValue:
    """Truncated eta(s) = sum (-1)^(n-1) n^(-s), summed in positive pairs.

    The value is accumulated as (2m-1)^(-s) - (2m)^(-s) over complete
    pairs, which keeps every addend positive.  The error bound is the
    magnitude of the first unsummed term, the classical bound for a
    truncated alternating series with decreasing terms.
    """
    cfg = cfg or default_config(1)
    (s,) = _validate_exponents([s], cfg)
    pairs = cfg.depth // 2
    p = _powers(s, cfg.depth)
    paired = p[0 : 2 * pairs : 2] - p[1 : 2 * pairs : 2]
    value = _fsum(paired)
    tail = float(2 * pairs + 1) ** (-s)
    return SeriesValue(value, tail + _noise(value, cfg.depth, 1))


def dirichlet_eta_even_exact(k: int) -> Fraction:
    """The rational q with eta(2k) = q * pi^(2k), via Bernoulli numbers."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return Fraction(2 ** (2 * k - 1) - 1, factorial(2 * k)) * bernoulli(k)


def _nested_monotone(s: list[float], cfg: EvalConfig, strict: bool) -> SeriesValue:
    """Shared DP for the strict (>) and non-strict (>=) nested zeta sums.

    Level arrays are indexed by the value of one summation index; each
    outer level multiplies its power weights by a prefix sum of the level
    below (shifted by one position in the strict case).
    """
    depth = cfg.depth
    level = _powers(s[-1], depth).copy()
    for j in range(len(s) - 2, -1, -1):
        prefix = np.cumsum(level)
        if strict:
            shifted = np.empty_like(prefix)
            shifted[0] = 0.0
            shifted[1:] = prefix[:-1]
            prefix = shifted
        level = _powers(s[j], depth) * prefix
    value = _fsum(level)
    inner_bound = 1.0
    for sj in s[1:]:
        partial = float(_powers(sj, depth).sum())
        inner_bound *= partial + depth ** (1.0 - sj) / (sj - 1.0)
    tail = depth ** (1.0 - s[0]) / (s[0] - 1.0) * inner_bound
    return SeriesValue(value, tail + _noise(value, depth, len(s)))


def multiple_zeta(s: Sequence[float], cfg: EvalConfig | None = None) -> SeriesValue:
    """Truncated multiple zeta value over strictly decreasing indices.

    sum over n_1 > n_2 > ... > n_r >= 1 (all <= depth) of prod n_i^(-s_i).
    """
    sl = _validate_exponents(s, cfg or default_config(len(list(s))))
    cfg = cfg or default_config(len(sl))
    return _nested_monotone(sl, cfg, strict=True)


def multiple_zeta_star(s: Sequence[float], cfg: EvalConfig | None = None) -> SeriesValue:
    """Truncated non-strict multiple zeta value (indices may repeat).

    sum over n_1 >= n_2 >= ... >= n_r >= 1 (all <= depth) of prod n_i^(-s_i).
    """
    sl = _validate_exponents(s, cfg or default_config(len(list(s))))
    cfg = cfg or default_config(len(sl))
    return _nested_monotone(sl, cfg, strict=False)


def _chain_final_level(s: list[float], depth: int) -> np.ndarray:
    """Final-level array of the parity-chained alternating sum.

    Entry n of the returned array is the signed sum over all chains
    n_1 >=' n_2 >=' ... >=' n_r = n inside {1..depth}, where a >=' b
    means a >= b with equality permitted only at even a.  Summing a
    suffix of the array bounds the innermost index from below.
    """
    level = _signed_powers(s[0], depth)
    for j in range(1, len(s)):
        suffix = np.cumsum(level[::-1])[::-1]
        # drop the equal-index term where the shared value is odd
        suffix[0::2] -= level[0::2]
        level = _signed_powers(s[j], depth) * suffix
    return level


def _chain_tail_estimate(s: list[float], depth: int, base: int) -> float:
    """First-omitted-outer-term estimate for chained sums from n_r >= base."""
    est = 2.0 * float(depth + 1) ** (-s[0])
    if len(s) > 1:
        est *= float(max(base, 1)) ** (-sum(s[1:]))
        for sj in s[1:]:
            est *= 1.0 + 2.0 ** (-sj)
    return est


def alternating_chain_sum(s: Sequence[float], cfg: EvalConfig | None = None) -> SeriesValue:
    """The parity-chained alternating sum over n_1 >=' ... >=' n_r >= 1.

    Each term is (-1)^(n_1+...+n_r) / (n_1^(s_1) ... n_r^(s_r)); the
    chain relation a >=' b allows equality only when the shared value is
    even.  For r = 1 this is -eta(s).  The value is negative for
    admissible exponents, with magnitude shrinking as r grows.
    """
    cfg = cfg or default_config(len(list(s)))
    sl = _validate_exponents(s, cfg)
    final = _chain_final_level(sl, cfg.depth)
    value = _fsum(final)
    l1 = float(np.abs(final).sum())
    err = _chain_tail_estimate(sl, cfg.depth, 1) + _noise(l1, cfg.depth, len(sl))
    return SeriesValue(value, err)


def alternating_chain_tail(
    k: int, s: Sequence[float], cfg: EvalConfig | None = None
) -> SeriesValue:
    """Chained alternating sum with the innermost index bounded by n_r >= 2k.

    The empty exponent list is the empty product, identically 1, which
    is the base case the peeling recurrences bottom out at.  Values are
    positive: the leading surviving term has all indices at the even
    value 2k.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    sl = list(s)
    if not sl:
        return SeriesValue(1.0, 0.0)
    cfg = cfg or default_config(len(sl))
    sl = _validate_exponents(sl, cfg)
    final = _chain_final_level(sl, cfg.depth)
    start = 2 * k - 1  # 0-based position of index value 2k
    if start >= cfg.depth:
        sliced = final[:0]
    else:
        sliced = final[start:]
    value = _fsum(sliced)
    l1 = float(np.abs(sliced).sum())
    err = _chain_tail_estimate(sl, cfg.depth, 2 * k) + _noise(l1, cfg.depth, len(sl))
    return SeriesValue(value, err)


def alternating_chain_tail_family(
    s: Sequence[float], cfg: EvalConfig | None = None
) -> np.ndarray:
    """All tail values for k = 1..depth//2 in one pass.

    Returns an array whose entry k-1 is the chained sum with n_r >= 2k,
    at the same truncation depth as alternating_chain_tail would use.
    For the empty exponent list every entry is exactly 1.
    """
    sl = list(s)
    cfg = cfg or default_config(max(len(sl), 1))
    half = cfg.depth // 2
    if not sl:
        return np.ones(half, dtype=np.float64)
    sl = _validate_exponents(sl, cfg)
    final = _chain_final_level(sl, cfg.depth)
    suffix = np.cumsum(final[::-1])[::-1]
    return suffix[1 : 2 * half : 2].copy()


def symmetrize(
    kernel: str, s: Sequence[float], cfg: EvalConfig | None = None
) -> SeriesValue:
    """Sum a kernel over all r! orderings of the exponents, repeats included.

    Kernels: "T" is the parity-chained alternating sum, "S" the
    non-strict multiple zeta, "strict" the strict multiple zeta.  Equal
    exponents are re-evaluated per permutation rather than deduplicated,
    so the result is literally the r!-term symmetrization.  Error bounds
    add across the terms.
    """
    kernels: dict[str, Callable[[Sequence[float], EvalConfig], SeriesValue]] = {
        "T": alternating_chain_sum,
        "S": multiple_zeta_star,
        "strict": multiple_zeta,
    }
    if kernel not in kernels:
        raise ValueError(f"unknown kernel {kernel!r}; expected one of {sorted(kernels)}")
    sl = list(s)
    if not 1 <= len(sl) <= MAX_SYMMETRIZE_PARTS:
        raise ValueError(
            f"symmetrize supports 1..{MAX_SYMMETRIZE_PARTS} exponents, got {len(sl)}"
        )
    cfg = cfg or default_config(len(sl))
    fn = kernels[kernel]
    values = []
    errors = []
    for perm in itertools.permutations(sl):
        sv = fn(list(perm), cfg)
        values.append(sv.value)
        errors.append(sv.err_bound)
    return SeriesValue(math.fsum(values), math.fsum(errors))


def innermost_peel_residual(
    s: Sequence[float], cfg: EvalConfig | None = None
) -> tuple[float, float]:
    """Both sides of the recurrence that peels off the innermost exponent.

    The chained sum satisfies

        chain(s_1..s_r) = sum_{k>=1} (-(2k-1)^(-s_r) + (2k)^(-s_r))
                          * tail_k(s_1..s_{r-1})

    because grouping chains by their innermost value n_r forces the rest
    of the chain to live on indices >= 2k, whether n_r is 2k-1 or 2k.
    Both sides are evaluated at the same truncation depth, under which
    the grouping is an exact bijection of finite index sets, so the
    difference is pure floating-point noise.  Returns (lhs, rhs).
    """
    cfg = cfg or default_config(len(list(s)))
    sl = _validate_exponents(s, cfg)
    lhs = alternating_chain_sum(sl, cfg).value
    depth = cfg.depth
    if len(sl) == 1:
        # the empty-prefix tail is identically 1 at every lower bound
        fam = np.ones((depth + 1) // 2, dtype=np.float64)
    else:
        fam = alternating_chain_tail_family(sl[:-1], cfg)
    # iterate the innermost value directly so odd depths stay exact
    n = np.arange(1, depth + 1, dtype=np.float64)
    weights = _signed_powers(sl[-1], depth)
    k_of_n = (np.arange(1, depth + 1) + 1) // 2  # 1-based tail index for each n_r
    fam_padded = np.concatenate(([0.0], fam, np.zeros(depth)))
    terms = weights * fam_padded[k_of_n]
    rhs = _fsum(terms)
    return lhs, rhs


def bottom_block_residual(
    k: int, s: Sequence[float], cfg: EvalConfig | None = None
) -> tuple[float, float]:
    """Both sides of the recurrence that strips the terminal constant block.

    A chain counted by the k-th tail ends in a maximal run at some even
    value 2l >= 2k, topped by an element equal to 2l or 2l + 1 at
    position j; everything above position j lives on indices >= 2l + 2.
    Summing over (l, j) gives

        tail_k(s_1..s_r) = sum_{l>=k} sum_{j=1..r}
            (2l)^(-(s_{j+1}+...+s_r))
            * ((2l)^(-s_j) - (2l+1)^(-s_j))
            * tail_{l+1}(s_1..s_{j-1})

    Evaluated at one shared truncation depth the decomposition is an
    exact bijection, so the residual is floating-point noise.  Returns
    (lhs, rhs).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    cfg = cfg or default_config(len(list(s)))
    sl = _validate_exponents(s, cfg)
    r = len(sl)
    depth = cfg.depth
    lhs = alternating_chain_tail(k, sl, cfg).value
    half = depth // 2
    terms: list[float] = []
    for j in range(1, r + 1):
        prefix = sl[: j - 1]
        fam = alternating_chain_tail_family(prefix, cfg)  # entry t-1 = tail_t(prefix)
        suffix_exp = sum(sl[j:])  # s_{j+1} + ... + s_r
        sj = sl[j - 1]
        for ell in range(k, half + 1):
            # tail_{ell+1}(prefix); empty prefix is identically 1 at any bound
            if not prefix:
                rest = 1.0
            else:
                rest = float(fam[ell]) if ell < len(fam) else 0.0
            if rest == 0.0:
                continue
            even_v = 2 * ell
            common = float(even_v) ** (-suffix_exp) if suffix_exp else 1.0
            if even_v <= depth:
                terms.append(common * float(even_v) ** (-sj) * rest)
            if even_v + 1 <= depth:
                terms.append(-common * float(even_v + 1) ** (-sj) * rest)
    rhs = math.fsum(terms)
    return lhs, rhs
