"""Moduli of continuity: families, Zygmund conditions, growth indices, W_omega.

A modulus of continuity here is a positive continuous function on (0, delta0]
with limit 0 at the origin, almost increasing, and with omega(t)/t almost
decreasing.  The module provides:

  * built-in parametric families (power, power-log, ... ) plus a parser for
    the CLI family grammar `tag:name=value,...`;
  * almost-monotonicity certificates with a stability flag;
  * the two Zygmund integral conditions
        Z0:  int_0^t omega(x)/x dx      <= C omega(t)
        Z1:  int_t^d0 omega(x)/x^2 dx   <= C omega(t)/t
    returning the sampled constant or math.inf when the sup keeps growing
    as the grid extends toward 0 (divergence sentinel);
  * Matuszewska-Orlicz lower/upper index estimates m(omega), M(omega);
  * the cumulative weight W_omega(t) = int_0^t omega(s)/s ds as a new
    modulus (precomputed, monotone-interpolated).

Divergence detection is asymptotic in nature and desk-scale grids can only
see finitely far: integrands diverging slower than any power (e.g. the
iterated-log rate of int omega/s for omega = 1/ln(e/t)) classify as finite
here.  The sentinel rule is: the running sup grew by more than 10% on each
of the last three decade extensions of the t grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.special import roots_legendre

from .specfun import DomainError


class ConstructionError(ValueError):
    """Family parameters or integrability requirements violated."""


FAMILY_PARAMS = {
    "power": ("gamma",),
    "power_log": ("gamma", "theta"),
    "power_loglog": ("gamma", "lambda"),
    "log_inverse": ("beta",),
    "power_logexponent": ("gamma", "C", "lambda"),
}

_LOGLOG_DELTA_MAX = math.exp(-1.0) * 0.95


@dataclass(frozen=True)
class ModulusSpec:
    """An evaluable modulus-of-continuity candidate on (0, delta0]."""

    evaluator: object
    delta0: float
    family_tag: str = "custom"
    params: dict = field(default_factory=dict)

    def __call__(self, t):
        t_arr = np.asarray(t, dtype=float)
        out = self.evaluator(t_arr)
        return float(out) if t_arr.ndim == 0 else out


@dataclass(frozen=True)
class MonotonicityCertificate:
    direction: str            # "almost_increasing" | "almost_decreasing"
    constant: float
    sample_size: int
    passed: bool


@dataclass(frozen=True)
class IndexEstimate:
    m_lower: float
    M_upper: float
    epsilon_grid: np.ndarray
    t_grid: np.ndarray
    converged: bool


def _check_vanishes(w: ModulusSpec) -> None:
    ts = w.delta0 * 10.0 ** -np.arange(0, 13, dtype=float)
    vals = w(ts)
    if not np.all(np.isfinite(vals)) or np.any(vals <= 0):
        raise ConstructionError("evaluator must be finite and positive on (0, delta0]")
    if not vals[-1] <= 0.05 * vals[0]:
        raise ConstructionError("candidate does not vanish at 0")


def make_family(tag: str, params: dict, delta0: float | None = None) -> ModulusSpec:
    """Construct a built-in modulus family; see FAMILY_PARAMS for the names."""
    if tag not in FAMILY_PARAMS:
        raise ConstructionError(f"unknown family {tag!r}")
    missing = set(FAMILY_PARAMS[tag]) - set(params)
    extra = set(params) - set(FAMILY_PARAMS[tag])
    if missing or extra:
        raise ConstructionError(
            f"family {tag!r} takes parameters {FAMILY_PARAMS[tag]}, got {sorted(params)}")
    p = {k: float(v) for k, v in params.items()}

    if delta0 is None:
        delta0 = 0.3 if tag == "power_loglog" else 0.5
    if not delta0 > 0:
        raise ConstructionError("delta0 must be positive")

    if tag == "power":
        g = p["gamma"]
        if not 0 < g <= 1:
            raise ConstructionError("power family needs gamma in (0, 1]")
        ev = lambda t: t ** g
    elif tag == "power_log":
        g, th = p["gamma"], p["theta"]
        if not 0 < g < 1:
            raise ConstructionError("power_log family needs gamma in (0, 1)")
        if not delta0 < 1:
            raise ConstructionError("power_log family needs delta0 < 1")
        ev = lambda t: t ** g * np.log(1.0 / t) ** th
    elif tag == "power_loglog":
        g, lam = p["gamma"], p["lambda"]
        if not 0 < g < 1:
            raise ConstructionError("power_loglog family needs gamma in (0, 1)")
        if not delta0 <= _LOGLOG_DELTA_MAX:
            raise ConstructionError(
                f"power_loglog needs delta0 <= {_LOGLOG_DELTA_MAX:.3f} (ln ln 1/t > 0)")
        ev = lambda t: t ** g * np.log(np.log(1.0 / t)) ** lam
    elif tag == "log_inverse":
        b = p["beta"]
        if not b > 1:
            raise ConstructionError("log_inverse family needs beta > 1")
        ev = lambda t: np.log(np.e / t) ** (-b)
    else:  # power_logexponent
        g, cc, lam = p["gamma"], p["C"], p["lambda"]
        if not 0 < g < 1:
            raise ConstructionError("power_logexponent family needs gamma in (0, 1)")
        if not lam > 0:
            raise ConstructionError("power_logexponent family needs lambda > 0")
        if not delta0 < 1:
            raise ConstructionError("power_logexponent family needs delta0 < 1")
        ev = lambda t: t ** (g + cc / np.log(1.0 / t) ** lam)

    w = ModulusSpec(evaluator=ev, delta0=delta0, family_tag=tag, params=p)
    _check_vanishes(w)
    return w


def parse_family(text: str, delta0: float | None = None) -> ModulusSpec:
    """Parse the CLI family grammar, e.g. ``power_log:gamma=0.5,theta=1.0``."""
    grammar = ("expected `tag:name=value,...` with tag in "
               + "/".join(FAMILY_PARAMS))
    tag, sep, rest = text.partition(":")
    if not sep or not tag:
        raise ConstructionError(f"cannot parse modulus {text!r}; {grammar}")
    params = {}
    for piece in rest.split(","):
        name, sep2, value = piece.partition("=")
        if not sep2 or not name:
            raise ConstructionError(f"cannot parse modulus {text!r}; {grammar}")
        try:
            params[name.strip()] = float(value)
        except ValueError:
            raise ConstructionError(
                f"cannot parse modulus {text!r}; bad number {value!r}; {grammar}")
    return make_family(tag.strip(), params, delta0)


# ----------------------------- monotonicity -----------------------------

def _monotone_constant(fn, lo: float, hi: float, n: int, direction: str) -> float:
    t = np.geomspace(lo, hi, n)
    v = np.asarray(fn(t), dtype=float)
    if not np.all(np.isfinite(v)) or np.any(v <= 0):
        raise ConstructionError("evaluator non-finite or non-positive on samples")
    if direction == "almost_increasing":
        # sup over t <= s of f(t)/f(s): running max / suffix min
        suffix_min = np.minimum.accumulate(v[::-1])[::-1]
        return float(np.max(v / suffix_min))
    if direction == "almost_decreasing":
        # sup over s <= t of f(t)/f(s): value / prefix min
        prefix_min = np.minimum.accumulate(v)
        return float(np.max(v / prefix_min))
    raise DomainError(f"unknown direction {direction!r}")


def almost_monotone_constant(fn, lo: float, hi: float, direction: str,
                             samples: int = 2000) -> float:
    """Sampled almost-monotonicity constant of an arbitrary positive fn."""
    return _monotone_constant(fn, lo, hi, samples, direction)


def check_almost_monotone(w: ModulusSpec, direction: str,
                          samples: int = 2000) -> MonotonicityCertificate:
    """Certify omega almost increasing, or omega(t)/t almost decreasing.

    The certificate passes when the constant is stable (< 1% growth) under
    doubling the sample count and extending the range one decade deeper.
    A genuine violation of almost-monotonicity by even t^{0.01} grows the
    constant by 10^{0.01} per decade, which this threshold detects.
    """
    if samples < 100:
        raise DomainError("need at least 100 samples")
    if direction == "almost_increasing":
        fn = w.evaluator
    elif direction == "almost_decreasing":
        fn = lambda t: w.evaluator(t) / t
    else:
        raise DomainError(f"unknown direction {direction!r}")
    lo = w.delta0 * 1e-10
    c0 = _monotone_constant(fn, lo, w.delta0, samples, direction)
    c1 = _monotone_constant(fn, lo * 0.1, w.delta0, 2 * samples, direction)
    passed = math.isfinite(c1) and c1 <= c0 * 1.01
    return MonotonicityCertificate(direction=direction, constant=max(c0, c1),
                                   sample_size=samples, passed=passed)


def is_modulus(w: ModulusSpec) -> dict:
    """Run the three modulus-of-continuity checks; returns the certificates."""
    _check_vanishes(w)
    inc = check_almost_monotone(w, "almost_increasing")
    dec = check_almost_monotone(w, "almost_decreasing")
    return {"vanishes_at_zero": True, "almost_increasing": inc,
            "ratio_almost_decreasing": dec,
            "passed": inc.passed and dec.passed}


# ----------------------------- Zygmund conditions -----------------------------

_T_DECADES = 10          # t grid reaches delta0 * 1e-10
_T_PER_DECADE = 8
_EXTRA_DECADES = 12      # inner integral reaches delta0 * 1e-22
_GAUSS_ORDER = 10
_SENTINEL_GROWTH = 1.10
_TAIL_FRACTION = 0.02    # unresolved-tail trigger, see zygmund_Z0_constant


def _panel_values(w: ModulusSpec, mode: str):
    """Panelized Gauss data in u = ln(1/x) coordinates.

    Returns (edges_t, panel_integrals) where edges_t are descending x values
    delta0*10^{-k/8} and each panel integral covers [edges_t[i+1], edges_t[i]].
    mode "z0" integrates omega(x)/x dx = omega(e^{-u}) du; mode "z1"
    integrates omega(x)/x^2 dx = omega(e^{-u}) e^u du.
    """
    total = _T_DECADES + (_EXTRA_DECADES if mode == "z0" else 0)
    ks = np.arange(0, total * _T_PER_DECADE + 1)
    edges_t = w.delta0 * 10.0 ** (-ks / _T_PER_DECADE)
    u_edges = np.log(1.0 / edges_t)
    tg, wg = roots_legendre(_GAUSS_ORDER)
    a, b = u_edges[:-1], u_edges[1:]
    mid = 0.5 * (a + b)[:, None] + 0.5 * (b - a)[:, None] * tg[None, :]
    x = np.exp(-mid)
    vals = w.evaluator(x)
    if mode == "z1":
        vals = vals * np.exp(mid)
    integrals = np.sum(vals * wg[None, :], axis=1) * 0.5 * (b - a)
    return edges_t, integrals


def _sentinel(sups: np.ndarray) -> bool:
    # sups indexed by decade depth; divergent when each of the last three
    # decade extensions grew the sup by more than 10%.
    r = sups[1:] / sups[:-1]
    return bool(np.all(r[-3:] > _SENTINEL_GROWTH))


def zygmund_Z0_constant(w: ModulusSpec) -> float:
    """sup_t of (int_0^t omega/x dx) / omega(t), or math.inf if divergent.

    Two divergence triggers: the sup keeps growing as the t grid extends
    (the sentinel), or the deepest inner decade still contributes more than
    2% of the cumulative integral at the reporting bottom — the truncated
    integral has not converged, so the ratio would keep growing on any
    deeper grid (catches iterated-log rates the sentinel cannot see through
    truncation).
    """
    edges_t, integrals = _panel_values(w, "z0")
    # cumulative from the bottom: I(edges_t[i]) = sum of panels below it
    cum = np.concatenate([[0.0], np.cumsum(integrals[::-1])])[::-1]
    n_t = _T_DECADES * _T_PER_DECADE + 1
    t = edges_t[:n_t]
    ratio = cum[:n_t] / w.evaluator(t)
    sups = np.array([np.max(ratio[:d * _T_PER_DECADE + 1])
                     for d in range(4, _T_DECADES + 1)])
    if _sentinel(sups):
        return math.inf
    last_decade = float(np.sum(integrals[-_T_PER_DECADE:]))
    if last_decade > _TAIL_FRACTION * cum[n_t - 1]:
        return math.inf
    return float(sups[-1])


def zygmund_Z1_constant(w: ModulusSpec) -> float:
    """sup_t of t*(int_t^d0 omega/x^2 dx) / omega(t), or math.inf if divergent."""
    edges_t, integrals = _panel_values(w, "z1")
    cum = np.concatenate([[0.0], np.cumsum(integrals)])  # from delta0 down to t
    t = edges_t
    ratio = t * cum / w.evaluator(t)
    sups = np.array([np.max(ratio[:d * _T_PER_DECADE + 1])
                     for d in range(4, _T_DECADES + 1)])
    if _sentinel(sups):
        return math.inf
    return float(sups[-1])


# ----------------------------- growth indices -----------------------------

_EPS_TOP_EXP = 3.0       # epsilon grid from delta0*1e-3 ...
_EPS_BOT_EXP = 40.0      # ... down to delta0*1e-40 (index bias ~ 1/ln(1/eps))
_EPS_PER_DECADE = 10
_TAIL_DECADES = 2.0

_M_T_GRID = np.array([0.5, 0.25, 0.1, 0.05])
_M_UPPER_T_GRID = np.array([2.0, 5.0, 10.0, 20.0])


def _limsup_ratio(w: ModulusSpec, t: float, eps: np.ndarray) -> float:
    return float(np.max(w.evaluator(eps * t) / w.evaluator(eps)))


def _index_from_tail(w: ModulusSpec, eps_tail: np.ndarray):
    m = math.log(_limsup_ratio(w, _M_T_GRID[-1], eps_tail)) / math.log(_M_T_GRID[-1])
    big_m = math.log(_limsup_ratio(w, _M_UPPER_T_GRID[-1], eps_tail)) \
        / math.log(_M_UPPER_T_GRID[-1])
    return m, big_m


def estimate_indices(w: ModulusSpec) -> IndexEstimate:
    """Matuszewska-Orlicz index estimates.

    The inner limsup_{eps->0} omega(eps t)/omega(eps) is approximated by the
    max over the deepest two decades of a geometric eps grid; the outer limit
    is read at the extreme t of a short grid (t = 0.05 for the lower index,
    t = 20 for the upper).  converged is set when shifting the eps tail one
    decade shallower moves both estimates by less than 0.01.
    """
    bot = _EPS_BOT_EXP
    while bot > _EPS_TOP_EXP + 3:
        exps = np.arange(_EPS_TOP_EXP * _EPS_PER_DECADE, bot * _EPS_PER_DECADE + 1)
        eps = w.delta0 * 10.0 ** (-exps / _EPS_PER_DECADE)
        probe = w.evaluator(eps * _M_T_GRID[-1])
        if np.all(np.isfinite(probe)) and np.all(probe > 0):
            break
        bot -= 1.0  # underflow guard: shrink the eps range
    tail = eps[eps <= w.delta0 * 10.0 ** -(bot - _TAIL_DECADES)]
    tail_prev = eps[(eps <= w.delta0 * 10.0 ** -(bot - 1.0 - _TAIL_DECADES))
                    & (eps >= w.delta0 * 10.0 ** -(bot - 1.0))]
    m, big_m = _index_from_tail(w, tail)
    m_prev, big_m_prev = _index_from_tail(w, tail_prev)
    converged = abs(m - m_prev) < 0.01 and abs(big_m - big_m_prev) < 0.01
    return IndexEstimate(m_lower=m, M_upper=big_m, epsilon_grid=eps,
                         t_grid=np.concatenate([_M_T_GRID, _M_UPPER_T_GRID]),
                         converged=converged)


# ----------------------------- cumulative weight -----------------------------

_W_EXTRA_DECADES = 30    # cumulative grid reaches delta0 * 1e-40


def build_W_omega(w: ModulusSpec) -> ModulusSpec:
    """Cumulative weight W(t) = int_0^t omega(s)/s ds as a ModulusSpec.

    Requires omega(s)/s integrable near 0; raises ConstructionError when the
    bottom-decade increments refuse to fade relative to the cumulative value
    at the reporting scale delta0*1e-10 (divergent integral; rates slower
    than iterated-log escape any finite grid and classify as integrable).
    Values are precomputed on a log grid and monotonically interpolated in
    log-log; below the grid W is extended by the local power law.
    """
    per = 24
    total = _T_DECADES + _W_EXTRA_DECADES
    ks = np.arange(0, total * per + 1)
    edges_t = w.delta0 * 10.0 ** (-ks / per)
    u_edges = np.log(1.0 / edges_t)
    tg, wg = roots_legendre(_GAUSS_ORDER)
    a, b = u_edges[:-1], u_edges[1:]
    mid = 0.5 * (a + b)[:, None] + 0.5 * (b - a)[:, None] * tg[None, :]
    vals = w.evaluator(np.exp(-mid))
    integrals = np.sum(vals * wg[None, :], axis=1) * 0.5 * (b - a)
    cum = np.concatenate([[0.0], np.cumsum(integrals[::-1])])[::-1]

    # bottom-decade increments must fade relative to the reporting scale
    bottom = np.array([np.sum(integrals[k * per:(k + 1) * per])
                       for k in range(total - 3, total)])
    if np.any(bottom > 0.015 * cum[_T_DECADES * per]):
        raise ConstructionError("omega(t)/t is not integrable near 0")

    t_grid = edges_t[:-1][::-1]
    w_grid = cum[:-1][::-1]
    interp = PchipInterpolator(np.log(t_grid), np.log(w_grid), extrapolate=False)
    t_min = t_grid[0]
    w_min = w_grid[0]
    slope = (math.log(w_grid[per]) - math.log(w_grid[0])) \
        / (math.log(t_grid[per]) - math.log(t_grid[0]))
    delta0 = w.delta0

    def evaluator(t):
        t_arr = np.asarray(t, dtype=float)
        t_clip = np.minimum(t_arr, delta0)
        out = np.empty_like(t_clip)
        low = t_clip < t_min
        if low.any():
            out[low] = w_min * (t_clip[low] / t_min) ** slope
        if (~low).any():
            out[~low] = np.exp(interp(np.log(t_clip[~low])))
        return out

    return ModulusSpec(evaluator=evaluator, delta0=w.delta0,
                       family_tag="cumulative",
                       params=dict(w.params, source=w.family_tag))


def dyadic_sum_constant(w: ModulusSpec, q: float, h: float, terms: int) -> float:
    """sum_{k=0}^{terms} omega^q(h/2^k) / omega^q(h)."""
    ks = np.arange(terms + 1)
    return float(np.sum(w.evaluator(h * 0.5 ** ks) ** q) / w.evaluator(h) ** q)
