"""Laws on the reals represented through their left quantile functions.

Three representations share one interface: ``analytic`` (a vectorized
quantile evaluator), ``atomic`` (finitely many weighted atoms) and
``empirical`` (equally weighted samples). Every functional in the package
is a quantile integral, so the quantile function is the canonical law
interface and all operations are pure functions of it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.special import ndtr, ndtri

from .errors import DomainError, NonIntegrableError, SampleFileError
from .quadrature import integrate

QUAD_TOL = 1e-10

__all__ = [
    "Distribution",
    "analytic",
    "atomic",
    "point_mass",
    "uniform",
    "normal",
    "lognormal",
    "pareto",
    "empirical_from_samples",
    "from_spec",
    "read_sample_file",
    "left_quantile",
    "quantile_values",
    "cdf_values",
    "negate",
    "expectation",
    "phi_moment",
    "quantile_integral",
]


@dataclass(frozen=True, eq=False)
class Distribution:
    """A law on the reals, represented through its left quantile function.

    ``values``/``probs`` hold the atoms for the atomic kind; the empirical
    kind stores sorted samples in ``values`` with implicit weight 1/n.
    ``family``/``params`` are set for the built-in analytic families so
    that closed-form targets can recognize them.
    """

    kind: str  # "analytic" | "atomic" | "empirical"
    descriptor: str
    quantile_fn: Optional[Callable] = None
    cdf_fn: Optional[Callable] = None
    values: Optional[np.ndarray] = None
    probs: Optional[np.ndarray] = None
    support_bounds: Optional[tuple] = None
    family: Optional[str] = None
    params: tuple = field(default=())

    def __repr__(self):
        return f"Distribution({self.descriptor})"


# ---------------------------------------------------------------------------
# constructors


def analytic(quantile_fn, descriptor="analytic", cdf_fn=None, support_bounds=None,
             family=None, params=(), _validate=True) -> Distribution:
    """Analytic-kind law from a vectorized quantile evaluator on (0, 1)."""
    dist = Distribution(
        kind="analytic",
        descriptor=descriptor,
        quantile_fn=quantile_fn,
        cdf_fn=cdf_fn,
        support_bounds=support_bounds,
        family=family,
        params=tuple(params),
    )
    if _validate:
        grid = np.linspace(1.0 / 64, 1.0 - 1.0 / 64, 63)
        q = np.asarray(quantile_fn(grid), dtype=np.float64)
        if q.shape != grid.shape:
            raise DomainError("quantile evaluator must map ndarrays to ndarrays of the same shape")
        if not np.all(np.isfinite(q)):
            raise DomainError("quantile evaluator returned non-finite values on the probe grid")
        if np.any(np.diff(q) < -1e-9):
            raise DomainError("quantile evaluator is not nondecreasing on the probe grid")
    return dist


def atomic(values, probs, descriptor=None) -> Distribution:
    """Atomic law from (value, probability) pairs; sorted, ties kept."""
    v = np.asarray(values, dtype=np.float64)
    p = np.asarray(probs, dtype=np.float64)
    if v.ndim != 1 or v.shape != p.shape or v.size == 0:
        raise DomainError("atoms require matching, nonempty value and probability vectors")
    if not np.all(np.isfinite(v)):
        raise DomainError("atom values must be finite")
    if np.any(p <= 0.0) or np.any(p > 1.0):
        raise DomainError("atom probabilities must lie in (0, 1]")
    if abs(float(p.sum()) - 1.0) > 1e-12:
        raise DomainError(f"atom probabilities sum to {p.sum()!r}, expected 1 within 1e-12")
    order = np.argsort(v, kind="stable")
    v, p = v[order], p[order]
    if descriptor is None:
        descriptor = f"atomic(n={v.size})"
    return Distribution(kind="atomic", descriptor=descriptor, values=v, probs=p,
                        support_bounds=(float(v[0]), float(v[-1])))


def point_mass(c: float) -> Distribution:
    return atomic([c], [1.0], descriptor=f"atom:{c:g}")


def empirical_from_samples(samples, descriptor=None) -> Distribution:
    """Empirical law: each sample an atom of weight 1/n; input order irrelevant."""
    x = np.asarray(samples, dtype=np.float64)
    if x.ndim != 1 or x.size == 0:
        raise DomainError("empirical distribution requires a nonempty 1-D sample vector")
    if not np.all(np.isfinite(x)):
        raise DomainError("empirical samples must all be finite")
    x = np.sort(x)
    if descriptor is None:
        descriptor = f"empirical(n={x.size})"
    return Distribution(kind="empirical", descriptor=descriptor, values=x,
                        support_bounds=(float(x[0]), float(x[-1])))


def uniform(a: float, b: float) -> Distribution:
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"uniform requires finite a < b, got a={a!r}, b={b!r}")
    return analytic(
        lambda t: a + (b - a) * t,
        descriptor=f"uniform:{a:g},{b:g}",
        cdf_fn=lambda x: np.clip((np.asarray(x, dtype=np.float64) - a) / (b - a), 0.0, 1.0),
        support_bounds=(a, b),
        family="uniform",
        params=(a, b),
        _validate=False,
    )


def normal(mu: float, sigma: float) -> Distribution:
    if not (math.isfinite(mu) and math.isfinite(sigma) and sigma > 0):
        raise DomainError(f"normal requires finite mu and sigma > 0, got mu={mu!r}, sigma={sigma!r}")
    return analytic(
        lambda t: mu + sigma * ndtri(t),
        descriptor=f"normal:{mu:g},{sigma:g}",
        cdf_fn=lambda x: ndtr((np.asarray(x, dtype=np.float64) - mu) / sigma),
        support_bounds=(-math.inf, math.inf),
        family="normal",
        params=(mu, sigma),
        _validate=False,
    )


def lognormal(mu: float, sigma: float) -> Distribution:
    if not (math.isfinite(mu) and math.isfinite(sigma) and sigma > 0):
        raise DomainError(f"lognormal requires finite mu and sigma > 0, got mu={mu!r}, sigma={sigma!r}")

    def cdf(x):
        x = np.asarray(x, dtype=np.float64)
        out = np.zeros_like(x)
        pos = x > 0
        out[pos] = ndtr((np.log(x[pos]) - mu) / sigma)
        return out

    return analytic(
        lambda t: np.exp(mu + sigma * ndtri(t)),
        descriptor=f"lognormal:{mu:g},{sigma:g}",
        cdf_fn=cdf,
        support_bounds=(0.0, math.inf),
        family="lognormal",
        params=(mu, sigma),
        _validate=False,
    )


def pareto(alpha: float, xm: float) -> Distribution:
    if not (math.isfinite(alpha) and math.isfinite(xm) and alpha > 0 and xm > 0):
        raise DomainError(f"pareto requires alpha > 0 and xm > 0, got alpha={alpha!r}, xm={xm!r}")

    def cdf(x):
        x = np.asarray(x, dtype=np.float64)
        out = np.zeros_like(x)
        above = x >= xm
        out[above] = 1.0 - (xm / x[above]) ** alpha
        return out

    return analytic(
        lambda t: xm * (1.0 - t) ** (-1.0 / alpha),
        descriptor=f"pareto:{alpha:g},{xm:g}",
        cdf_fn=cdf,
        support_bounds=(xm, math.inf),
        family="pareto",
        params=(alpha, xm),
        _validate=False,
    )


# ---------------------------------------------------------------------------
# mini-language and sample files


def read_sample_file(path) -> np.ndarray:
    """Parse a plain-text sample file: one finite real per line.

    Lines starting with '#' and blank lines are skipped. Parse errors name
    the offending line; I/O errors propagate as OSError.
    """
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                value = float(line)
            except ValueError:
                raise SampleFileError(f"{path}:{lineno}: not a number: {line!r}") from None
            if not math.isfinite(value):
                raise SampleFileError(f"{path}:{lineno}: non-finite value: {line!r}")
            out.append(value)
    if not out:
        raise SampleFileError(f"{path}: no samples found")
    return np.asarray(out, dtype=np.float64)


def _parse_floats(body: str, spec: str, expected: int):
    parts = body.split(",")
    if len(parts) != expected:
        raise DomainError(f"distribution spec {spec!r}: expected {expected} comma-separated parameters")
    try:
        return [float(s) for s in parts]
    except ValueError:
        raise DomainError(f"distribution spec {spec!r}: parameters must be numbers") from None


def from_spec(spec: str) -> Distribution:
    """Parse `uniform:a,b`, `normal:mu,sigma`, `lognormal:mu,sigma`,
    `pareto:alpha,xm` or `empirical:<path>`."""
    name, sep, body = spec.partition(":")
    name = name.strip().lower()
    if name == "uniform":
        a, b = _parse_floats(body, spec, 2)
        return uniform(a, b)
    if name == "normal":
        mu, sigma = _parse_floats(body, spec, 2)
        return normal(mu, sigma)
    if name == "lognormal":
        mu, sigma = _parse_floats(body, spec, 2)
        return lognormal(mu, sigma)
    if name == "pareto":
        alpha, xm = _parse_floats(body, spec, 2)
        return pareto(alpha, xm)
    if name == "empirical":
        if not sep or not body:
            raise DomainError(f"distribution spec {spec!r}: empirical requires a file path")
        return empirical_from_samples(read_sample_file(body), descriptor=spec)
    raise DomainError(
        f"unknown distribution spec {spec!r}; expected uniform:a,b | normal:mu,sigma | "
        f"lognormal:mu,sigma | pareto:alpha,xm | empirical:<path>"
    )


# ---------------------------------------------------------------------------
# quantile and cdf evaluation


def _atom_cumulative(dist: Distribution) -> np.ndarray:
    if dist.kind == "empirical":
        n = dist.values.size
        return np.arange(1, n + 1, dtype=np.float64) / n
    return np.cumsum(dist.probs)


def quantile_values(dist: Distribution, ts) -> np.ndarray:
    """Vectorized left quantile; ``ts`` must lie in the open interval (0, 1)."""
    ts = np.asarray(ts, dtype=np.float64)
    if dist.kind == "analytic":
        return np.asarray(dist.quantile_fn(ts), dtype=np.float64)
    if dist.kind == "empirical":
        n = dist.values.size
        idx = np.ceil(ts * n).astype(np.int64) - 1
        return dist.values[np.clip(idx, 0, n - 1)]
    cum = _atom_cumulative(dist)
    idx = np.searchsorted(cum, ts, side="left")
    return dist.values[np.clip(idx, 0, dist.values.size - 1)]


def left_quantile(dist: Distribution, t: float) -> float:
    """inf{x : F(x) >= t} for t in (0, 1)."""
    if not 0.0 < t < 1.0:
        raise DomainError(f"quantile level must lie in (0, 1), got {t!r}")
    return float(quantile_values(dist, np.asarray([t]))[0])


def cdf_values(dist: Distribution, xs) -> np.ndarray:
    """Vectorized right-continuous CDF."""
    xs = np.asarray(xs, dtype=np.float64)
    if dist.kind in ("atomic", "empirical"):
        cum = np.concatenate(([0.0], _atom_cumulative(dist)))
        idx = np.searchsorted(dist.values, xs, side="right")
        return cum[idx]
    if dist.cdf_fn is not None:
        return np.asarray(dist.cdf_fn(xs), dtype=np.float64)
    # invert the quantile by bisection: F(x) = sup{t : q(t) <= x}
    lo = np.full(xs.shape, 1e-12)
    hi = np.full(xs.shape, 1.0 - 1e-12)
    q = dist.quantile_fn
    below = np.asarray(q(lo)) > xs
    above = np.asarray(q(hi)) <= xs
    for _ in range(50):
        mid = 0.5 * (lo + hi)
        le = np.asarray(q(mid)) <= xs
        lo = np.where(le, mid, lo)
        hi = np.where(le, hi, mid)
    out = 0.5 * (lo + hi)
    out[below] = 0.0
    out[above] = 1.0
    return out


# ---------------------------------------------------------------------------
# operations


def negate(dist: Distribution) -> Distribution:
    """The law of -X.

    Exact for atomic/empirical kinds. For the analytic kind the quantile is
    t -> -F^{-1}(1-t), which differs from the true left quantile only on
    the countable set of jump levels; that set is Lebesgue-null, so no
    integral functional in this package can see the difference.
    """
    if dist.kind == "empirical":
        return replace(dist, values=-dist.values[::-1],
                       support_bounds=_neg_bounds(dist.support_bounds),
                       descriptor=f"negate({dist.descriptor})")
    if dist.kind == "atomic":
        return replace(dist, values=-dist.values[::-1], probs=dist.probs[::-1].copy(),
                       support_bounds=_neg_bounds(dist.support_bounds),
                       descriptor=f"negate({dist.descriptor})")
    q = dist.quantile_fn
    cdf = dist.cdf_fn
    return analytic(
        lambda t: -np.asarray(q(1.0 - np.asarray(t, dtype=np.float64))),
        descriptor=f"negate({dist.descriptor})",
        cdf_fn=(lambda x: 1.0 - np.asarray(cdf(-np.asarray(x, dtype=np.float64)))) if cdf else None,
        support_bounds=_neg_bounds(dist.support_bounds),
        _validate=False,
    )


def _neg_bounds(bounds):
    if bounds is None:
        return None
    lo, hi = bounds
    return (-hi, -lo)


def quantile_integral(dist: Distribution, a: float, b: float) -> float:
    """Exact tail/mass integral of the quantile: int_a^b F^{-1}(t) dt.

    Closed form over the step quantile for atomic/empirical kinds,
    adaptive quadrature for the analytic kind. Raises NonIntegrableError
    on divergence.
    """
    if not 0.0 <= a < b <= 1.0:
        raise DomainError(f"integration interval ({a}, {b}) must satisfy 0 <= a < b <= 1")
    if dist.kind in ("atomic", "empirical"):
        upper = _atom_cumulative(dist)
        lower = np.concatenate(([0.0], upper[:-1]))
        overlap = np.clip(np.minimum(upper, b) - np.maximum(lower, a), 0.0, None)
        return float(dist.values @ overlap)
    value, diverged = integrate(lambda t: np.asarray(dist.quantile_fn(t), dtype=np.float64),
                                a, b, tol=QUAD_TOL)
    if diverged is not None:
        raise NonIntegrableError(
            f"quantile of {dist.descriptor} is not integrable over ({a:g}, {b:g})", sign=diverged)
    return value


def expectation(dist: Distribution) -> float:
    """E[X] as the full quantile integral over (0, 1)."""
    try:
        return quantile_integral(dist, 0.0, 1.0)
    except NonIntegrableError as exc:
        raise NonIntegrableError(f"mean of {dist.descriptor} does not exist: {exc}", sign=exc.sign) from None


def phi_moment(dist: Distribution, phi, scale: float) -> float:
    """E[phi(scale*|X|)] as an extended real; +inf signals divergence.

    ``phi`` is any vectorized nonnegative evaluator (an OrliczFunction or a
    plain callable).
    """
    if not (math.isfinite(scale) and scale > 0):
        raise DomainError(f"scale must be a positive real, got {scale!r}")
    if dist.kind in ("atomic", "empirical"):
        weights = (np.full(dist.values.size, 1.0 / dist.values.size)
                   if dist.kind == "empirical" else dist.probs)
        with np.errstate(over="ignore", invalid="ignore"):
            y = np.asarray(phi(scale * np.abs(dist.values)), dtype=np.float64)
            total = float(y @ weights)
        return total if math.isfinite(total) else math.inf

    def integrand(t):
        return np.asarray(phi(scale * np.abs(np.asarray(dist.quantile_fn(t), dtype=np.float64))),
                          dtype=np.float64)

    value, diverged = integrate(integrand, 0.0, 1.0, tol=QUAD_TOL)
    if diverged is not None:
        return math.inf
    return value
