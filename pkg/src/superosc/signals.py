"""Band-limited periodic signals in the orthonormal cosine basis.

A signal with band limit N is f(t) = A_0/sqrt(2*pi) + sum_{m=1..N}
A_m*cos(m*t)/sqrt(pi).  The basis functions are orthonormal on (-pi, pi),
so the energy per period is just the squared coefficient norm.  Signals
are even and 2*pi-periodic by construction.
"""

from dataclasses import dataclass

from mpmath import mp, mpf

from .context import FAST, Context


@dataclass(frozen=True)
class FourierCosineSignal:
    """Coefficients (A_0, ..., A_N) over the orthonormal cosine basis."""

    band_limit: int
    coeffs: tuple

    def __post_init__(self):
        if self.band_limit < 1:
            raise ValueError("band limit must be >= 1")
        if len(self.coeffs) != self.band_limit + 1:
            raise ValueError(
                "expected %d coefficients, got %d"
                % (self.band_limit + 1, len(self.coeffs))
            )
        # mpf(c) is exact for mpf/int/float inputs: no precision is lost here.
        object.__setattr__(self, "coeffs", tuple(mpf(c) for c in self.coeffs))
        if any(not mp.isfinite(c) for c in self.coeffs):
            raise ValueError("coefficients must be finite")


def evaluate(signal: FourierCosineSignal, t, ctx: Context = FAST):
    """Evaluate the signal at time t by direct summation.

    Band limits in this package stay small, so a plain sum over harmonics
    is both simple and accurate; no recurrence is used here.
    """
    with ctx.workprec():
        t = ctx.real(t)
        acc = signal.coeffs[0] / mp.sqrt(2 * mp.pi)
        inv_sqrt_pi = 1 / mp.sqrt(mp.pi)
        for m in range(1, signal.band_limit + 1):
            acc += signal.coeffs[m] * inv_sqrt_pi * mp.cos(m * t)
        return acc


def energy_per_period(signal: FourierCosineSignal, ctx: Context = FAST):
    """Energy of one period, sum of squared coefficients by orthonormality."""
    with ctx.workprec():
        return mp.fsum(c * c for c in signal.coeffs)


def sample(signal: FourierCosineSignal, lo, hi, count: int, ctx: Context = FAST):
    """Uniform samples of (t, f(t)) on [lo, hi], endpoints included."""
    if count < 2:
        raise ValueError("count must be >= 2")
    with ctx.workprec():
        lo = ctx.real(lo)
        hi = ctx.real(hi)
        if not lo < hi:
            raise ValueError("need lo < hi")
        step = (hi - lo) / (count - 1)
        return [(lo + k * step, evaluate(signal, lo + k * step, ctx)) for k in range(count)]


def values_on_grid(signal: FourierCosineSignal, lo, hi, count: int, extra_dps: int = 0):
    """Yield (t, f(t)) on a uniform grid, tuned for large grids.

    Internal helper for crossing counts and quadrature-scale work: uses the
    cosine recurrence cos(mt) = 2cos(t)cos((m-1)t) - cos((m-2)t) per grid
    point, and raises the working precision by the cancellation headroom of
    the coefficient vector (superoscillating signals combine huge
    coefficients into order-one values inside the domain).  A generator so
    that hundred-thousand-point grids never sit in memory at once.
    """
    if count < 2:
        raise ValueError("count must be >= 2")
    scale = max(abs(c) for c in signal.coeffs)
    if scale == 0:
        headroom = 0
    else:
        headroom = max(0, int(mp.ceil(mp.log10(scale))))
    dps = 25 + headroom + extra_dps
    with mp.workdps(dps):
        lo = mpf(lo) * 1
        hi = mpf(hi) * 1
        step = (hi - lo) / (count - 1)
        c0 = 1 / mp.sqrt(2 * mp.pi)
        cp = 1 / mp.sqrt(mp.pi)
        coeffs = [signal.coeffs[0] * c0] + [c * cp for c in signal.coeffs[1:]]
        n = signal.band_limit
    for k in range(count):
        with mp.workdps(dps):
            t = lo + k * step
            c1 = mp.cos(t)
            acc = coeffs[0]
            if n >= 1:
                acc += coeffs[1] * c1
            ckm1, ck = mpf(1), c1
            for m in range(2, n + 1):
                ckm1, ck = ck, 2 * c1 * ck - ckm1
                acc += coeffs[m] * ck
        yield t, acc
