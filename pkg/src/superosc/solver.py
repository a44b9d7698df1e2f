"""Constrained yield maximization as a generalized eigenvalue problem.

Rotating the overlap matrix into the constraint-adapted frame splits it
into a free block, a fixed block, and their coupling.  Stationary values of
the yield are then the roots of a scalar secular function

    s(Y) = q - Y*||mu~||^2 - sum_k v_k^2 / (d_k - Y)

where d_k are the free-block eigenvalues, v_k the coupling weights in the
free eigenbasis, and q the fixed-block quadratic form.  s is strictly
decreasing between consecutive poles, so each of the N+2-M roots is
bracketed and bisected to full working precision.  Expanding the same
equation into polynomial coefficients is numerically treacherous, which is
why the expanded form is kept only as an independent cross-check.
"""

import warnings
from dataclasses import dataclass

from mpmath import mp, mpf

from .constraints import RotatedFrame
from .context import FAST, Context
from .domains import OverlapMatrix
from .errors import PrecisionWarning, SolverFailure
from .signals import FourierCosineSignal


@dataclass(frozen=True)
class BlockDecomposition:
    """Overlap matrix in frame coordinates, split around the constraint block."""

    delta_free: object   # (N+1-M) x (N+1-M)
    gamma: object        # (N+1-M) x M
    delta_fixed: object  # M x M

    @property
    def free_dim(self):
        return self.delta_free.rows

    @property
    def m(self):
        return self.delta_fixed.rows


@dataclass(frozen=True)
class GeneralizedSpectrum:
    """All stationary yields with their reconstructed signals, ascending."""

    eigenvalues: tuple
    signals: tuple
    free_parts: tuple
    diagnostics: dict

    def __len__(self):
        return len(self.eigenvalues)


def rotate_and_partition(delta: OverlapMatrix, frame: RotatedFrame,
                         ctx: Context = FAST) -> BlockDecomposition:
    """Rotate the overlap matrix into frame coordinates and split in blocks."""
    if delta.n != frame.n:
        raise ValueError(
            "overlap matrix band limit %d does not match frame band limit %d"
            % (delta.n, frame.n)
        )
    with ctx.workprec():
        rotated = frame.rotation * delta.entries * frame.rotation.T
        f = frame.free_dim
        size = delta.n + 1
        return BlockDecomposition(
            delta_free=rotated[0:f, 0:f],
            gamma=rotated[0:f, f:size],
            delta_fixed=rotated[f:size, f:size],
        )


def _quadratic_form(mat, vec):
    return (vec.T * (mat * vec))[0]


def _secular_scalars(blocks: BlockDecomposition, frame: RotatedFrame):
    """Eigen data of the free block plus the scalars entering s(Y)."""
    d_vec, u = mp.eigsy(blocks.delta_free)
    order = sorted(range(blocks.free_dim), key=lambda k: d_vec[k])
    poles = [d_vec[k] for k in order]
    coupling = u.T * (blocks.gamma * frame.mu_tilde)
    weights = [coupling[k] for k in order]
    basis = mp.zeros(blocks.free_dim, blocks.free_dim)
    for new, old in enumerate(order):
        for row in range(blocks.free_dim):
            basis[row, new] = u[row, old]
    q_fixed = _quadratic_form(blocks.delta_fixed, frame.mu_tilde)
    norm_sq = (frame.mu_tilde.T * frame.mu_tilde)[0]
    return poles, weights, basis, q_fixed, norm_sq


def _secular_function(poles, weights, q_fixed, norm_sq):
    def s(y):
        acc = q_fixed - norm_sq * y
        for d, v in zip(poles, weights):
            acc -= v * v / (d - y)
        return acc
    return s


def _probe_sign(s, anchor, other, want_positive, floor):
    """Point strictly between anchor and other where s has the wanted sign.

    Walks geometrically from `other` toward `anchor`; s diverges at the
    poles so a short walk suffices unless the bracket is degenerate.
    """
    gap = other - anchor
    step = mpf("0.25")
    while abs(step * gap) > floor:
        candidate = anchor + step * gap
        val = s(candidate)
        if (val > 0) == want_positive and val != 0:
            return candidate
        step = step / 4
    return None


def _bisect(s, lo, hi, rtol, max_iter):
    """Bisection on a bracket with s(lo) > 0 > s(hi).

    Uses geometric midpoints while the bracket spans several octaves:
    eigenvalues of small domains spread over many orders of magnitude and
    arithmetic midpoints alone would waste hundreds of iterations.
    """
    for _ in range(max_iter):
        if lo > 0 and hi / lo > 4:
            mid = mp.sqrt(lo * hi)
        else:
            mid = (lo + hi) / 2
        if not (lo < mid < hi):
            break
        if s(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < rtol * hi:
            break
    return (lo + hi) / 2


def _solve_secular(poles, weights, q_fixed, norm_sq, ctx):
    """All roots of the secular function, ascending, with deflation applied.

    A pole whose coupling weight is negligible against its natural scale
    sqrt(d_k * fixed-block scale) splits off as a root of the cleared
    polynomial; the remaining poles bracket one root each, plus one root
    below the smallest pole and one above the largest.
    """
    scale = max(q_fixed, norm_sq * (poles[-1] if poles else mpf(1)))
    theta = ctx.deflation_theta
    active = []
    deflated = []
    for k, (d, v) in enumerate(zip(poles, weights)):
        v2 = v * v
        if v2 == 0:
            deflated.append(d)
            continue
        keep = True
        if v2 < theta * theta * d * scale:
            # Interlock: deflating moves the adjacent root by about
            # v^2/|s_others(d)| to first order; only deflate when that
            # shift is below the bracketing resolution, otherwise a weak
            # but resolvable coupling would corrupt the root.
            others = q_fixed - norm_sq * d - mp.fsum(
                w * w / (dl - d)
                for l, (dl, w) in enumerate(zip(poles, weights))
                if l != k and dl != d
            )
            if others != 0 and v2 / abs(others) < ctx.bracket_rtol * d:
                keep = False
        if keep:
            active.append((d, v))
        else:
            deflated.append(d)
    for (d1, _), (d2, _) in zip(active, active[1:]):
        if d2 - d1 < ctx.bracket_rtol * d2:
            raise SolverFailure(
                "free-block eigenvalues coincide at working precision; "
                "degenerate roots are not resolvable",
                diagnostics={"poles": poles},
            )
    s = _secular_function([d for d, _ in active], [v for _, v in active],
                          q_fixed, norm_sq)
    bounds = [mpf(0)] + [d for d, _ in active] + [mpf(1)]
    floor = mpf(10) ** (-(ctx.work_dps + 10))
    max_iter = 4 * ctx.work_dps + 60
    roots = []
    for i in range(len(bounds) - 1):
        lo_anchor, hi_anchor = bounds[i], bounds[i + 1]
        if i == 0 and s(lo_anchor) > 0:
            lo = lo_anchor
        else:
            lo = _probe_sign(s, lo_anchor, hi_anchor, True, floor)
        if i == len(bounds) - 2 and s(hi_anchor) < 0:
            hi = hi_anchor
        else:
            hi = _probe_sign(s, hi_anchor, lo if lo is not None else lo_anchor,
                             False, floor)
        if lo is None or hi is None:
            raise SolverFailure(
                "could not bracket a root between poles",
                diagnostics={"gap_index": i, "bounds": (lo_anchor, hi_anchor)},
            )
        roots.append(_bisect(s, lo, hi, ctx.bracket_rtol, max_iter))
    all_roots = sorted(roots + deflated)
    return all_roots, set(deflated), s


def _reconstruct(root, poles, weights, basis, deflated, frame, blocks):
    """Free part and full signal for one root.

    The free part comes from the eigenbasis form of the stationarity
    condition, component -v_k/(d_k - Y); deflated components carry no
    coupling and are set to zero (minimum-norm choice).
    """
    f = len(poles)
    w = mp.zeros(f, 1)
    for k, (d, v) in enumerate(zip(poles, weights)):
        if d in deflated or d == root:
            w[k] = mpf(0)
        else:
            w[k] = v / (d - root)
    free_part = -(basis * w)
    coeffs = frame.assemble(free_part)
    signal = FourierCosineSignal(band_limit=frame.n, coeffs=tuple(coeffs))
    stationarity = blocks.delta_free * free_part - root * free_part \
        + blocks.gamma * frame.mu_tilde
    residual = mp.sqrt((stationarity.T * stationarity)[0])
    return free_part, signal, residual


def _degenerate_single(blocks, frame, method, ctx):
    """M = N+1: the interpolant is unique, its yield is the one eigenvalue."""
    norm_sq = (frame.mu_tilde.T * frame.mu_tilde)[0]
    if norm_sq == 0:
        raise ValueError("constraint targets are all zero")
    y = _quadratic_form(blocks.delta_fixed, frame.mu_tilde) / norm_sq
    coeffs = frame.particular_solution()
    signal = FourierCosineSignal(band_limit=frame.n, coeffs=tuple(coeffs))
    return GeneralizedSpectrum(
        eigenvalues=(y,),
        signals=(signal,),
        free_parts=(mp.zeros(0, 1),),
        diagnostics={
            "method": method,
            "completion_seed": frame.completion_seed,
            "secular_residuals": (mpf(0),),
            "stationarity_residuals": (mpf(0),),
            "deflated": (False,),
        },
    )


def _finalize(roots, deflated, secular, blocks, frame, method, ctx):
    expected = frame.free_dim + 1
    if len(roots) != expected:
        raise SolverFailure(
            "found %d generalized eigenvalues, expected %d" % (len(roots), expected),
            diagnostics={"roots": roots},
        )
    for y in roots:
        if not (0 < y < 1):
            raise SolverFailure(
                "eigenvalue %s outside (0, 1)" % mp.nstr(y, 8),
                diagnostics={"roots": roots},
            )
    for y1, y2 in zip(roots, roots[1:]):
        if y2 - y1 < ctx.bracket_rtol * y2:
            raise SolverFailure(
                "degenerate generalized eigenvalues at working precision",
                diagnostics={"roots": roots},
            )
    poles, weights, basis, _, _ = secular["eigdata"]
    free_parts = []
    signals = []
    stationarity = []
    sec_res = []
    defl_flags = []
    for y in roots:
        fp, sig, res = _reconstruct(y, poles, weights, basis, deflated, frame, blocks)
        free_parts.append(fp)
        signals.append(sig)
        stationarity.append(res)
        is_deflated = y in deflated
        defl_flags.append(is_deflated)
        sec_res.append(mpf(0) if is_deflated else abs(secular["s"](y)))
    if roots[0] < ctx.trust_floor:
        warnings.warn(
            "smallest eigenvalue %s is within 1e6 of the precision floor "
            "10^-%d; raise the context digits to trust it"
            % (mp.nstr(roots[0], 5), ctx.digits),
            PrecisionWarning,
            stacklevel=3,
        )
    return GeneralizedSpectrum(
        eigenvalues=tuple(roots),
        signals=tuple(signals),
        free_parts=tuple(free_parts),
        diagnostics={
            "method": method,
            "completion_seed": frame.completion_seed,
            "secular_residuals": tuple(sec_res),
            "stationarity_residuals": tuple(stationarity),
            "deflated": tuple(defl_flags),
        },
    )


def secular_spectrum(blocks: BlockDecomposition, frame: RotatedFrame,
                     ctx: Context = FAST) -> GeneralizedSpectrum:
    """All N+2-M generalized eigenvalues via bracketed secular root finding."""
    if blocks.free_dim != frame.free_dim or blocks.m != frame.m:
        raise ValueError("block decomposition does not match the frame")
    with ctx.workprec():
        norm_sq = (frame.mu_tilde.T * frame.mu_tilde)[0]
        if norm_sq == 0:
            raise ValueError("constraint targets are all zero")
        if frame.free_dim == 0:
            return _degenerate_single(blocks, frame, "secular", ctx)
        poles, weights, basis, q_fixed, norm_sq = _secular_scalars(blocks, frame)
        roots, deflated, s = _solve_secular(poles, weights, q_fixed, norm_sq, ctx)
        secular = {"s": s, "eigdata": (poles, weights, basis, q_fixed, norm_sq)}
        return _finalize(roots, deflated, secular, blocks, frame, "secular", ctx)


def polynomial_spectrum(blocks: BlockDecomposition, frame: RotatedFrame,
                        ctx: Context = FAST) -> GeneralizedSpectrum:
    """Cross-check path: expand the eigenvalue equation and root-find it.

    Coefficients come from the characteristic polynomial of the free block
    and the matching adjugate expansion (Faddeev-LeVerrier), both computed
    at doubled working precision because the expanded polynomial is badly
    conditioned in coefficient form.
    """
    if blocks.free_dim != frame.free_dim or blocks.m != frame.m:
        raise ValueError("block decomposition does not match the frame")
    with ctx.workprec():
        norm_sq = (frame.mu_tilde.T * frame.mu_tilde)[0]
        if norm_sq == 0:
            raise ValueError("constraint targets are all zero")
        if frame.free_dim == 0:
            return _degenerate_single(blocks, frame, "polynomial", ctx)
    with mp.workdps(2 * ctx.work_dps):
        f = blocks.free_dim
        char, adj_terms = _faddeev_leverrier(blocks.delta_free, f)
        w = blocks.gamma * frame.mu_tilde
        q_fixed = _quadratic_form(blocks.delta_fixed, frame.mu_tilde)
        # p(Y) = (q - ||mu~||^2 Y) det(YI - free) + w^T adj(YI - free) w
        coeffs = [mpf(0)] * (f + 2)  # ascending in Y
        for i in range(f + 1):
            coeffs[i] += q_fixed * char[i]
            coeffs[i + 1] -= norm_sq * char[i]
        for k, mat in enumerate(adj_terms):
            coeffs[f - 1 - k] += _quadratic_form(mat, w)
        try:
            raw = mp.polyroots(list(reversed(coeffs)), maxsteps=2000,
                               extraprec=mp.prec)
        except mp.NoConvergence as exc:
            raise SolverFailure("polynomial root finding did not converge",
                                diagnostics={"coefficients": coeffs}) from exc
        roots = []
        for r in raw:
            if abs(mp.im(r)) > ctx.bracket_rtol * (abs(r) + ctx.eps):
                raise SolverFailure(
                    "expanded polynomial produced a complex root %s" % mp.nstr(r, 8),
                    diagnostics={"roots": raw},
                )
            roots.append(mp.re(r))
        roots.sort()
    with ctx.workprec():
        roots = [+y for y in roots]
        poles, weights, basis, q2, n2 = _secular_scalars(blocks, frame)
        s = _secular_function(poles, weights, q2, n2)
        secular = {"s": s, "eigdata": (poles, weights, basis, q2, n2)}
        return _finalize(roots, set(), secular, blocks, frame, "polynomial", ctx)


def _faddeev_leverrier(matrix, n):
    """Characteristic polynomial det(YI - A) and adjugate expansion of A.

    Returns (char, terms): char[i] is the Y^i coefficient (char[n] = 1) and
    adj(YI - A) = sum_k terms[k] * Y^(n-1-k).
    """
    char = [mpf(0)] * (n + 1)
    char[n] = mpf(1)
    current = mp.eye(n)
    terms = [current]
    product = matrix * current
    char[n - 1] = -sum(product[i, i] for i in range(n))
    for k in range(1, n):
        current = product + char[n - k] * mp.eye(n)
        terms.append(current)
        product = matrix * current
        trace = sum(product[i, i] for i in range(n))
        char[n - k - 1] = -trace / (k + 1)
    return char, terms


def fk_min_energy_signal(frame: RotatedFrame, ctx: Context = FAST) -> FourierCosineSignal:
    """Minimum-energy interpolant: all free coordinates zeroed.

    Its energy equals ||mu_tilde||^2, the squared norm of the minimal-norm
    solution of the constraint system.
    """
    with ctx.workprec():
        coeffs = frame.particular_solution()
        return FourierCosineSignal(band_limit=frame.n, coeffs=tuple(coeffs))


def slepian_modes(delta: OverlapMatrix, ctx: Context = FAST):
    """Unconstrained energy-concentration optima of the overlap matrix.

    Plain symmetric eigendecomposition, returned as (eigenvalue, signal)
    pairs in descending eigenvalue order with unit-energy signals.  These
    are the discrete analogues of the prolate spheroidal wavefunctions and
    the natural baseline: no constrained signal can beat the top mode.
    """
    with ctx.workprec():
        eigvals, eigvecs = mp.eigsy(delta.entries)
        pairs = []
        size = delta.n + 1
        for k in range(size):
            coeffs = [eigvecs[i, k] for i in range(size)]
            # deterministic sign: largest-magnitude component positive
            pivot = max(range(size), key=lambda i: abs(coeffs[i]))
            if coeffs[pivot] < 0:
                coeffs = [-c for c in coeffs]
            pairs.append((eigvals[k],
                          FourierCosineSignal(band_limit=delta.n, coeffs=tuple(coeffs))))
        pairs.sort(key=lambda p: p[0], reverse=True)
        return pairs
