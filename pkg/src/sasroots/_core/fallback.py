"""Pure-Python/numpy implementation of the numerical kernels.

Mirrors the compiled extension ``_speedups`` function-for-function.  The
interval routines follow exactly the same rounding rules (shared through
:mod:`sasroots.rounding`), so both backends produce identical enclosures;
complex path tracking uses vectorized numpy and may differ from the
compiled backend in the last few ulps of intermediate sums.

Flattened system layout used throughout:
  coeffs  float64[NT]      term coefficients, all polynomials concatenated
  expts   int32[NT, NV]    exponent rows matching ``coeffs``
  offsets int64[NP + 1]    polynomial p owns terms offsets[p]:offsets[p+1]
"""

import numpy as np

from .. import rounding as rnd

NAME = "python"

_DIVERGENCE_LIMIT = 1e8
_MAX_STEPS = 4000


# ---------------------------------------------------------------------------
# point evaluation
# ---------------------------------------------------------------------------

def _power_table(x, maxdeg):
    # shape (NV, maxdeg+1); x may be real or complex
    return np.power.outer(x, np.arange(maxdeg + 1))


def _term_values(coeffs, expts, x):
    pw = _power_table(x, int(expts.max()) if expts.size else 0)
    cols = np.arange(expts.shape[1])
    return coeffs * np.prod(pw[cols[None, :], expts], axis=1)


def eval_real_system(coeffs, expts, offsets, x):
    """Evaluate every polynomial of the flattened system at a real point."""
    vals = _term_values(coeffs, expts, np.asarray(x, dtype=float))
    return np.add.reduceat(vals, offsets[:-1])


def eval_complex_system(coeffs, expts, offsets, z):
    """Evaluate every polynomial of the flattened system at a complex point."""
    vals = _term_values(coeffs.astype(complex), expts, np.asarray(z, dtype=complex))
    return np.add.reduceat(vals, offsets[:-1])


# ---------------------------------------------------------------------------
# interval evaluation (natural extension, outward rounded)
# ---------------------------------------------------------------------------

def _ipow(lo, hi, k):
    if k == 1:
        return lo, hi
    if lo >= 0.0:
        return rnd.pow_down(lo, k), rnd.pow_up(hi, k)
    if hi <= 0.0:
        if k % 2 == 0:
            return rnd.pow_down(-hi, k), rnd.pow_up(-lo, k)
        return -rnd.pow_up(-lo, k), -rnd.pow_down(-hi, k)
    if k % 2 == 0:
        return 0.0, rnd.pow_up(max(-lo, hi), k)
    return -rnd.pow_up(-lo, k), rnd.pow_up(hi, k)


def _imul(alo, ahi, blo, bhi):
    lo = min(rnd.mul_down(alo, blo), rnd.mul_down(alo, bhi),
             rnd.mul_down(ahi, blo), rnd.mul_down(ahi, bhi))
    hi = max(rnd.mul_up(alo, blo), rnd.mul_up(alo, bhi),
             rnd.mul_up(ahi, blo), rnd.mul_up(ahi, bhi))
    return lo, hi


def eval_interval_system(coeffs, expts, offsets, lo, hi):
    """Natural interval extension of every polynomial over the box [lo, hi].

    Even powers of straddling components are evaluated by a dedicated
    power rule (e.g. [-1,2]^2 -> [0,4]), not repeated multiplication.
    """
    npolys = len(offsets) - 1
    nv = expts.shape[1]
    out_lo = np.empty(npolys)
    out_hi = np.empty(npolys)
    for p in range(npolys):
        acc_lo = 0.0
        acc_hi = 0.0
        for ti in range(offsets[p], offsets[p + 1]):
            c = coeffs[ti]
            tlo, thi = c, c
            for v in range(nv):
                e = expts[ti, v]
                if e:
                    plo, phi = _ipow(lo[v], hi[v], int(e))
                    tlo, thi = _imul(tlo, thi, plo, phi)
            acc_lo = rnd.add_down(acc_lo, tlo)
            acc_hi = rnd.add_up(acc_hi, thi)
        out_lo[p] = acc_lo
        out_hi[p] = acc_hi
    return out_lo, out_hi


# ---------------------------------------------------------------------------
# homotopy path tracking
# ---------------------------------------------------------------------------

class _HomotopyData:
    """Pre-extracted arrays for H(x,t) = gamma*(1-t)*G(x) + t*F(x) with
    start system G_i = x_i^{d_i} - 1."""

    def __init__(self, fc, fe, fo, jc, je, jo, degrees, gamma):
        self.fc, self.fe, self.fo = fc, fe, fo
        self.jc, self.je, self.jo = jc, je, jo
        self.deg = np.asarray(degrees, dtype=np.int64)
        self.gamma = complex(gamma)
        self.n = len(self.deg)

    def target(self, z):
        return eval_complex_system(self.fc, self.fe, self.fo, z)

    def homotopy(self, z, t):
        """Returns (H, J_H, dH/dt) at (z, t)."""
        n = self.n
        f = self.target(z)
        jac = eval_complex_system(self.jc, self.je, self.jo, z).reshape(n, n)
        g = z ** self.deg - 1.0
        gprime = self.deg * z ** (self.deg - 1)
        s = self.gamma * (1.0 - t)
        h = s * g + t * f
        jh = t * jac
        jh[np.diag_indices(n)] += s * gprime
        dhdt = f - self.gamma * g
        return h, jh, dhdt


def _solve(a, b):
    try:
        x = np.linalg.solve(a, b)
    except np.linalg.LinAlgError:
        return None
    if not np.all(np.isfinite(x.view(float))):
        return None
    return x


def _track_one(hd, start, initial_step, min_step, corrector_tol,
               max_corrector_iters, endgame_start, residual_tol):
    z = np.array(start, dtype=complex)
    t = 0.0
    h = initial_step
    consec = 0
    failed = False
    steps = 0

    while t < 1.0 and steps < _MAX_STEPS:
        steps += 1
        in_endgame = t >= endgame_start
        ctol = corrector_tol * (0.1 if in_endgame else 1.0)
        hs = h
        if in_endgame:
            hs = min(hs, max(min_step, 0.5 * (1.0 - t)))
        if (1.0 - t) - hs < min_step:
            hs = 1.0 - t
        t_next = t + hs
        if t_next > 1.0 - 1e-14:
            t_next = 1.0

        # Euler predictor on the Davidenko ODE
        _, jh, dhdt = hd.homotopy(z, t)
        dz = _solve(jh, -dhdt)
        z_pred = z + dz * (t_next - t) if dz is not None else z.copy()

        # Newton corrector at t_next
        znew = z_pred
        ok = False
        for _ in range(max_corrector_iters):
            hval, jh, _ = hd.homotopy(znew, t_next)
            d = _solve(jh, -hval)
            if d is None:
                break
            znew = znew + d
            if np.abs(d).max() <= ctol:
                ok = True
                break

        if ok and np.all(np.isfinite(znew.view(float))):
            z = znew
            t = t_next
            if np.abs(z).max() > _DIVERGENCE_LIMIT:
                failed = True
                break
            consec += 1
            if consec >= 2 and not in_endgame:
                h = min(h * 1.5, initial_step)
                consec = 0
        else:
            consec = 0
            h = 0.5 * hs
            if h < min_step:
                failed = True
                break

    if t < 1.0:
        failed = True
    residual = float(np.abs(hd.target(z)).max()) if np.all(np.isfinite(z.view(float))) else np.inf
    converged = (not failed) and residual <= residual_tol
    return z, residual, converged, steps


def track_paths(fc, fe, fo, jc, je, jo, degrees, gamma, starts,
                initial_step, min_step, corrector_tol, max_corrector_iters,
                endgame_start, residual_tol):
    """Track every start point of the total-degree homotopy to t = 1.

    Returns (endpoints, residuals, converged flags, step counts), one row
    per path, in the order of ``starts``.
    """
    hd = _HomotopyData(fc, fe, fo, jc, je, jo, degrees, gamma)
    npaths = len(starts)
    ends = np.empty((npaths, hd.n), dtype=complex)
    residuals = np.empty(npaths)
    converged = np.zeros(npaths, dtype=np.uint8)
    nsteps = np.zeros(npaths, dtype=np.int64)
    for i in range(npaths):
        z, resid, ok, steps = _track_one(
            hd, starts[i], initial_step, min_step, corrector_tol,
            max_corrector_iters, endgame_start, residual_tol)
        ends[i] = z
        residuals[i] = resid
        converged[i] = 1 if ok else 0
        nsteps[i] = steps
    return ends, residuals, converged, nsteps
