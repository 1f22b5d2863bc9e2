"""Closed-interval arithmetic with outward rounding.

``Interval`` is an immutable closed interval [lo, hi] of binary64 floats;
``IntervalBox`` an immutable vector of intervals; ``IntervalMatrix`` a
square grid.  All arithmetic encloses the exact real result (see
:mod:`sasroots.rounding`).  The empty set is represented by ``None``
returned from :func:`intersect`, never by an interval with lo > hi.
"""

import math

import numpy as np

from . import rounding as rnd
from .errors import DimensionMismatch, DivisionByZeroInterval, NonFiniteInterval, SingularMatrix


class Interval:
    """A closed real interval with outward-rounded arithmetic.

    Bounds may be +-inf but never NaN, and lo <= hi always holds.
    Instances are immutable and hashable; arithmetic never mutates.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = float(lo)
        hi = lo if hi is None else float(hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval bounds must not be NaN")
        if lo > hi:
            raise ValueError(f"interval bounds out of order: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("Interval is immutable")

    # -- construction helpers --

    @staticmethod
    def point(x):
        return Interval(x, x)

    # -- scalar queries --

    def midpoint(self):
        """(lo+hi)/2 rounded to nearest; requires finite bounds."""
        self._require_finite()
        m = 0.5 * (self.lo + self.hi)
        if math.isinf(m):  # (lo+hi) overflowed; halve first
            m = 0.5 * self.lo + 0.5 * self.hi
        return m

    def width(self):
        """hi - lo rounded up; requires finite bounds."""
        self._require_finite()
        return rnd.sub_up(self.hi, self.lo)

    def radius(self):
        """width/2 rounded up; requires finite bounds."""
        return rnd.mul_up(0.5, self.width())

    def magnitude(self):
        """max |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mignitude(self):
        """min |x| over the interval."""
        if self.lo > 0.0:
            return self.lo
        if self.hi < 0.0:
            return -self.hi
        return 0.0

    def contains(self, x):
        return self.lo <= x <= self.hi

    def contains_zero(self):
        return self.lo <= 0.0 <= self.hi

    def is_finite(self):
        return math.isfinite(self.lo) and math.isfinite(self.hi)

    def _require_finite(self):
        if not self.is_finite():
            raise NonFiniteInterval(f"operation requires finite bounds, got {self!r}")

    # -- set relations --

    def is_subset(self, other):
        return other.lo <= self.lo and self.hi <= other.hi

    def is_interior_subset(self, other):
        """Strict containment in the topological interior of ``other``."""
        return other.lo < self.lo and self.hi < other.hi

    def is_disjoint(self, other):
        return self.hi < other.lo or other.hi < self.lo

    # -- arithmetic --

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __add__(self, other):
        other = _coerce(other)
        return Interval(rnd.add_down(self.lo, other.lo), rnd.add_up(self.hi, other.hi))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return Interval(rnd.sub_down(self.lo, other.hi), rnd.sub_up(self.hi, other.lo))

    def __rsub__(self, other):
        return _coerce(other).__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        lo = min(rnd.mul_down(a, c), rnd.mul_down(a, d),
                 rnd.mul_down(b, c), rnd.mul_down(b, d))
        hi = max(rnd.mul_up(a, c), rnd.mul_up(a, d),
                 rnd.mul_up(b, c), rnd.mul_up(b, d))
        return Interval(lo, hi)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.contains_zero():
            raise DivisionByZeroInterval(f"division by {other!r} which contains 0")
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        lo = min(rnd.div_down(a, c), rnd.div_down(a, d),
                 rnd.div_down(b, c), rnd.div_down(b, d))
        hi = max(rnd.div_up(a, c), rnd.div_up(a, d),
                 rnd.div_up(b, c), rnd.div_up(b, d))
        return Interval(lo, hi)

    def __rtruediv__(self, other):
        return _coerce(other).__truediv__(self)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("interval powers take a non-negative integer exponent")
        if k == 0:
            return Interval(1.0, 1.0)
        if k == 1:
            return self
        a, b = self.lo, self.hi
        if a >= 0.0:
            return Interval(rnd.pow_down(a, k), rnd.pow_up(b, k))
        if b <= 0.0:
            if k % 2 == 0:
                return Interval(rnd.pow_down(-b, k), rnd.pow_up(-a, k))
            return Interval(-rnd.pow_up(-a, k), -rnd.pow_down(-b, k))
        # straddles zero
        if k % 2 == 0:
            return Interval(0.0, rnd.pow_up(max(-a, b), k))
        return Interval(-rnd.pow_up(-a, k), rnd.pow_up(b, k))

    def exp(self):
        return Interval(rnd.exp_down(self.lo), rnd.exp_up(self.hi))

    # -- dunder plumbing --

    def __eq__(self, other):
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


def _coerce(x):
    if isinstance(x, Interval):
        return x
    if isinstance(x, (int, float)):
        return Interval(float(x), float(x))
    return NotImplemented


def intersect(a, b):
    """Exact overlap of two intervals, or None when they are disjoint."""
    if a.hi < b.lo or b.hi < a.lo:
        return None
    return Interval(max(a.lo, b.lo), min(a.hi, b.hi))


def hull(a, b):
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi))


class IntervalBox:
    """An immutable vector of intervals (one per variable)."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(components)
        if not comps:
            raise ValueError("empty box")
        for c in comps:
            if not isinstance(c, Interval):
                raise TypeError(f"box components must be Interval, got {type(c)!r}")
        object.__setattr__(self, "components", comps)

    def __setattr__(self, name, value):
        raise AttributeError("IntervalBox is immutable")

    @staticmethod
    def around(center, radius):
        """Axis-aligned box center +- radius (same radius per coordinate
        when scalar, else per-coordinate radii)."""
        center = np.asarray(center, dtype=float)
        radii = np.broadcast_to(np.asarray(radius, dtype=float), center.shape)
        return IntervalBox(
            Interval(rnd.sub_down(c, r), rnd.add_up(c, r))
            for c, r in zip(center.tolist(), radii.tolist())
        )

    @staticmethod
    def from_bounds(lo, hi):
        return IntervalBox(Interval(a, b) for a, b in zip(lo, hi))

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __eq__(self, other):
        return isinstance(other, IntervalBox) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "Box(" + ", ".join(map(repr, self.components)) + ")"

    # -- componentwise queries --

    def lower(self):
        return np.array([c.lo for c in self.components])

    def upper(self):
        return np.array([c.hi for c in self.components])

    def midpoint(self):
        return np.array([c.midpoint() for c in self.components])

    def widths(self):
        return np.array([c.width() for c in self.components])

    def max_width(self):
        return max(c.width() for c in self.components)

    def radii(self):
        return np.array([c.radius() for c in self.components])

    def contains_point(self, x):
        return all(c.contains(v) for c, v in zip(self.components, x))

    def is_subset(self, other):
        return all(a.is_subset(b) for a, b in zip(self.components, other.components))

    def is_interior_subset(self, other):
        return all(a.is_interior_subset(b) for a, b in zip(self.components, other.components))

    def is_disjoint(self, other):
        return any(a.is_disjoint(b) for a, b in zip(self.components, other.components))

    # -- componentwise set ops --

    def intersect(self, other):
        """Componentwise intersection; None if empty in any coordinate."""
        out = []
        for a, b in zip(self.components, other.components):
            c = intersect(a, b)
            if c is None:
                return None
            out.append(c)
        return IntervalBox(out)

    def replace(self, i, iv):
        comps = list(self.components)
        comps[i] = iv
        return IntervalBox(comps)

    def widest_coordinate(self):
        """Index of the widest component; ties broken by lowest index."""
        widths = [c.width() for c in self.components]
        return int(np.argmax(widths))

    def split(self, i, fraction=0.5):
        """Split component i at lo + fraction*(hi-lo); returns (low, high)."""
        c = self.components[i]
        cut = c.lo + fraction * (c.hi - c.lo)
        if not (c.lo < cut < c.hi):
            cut = c.midpoint()
        return self.replace(i, Interval(c.lo, cut)), self.replace(i, Interval(cut, c.hi))

    # -- arithmetic used by the Krawczyk assembly --

    def __add__(self, other):
        return IntervalBox(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other):
        if isinstance(other, IntervalBox):
            return IntervalBox(a - b for a, b in zip(self.components, other.components))
        other = np.asarray(other, dtype=float)
        return IntervalBox(a - float(b) for a, b in zip(self.components, other))

    def __rsub__(self, other):
        other = np.asarray(other, dtype=float)
        return IntervalBox(float(b) - a for a, b in zip(self.components, other))


class IntervalMatrix:
    """A square grid of intervals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise DimensionMismatch("interval matrix must be square")
            for e in r:
                if not isinstance(e, Interval):
                    raise TypeError("matrix entries must be Interval")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntervalMatrix is immutable")

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def midpoint(self):
        n = len(self.rows)
        out = np.empty((n, n))
        for i in range(n):
            for j in range(n):
                out[i, j] = self.rows[i][j].midpoint()
        return out

    def matvec(self, box):
        """Interval matrix-vector product enclosing all pointwise products."""
        n = len(self.rows)
        if len(box) != n:
            raise DimensionMismatch(f"matvec: {n}x{n} matrix, {len(box)} vector")
        out = []
        for i in range(n):
            acc = Interval(0.0, 0.0)
            for j in range(n):
                acc = acc + self.rows[i][j] * box[j]
            out.append(acc)
        return IntervalBox(out)

    def matmul(self, other):
        n = len(self.rows)
        if len(other) != n:
            raise DimensionMismatch("matmul dimension mismatch")
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Interval(0.0, 0.0)
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return IntervalMatrix(out)

    @staticmethod
    def from_point(m):
        m = np.asarray(m, dtype=float)
        return IntervalMatrix(
            [[Interval(m[i, j], m[i, j]) for j in range(m.shape[1])] for i in range(m.shape[0])]
        )

    @staticmethod
    def identity(n):
        one = Interval(1.0, 1.0)
        zero = Interval(0.0, 0.0)
        return IntervalMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __sub__(self, other):
        n = len(self.rows)
        return IntervalMatrix(
            [[self.rows[i][j] - other.rows[i][j] for j in range(n)] for i in range(n)]
        )


def point_times_box(m, box):
    """Product of a point matrix with an interval vector, outward rounded."""
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if m.shape != (n, n) or len(box) != n:
        raise DimensionMismatch("point_times_box dimension mismatch")
    out = []
    for i in range(n):
        acc = Interval(0.0, 0.0)
        for j in range(n):
            acc = acc + Interval(m[i, j], m[i, j]) * box[j]
        out.append(acc)
    return IntervalBox(out)


def point_times_matrix(m, imat):
    """Product of a point matrix with an interval matrix, outward rounded."""
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Interval(0.0, 0.0)
            for k in range(n):
                acc = acc + Interval(m[i, k], m[i, k]) * imat.rows[k][j]
            row.append(acc)
        out.append(row)
    return IntervalMatrix(out)


def point_matrix_inverse(a, tol=1e-8):
    """Numerical inverse of a point matrix with a residual sanity check.

    Raises SingularMatrix when LU fails or ||A @ inv(A) - I||_inf
    exceeds ``tol`` times a conservative conditioning allowance.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    try:
        inv = np.linalg.inv(a)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrix(str(exc)) from exc
    if not np.all(np.isfinite(inv)):
        raise SingularMatrix("non-finite entries in computed inverse")
    resid = np.abs(a @ inv - np.eye(n)).sum(axis=1).max()
    if resid > tol * max(1.0, np.abs(a).sum(axis=1).max() * np.abs(inv).sum(axis=1).max()):
        raise SingularMatrix(f"inverse residual {resid:.3e} too large")
    return inv
