"""Forward-mode automatic differentiation with vectorized dual numbers.

A :class:`Dual` carries a value array of shape ``S`` and a derivative array of
shape ``S + (nd,)`` holding directional derivatives against ``nd`` seed
directions. All model code is written against the dispatch helpers in this
module (``sin``, ``matvec``, ``solve3``, ...) so the same functions evaluate
on plain floats/arrays (cheap, for line searches and simulation) and on duals
(exact Jacobians for the NLP).

Leading axes of the value array are free batch axes; the transcription layer
uses them to evaluate every shooting node in one vectorized pass.
"""

from __future__ import annotations

import numpy as np


class Dual:
    """Value plus directional derivatives against a fixed seed basis."""

    __slots__ = ("val", "der")
    __array_ufunc__ = None  # force numpy to defer to our reflected operators

    def __init__(self, val, der):
        self.val = np.asarray(val, dtype=float)
        self.der = np.asarray(der, dtype=float)

    @property
    def nseeds(self):
        return self.der.shape[-1]

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val + other.val, self.der + other.der)
        return Dual(self.val + other, _match(self.der, np.shape(other), self.val.shape))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val - other.val, self.der - other.der)
        return Dual(self.val - other, _match(self.der, np.shape(other), self.val.shape))

    def __rsub__(self, other):
        return Dual(other - self.val, -_match(self.der, np.shape(other), self.val.shape))

    def __mul__(self, other):
        if isinstance(other, Dual):
            return Dual(
                self.val * other.val,
                self.der * other.val[..., None] + other.der * self.val[..., None],
            )
        other = np.asarray(other, dtype=float)
        return Dual(self.val * other, self.der * other[..., None])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Dual):
            inv = 1.0 / other.val
            val = self.val * inv
            der = (self.der - other.der * val[..., None]) * inv[..., None]
            return Dual(val, der)
        other = np.asarray(other, dtype=float)
        return Dual(self.val / other, self.der / other[..., None])

    def __rtruediv__(self, other):
        other = np.asarray(other, dtype=float)
        val = other / self.val
        der = -self.der * (val / self.val)[..., None]
        return Dual(val, der)

    def __pow__(self, p):
        if not isinstance(p, (int, float)):
            raise TypeError("dual powers support numeric exponents only")
        val = self.val ** p
        der = self.der * (p * self.val ** (p - 1))[..., None]
        return Dual(val, der)

    def __neg__(self):
        return Dual(-self.val, -self.der)

    def __pos__(self):
        return self

    # -- comparisons act on values (branching/pivot decisions only) -------

    def __lt__(self, other):
        return self.val < value(other)

    def __le__(self, other):
        return self.val <= value(other)

    def __gt__(self, other):
        return self.val > value(other)

    def __ge__(self, other):
        return self.val >= value(other)

    # -- structure ---------------------------------------------------------

    def __getitem__(self, idx):
        if not isinstance(idx, tuple):
            idx = (idx,)
        return Dual(self.val[idx], self.der[idx + (slice(None),)])

    @property
    def shape(self):
        return self.val.shape

    def sum(self, axis):
        axis = axis % self.val.ndim
        return Dual(self.val.sum(axis=axis), self.der.sum(axis=axis))

    def __repr__(self):
        return f"Dual(val={self.val!r})"


def _match(der, other_shape, val_shape):
    """Broadcast a derivative array to the shape implied by a value broadcast."""
    target = np.broadcast_shapes(val_shape, other_shape)
    if target == val_shape:
        return der
    return np.broadcast_to(der, target + der.shape[-1:])


# -- construction ----------------------------------------------------------


def seed(arrays):
    """Promote arrays to duals sharing one seed basis (identity per block).

    Each input contributes its trailing axis as a block of seed directions;
    leading axes are shared batch axes.
    """
    arrays = [np.asarray(a, dtype=float) for a in arrays]
    widths = [a.shape[-1] for a in arrays]
    nd = int(sum(widths))
    out = []
    offset = 0
    for a, w in zip(arrays, widths):
        der = np.zeros(a.shape + (nd,))
        for i in range(w):
            der[..., i, offset + i] = 1.0
        out.append(Dual(a, der))
        offset += w
    return out


def constant(x, like):
    """Lift a plain array to a zero-derivative dual matching ``like``'s seeds."""
    x = np.asarray(x, dtype=float)
    return Dual(x, np.zeros(x.shape + (like.nseeds,)))


def value(x):
    return x.val if isinstance(x, Dual) else np.asarray(x, dtype=float)


def derivative(x):
    """Derivative array of ``x`` (zeros are only representable on duals)."""
    return x.der if isinstance(x, Dual) else None


def jacobian(f, x):
    """Value and exact Jacobian of ``f`` at 1-D point ``x`` via one dual pass."""
    (xd,) = seed([np.asarray(x, dtype=float)])
    out = f(xd)
    return value(out), out.der if isinstance(out, Dual) else np.zeros(value(out).shape + (len(x),))


# -- elementwise functions ---------------------------------------------------


def sin(x):
    if isinstance(x, Dual):
        return Dual(np.sin(x.val), np.cos(x.val)[..., None] * x.der)
    return np.sin(x)


def cos(x):
    if isinstance(x, Dual):
        return Dual(np.cos(x.val), -np.sin(x.val)[..., None] * x.der)
    return np.cos(x)


def tan(x):
    if isinstance(x, Dual):
        return Dual(np.tan(x.val), x.der / (np.cos(x.val) ** 2)[..., None])
    return np.tan(x)


def arctan(x):
    if isinstance(x, Dual):
        return Dual(np.arctan(x.val), x.der / (1.0 + x.val**2)[..., None])
    return np.arctan(x)


def arctan2(y, x):
    if not isinstance(y, Dual) and not isinstance(x, Dual):
        return np.arctan2(y, x)
    if not isinstance(y, Dual):
        y = constant(y, x)
    if not isinstance(x, Dual):
        x = constant(x, y)
    denom = x.val**2 + y.val**2
    der = (x.val[..., None] * y.der - y.val[..., None] * x.der) / denom[..., None]
    return Dual(np.arctan2(y.val, x.val), der)


def sqrt(x):
    if isinstance(x, Dual):
        root = np.sqrt(x.val)
        return Dual(root, x.der * (0.5 / root)[..., None])
    return np.sqrt(x)


def exp(x):
    if isinstance(x, Dual):
        e = np.exp(x.val)
        return Dual(e, x.der * e[..., None])
    return np.exp(x)


def log(x):
    if isinstance(x, Dual):
        return Dual(np.log(x.val), x.der / x.val[..., None])
    return np.log(x)


def arcsin(x):
    if isinstance(x, Dual):
        return Dual(np.arcsin(x.val), x.der / np.sqrt(1.0 - x.val**2)[..., None])
    return np.arcsin(x)


# -- small linear algebra, batched over leading axes -------------------------


def stack(parts, axis=-1):
    """Stack scalars into a vector (axis=-1) or vectors into a matrix (axis=-2)."""
    duals = [p for p in parts if isinstance(p, Dual)]
    if not duals:
        return np.stack([np.asarray(p, dtype=float) for p in parts], axis=axis)
    nd = duals[0].nseeds
    shape = np.broadcast_shapes(*[np.shape(value(p)) for p in parts])
    vals, ders = [], []
    for p in parts:
        v = np.broadcast_to(value(p), shape)
        vals.append(v)
        if isinstance(p, Dual):
            ders.append(np.broadcast_to(p.der, shape + (nd,)))
        else:
            ders.append(np.zeros(shape + (nd,)))
    daxis = axis if axis >= 0 else axis - 1
    return Dual(np.stack(vals, axis=axis), np.stack(ders, axis=daxis))


def sum_last(x):
    if isinstance(x, Dual):
        return Dual(x.val.sum(axis=-1), x.der.sum(axis=-2))
    return x.sum(axis=-1)


def dot(a, b):
    return sum_last(a * b) if isinstance(a, Dual) or isinstance(b, Dual) else np.sum(a * b, axis=-1)


def norm(v):
    return sqrt(dot(v, v))


def cross(a, b):
    if not isinstance(a, Dual) and not isinstance(b, Dual):
        return np.cross(a, b)
    c0 = a[..., 1] * b[..., 2] - a[..., 2] * b[..., 1]
    c1 = a[..., 2] * b[..., 0] - a[..., 0] * b[..., 2]
    c2 = a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]
    return stack([c0, c1, c2], axis=-1)


def matvec(m, v):
    if not isinstance(m, Dual) and not isinstance(v, Dual):
        return np.einsum("...ij,...j->...i", m, v)
    if not isinstance(m, Dual):
        m = constant(m, v)
    if not isinstance(v, Dual):
        v = constant(v, m)
    val = np.einsum("...ij,...j->...i", m.val, v.val)
    der = np.einsum("...ijd,...j->...id", m.der, v.val) + np.einsum(
        "...ij,...jd->...id", m.val, v.der
    )
    return Dual(val, der)


def matmul(a, b):
    if not isinstance(a, Dual) and not isinstance(b, Dual):
        return np.einsum("...ij,...jk->...ik", a, b)
    if not isinstance(a, Dual):
        a = constant(a, b)
    if not isinstance(b, Dual):
        b = constant(b, a)
    val = np.einsum("...ij,...jk->...ik", a.val, b.val)
    der = np.einsum("...ijd,...jk->...ikd", a.der, b.val) + np.einsum(
        "...ij,...jkd->...ikd", a.val, b.der
    )
    return Dual(val, der)


def transpose(m):
    """Transpose the trailing matrix axes."""
    if isinstance(m, Dual):
        return Dual(np.swapaxes(m.val, -1, -2), np.swapaxes(m.der, -2, -3))
    return np.swapaxes(m, -1, -2)


def det3(c0, c1, c2):
    """Determinant of the 3x3 matrix with the given column vectors."""
    return dot(c0, cross(c1, c2))


def solve3(m, b):
    """Solve a (batched) 3x3 linear system by Cramer's rule.

    Closed-form arithmetic keeps the solve exactly differentiable through
    duals; fine for well-conditioned kinematic maps, which callers guard.
    """
    c0 = m[..., :, 0]
    c1 = m[..., :, 1]
    c2 = m[..., :, 2]
    d = det3(c0, c1, c2)
    x0 = det3(b, c1, c2) / d
    x1 = det3(c0, b, c2) / d
    x2 = det3(c0, c1, b) / d
    return stack([x0, x1, x2], axis=-1)
