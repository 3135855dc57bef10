"""Exact dense linear algebra over prime fields and the rationals.

Matrices are plain numpy arrays: ``int64`` residues for ``F_p`` and ``object``
arrays of :class:`fractions.Fraction` (or ``int``) for ``Q``.  All routines are
pure; inputs are never modified.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InconsistentSystem

_INT64_MAX = 2**63 - 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Base class; use :class:`PrimeField` or :class:`Rationals`."""

    characteristic: int
    name: str
    dtype: object

    # -- construction -------------------------------------------------
    @staticmethod
    def parse(text: str) -> "Field":
        """``"Fp:101"`` or ``"Q"``."""
        text = text.strip()
        if text in ("Q", "QQ"):
            return Rationals()
        if text.startswith("Fp:"):
            return PrimeField(int(text[3:]))
        raise ValueError(f"unknown field {text!r}")

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name

    def zeros(self, rows: int, cols: int | None = None) -> np.ndarray:
        shape = (rows,) if cols is None else (rows, cols)
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = 1
        return out

    def array(self, data) -> np.ndarray:
        raise NotImplementedError

    def elem(self, x):
        raise NotImplementedError

    def reduce(self, a: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def inv_scalar(self, x):
        raise NotImplementedError

    def parse_elem(self, s):
        raise NotImplementedError

    def format_elem(self, x) -> str:
        raise NotImplementedError

    def random(self, rng: np.random.Generator, shape, low: int = -3, high: int = 3) -> np.ndarray:
        raise NotImplementedError

    # -- matrix arithmetic -------------------------------------------
    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(a @ b)

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(np.kron(a, b))

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and pivot columns."""
        m = self.reduce(np.array(a, dtype=self.dtype, copy=True))
        if m.ndim != 2:
            raise ValueError("rref expects a matrix")
        rows, cols = m.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(m[r:, c])
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                m[[r, i]] = m[[i, r]]
            m[r] = self.reduce(m[r] * self.inv_scalar(m[r, c]))
            col = m[:, c].copy()
            col[r] = 0
            hit = np.flatnonzero(col)
            if hit.size:
                m[hit] = self.reduce(m[hit] - np.outer(col[hit], m[r]))
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self, a: np.ndarray) -> int:
        if a.size == 0:
            return 0
        return len(self.rref(a)[1])

    def nullspace(self, a: np.ndarray) -> np.ndarray:
        """Columns form a basis of ``{x : a x = 0}``."""
        rows, cols = a.shape
        if rows == 0 or cols == 0:
            return self.eye(cols)
        r, piv = self.rref(a)
        free = [c for c in range(cols) if c not in set(piv)]
        out = self.zeros(cols, len(free))
        for k, f in enumerate(free):
            out[f, k] = 1
            for i, p in enumerate(piv):
                out[p, k] = self.reduce(np.array([-r[i, f]], dtype=self.dtype))[0]
        return out

    def colspace(self, a: np.ndarray) -> np.ndarray:
        """A column basis of the image of ``a`` (a subset of its columns)."""
        if a.size == 0:
            return self.zeros(a.shape[0], 0)
        _, piv = self.rref(a)
        return a[:, piv]

    def solve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """One solution ``x`` of ``a x = b``; raises if none exists."""
        rows, cols = a.shape
        vec = b.ndim == 1
        bb = b.reshape(rows, -1) if vec else b
        k = bb.shape[1]
        if cols == 0:
            if np.any(self.reduce(bb)):
                raise InconsistentSystem("no solution")
            out = self.zeros(0, k)
            return out.reshape(0) if vec else out
        aug = np.concatenate([a, bb], axis=1).astype(self.dtype) if rows else self.zeros(0, cols + k)
        r, piv = self.rref(aug)
        if any(p >= cols for p in piv):
            raise InconsistentSystem("no solution")
        x = self.zeros(cols, k)
        for i, p in enumerate(piv):
            x[p] = r[i, cols:]
        return x.reshape(cols) if vec else x

    def inv(self, a: np.ndarray) -> np.ndarray:
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("inverse of a non-square matrix")
        if n == 0:
            return self.zeros(0, 0)
        r, piv = self.rref(np.concatenate([a, self.eye(n)], axis=1))
        if piv[:n] != list(range(n)):
            raise InconsistentSystem("matrix is singular")
        return r[:, n:]

    def complement(self, cols: np.ndarray, n: int) -> np.ndarray:
        """Standard basis vectors completing the column span of ``cols`` to ``F^n``."""
        if cols.size == 0:
            return self.eye(n)
        _, piv = self.rref(cols.T)
        free = [i for i in range(n) if i not in set(piv)]
        out = self.zeros(n, len(free))
        for k, i in enumerate(free):
            out[i, k] = 1
        return out

    def left_annihilator(self, cols: np.ndarray, n: int) -> np.ndarray:
        """Rows form a basis of linear forms vanishing on the span of ``cols``."""
        if cols.size == 0:
            return self.eye(n)
        return self.nullspace(cols.T).T

    def in_span(self, cols: np.ndarray, v: np.ndarray) -> bool:
        if cols.size == 0:
            return not np.any(self.reduce(v))
        try:
            self.solve(cols, v)
        except InconsistentSystem:
            return False
        return True

    def is_zero(self, a: np.ndarray) -> bool:
        return not np.any(self.reduce(np.asarray(a, dtype=self.dtype)))

    def equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        return a.shape == b.shape and self.is_zero(a - b)


class PrimeField(Field):
    """The prime field ``F_p`` for a prime ``p <= 2**31``."""

    dtype = np.int64

    def __init__(self, p: int):
        if not _is_prime(p) or p > 2**31:
            raise ValueError(f"{p} is not a supported prime")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"
        self._safe_terms = _INT64_MAX // max((p - 1) ** 2, 1)

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        if arr.size:
            arr = np.vectorize(self.elem, otypes=[np.int64])(arr)
        return np.asarray(arr, dtype=np.int64)

    def elem(self, x) -> int:
        if isinstance(x, str):
            return self.parse_elem(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def reduce(self, a):
        return np.mod(a, self.p)

    def inv_scalar(self, x) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return pow(x, self.p - 2, self.p)

    def parse_elem(self, s) -> int:
        s = str(s).strip()
        if "/" in s:
            num, den = s.split("/")
            return (int(num) * self.inv_scalar(int(den))) % self.p
        return int(s) % self.p

    def format_elem(self, x) -> str:
        return str(int(x) % self.p)

    def matmul(self, a, b):
        inner = a.shape[-1] if a.ndim else 1
        if inner <= self._safe_terms:
            return np.mod(a @ b, self.p)
        out = np.mod(a.astype(object) @ b.astype(object), self.p)
        return out.astype(np.int64)

    def random(self, rng, shape, low=-3, high=3):
        return rng.integers(0, self.p, size=shape, dtype=np.int64)


class Rationals(Field):
    """The field of rational numbers with exact :class:`Fraction` entries."""

    dtype = object
    characteristic = 0
    name = "Q"

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        if arr.size:
            arr = np.vectorize(self.elem, otypes=[object])(arr)
        return arr

    def elem(self, x):
        if isinstance(x, str):
            return self.parse_elem(x)
        return Fraction(x)

    def reduce(self, a):
        return a

    def inv_scalar(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero in Q")
        return Fraction(1) / Fraction(x)

    def parse_elem(self, s):
        return Fraction(str(s).strip())

    def format_elem(self, x) -> str:
        return str(Fraction(x))

    def random(self, rng, shape, low=-3, high=3):
        vals = rng.integers(low, high + 1, size=shape)
        return np.vectorize(Fraction, otypes=[object])(vals) if vals.size else np.zeros(shape, dtype=object)


def block_diag(field: Field, blocks: Sequence[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = field.zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out
