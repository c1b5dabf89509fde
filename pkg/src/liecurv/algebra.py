"""Dense small-matrix kernel: bracket, Frobenius data, matrix exponential,
seeded random generation, and the JSON wire form for matrices.

Matrices live in gl(n, R) or gl(n, C) and are kept deliberately small and
dense; everything downstream (Cartan structures, curvature, geodesics) is
built on the handful of primitives in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

import numpy as np
import scipy.linalg

from .errors import DimensionMismatch, Overflow

# A seed is a plain non-negative integer (64-bit range); the same seed always
# reproduces the same sample stream.
Seed = int

REAL = "real"
COMPLEX = "complex"

_DTYPES = {REAL: np.float64, COMPLEX: np.complex128}


@dataclass(frozen=True, eq=False)
class MatrixElement:
    """Square matrix over real or complex scalars.

    Wraps an immutable float64/complex128 array. Depending on context an
    element represents a Lie-algebra vector or a group element. Entries must
    be finite; the scalar field is carried by the dtype.
    """

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
        dtype = np.complex128 if np.iscomplexobj(arr) else np.float64
        arr = np.array(arr, dtype=dtype)  # private copy
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix entries must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def field(self) -> str:
        return COMPLEX if self.data.dtype == np.complex128 else REAL

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, n: int, field: str = REAL) -> "MatrixElement":
        return cls(np.zeros((n, n), dtype=_DTYPES[field]))

    @classmethod
    def identity(cls, n: int, field: str = REAL) -> "MatrixElement":
        return cls(np.eye(n, dtype=_DTYPES[field]))

    @classmethod
    def unit(cls, n: int, i: int, j: int, field: str = REAL,
             imaginary: bool = False) -> "MatrixElement":
        """Standard basis cell: E_ij, or i*E_ij when imaginary is set."""
        m = np.zeros((n, n), dtype=_DTYPES[COMPLEX if imaginary else field])
        m[i, j] = 1j if imaginary else 1.0
        return cls(m)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "MatrixElement") -> "MatrixElement":
        _check_pair(self, other)
        return MatrixElement(self.data + other.data)

    def __sub__(self, other: "MatrixElement") -> "MatrixElement":
        _check_pair(self, other)
        return MatrixElement(self.data - other.data)

    def __neg__(self) -> "MatrixElement":
        return MatrixElement(-self.data)

    def __mul__(self, scalar) -> "MatrixElement":
        return MatrixElement(self.data * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "MatrixElement":
        return MatrixElement(self.data / scalar)

    def __matmul__(self, other: "MatrixElement") -> "MatrixElement":
        _check_pair(self, other)
        return MatrixElement(self.data @ other.data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixElement):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    def transpose(self) -> "MatrixElement":
        return MatrixElement(self.data.T)

    def adjoint(self) -> "MatrixElement":
        """Conjugate transpose; plain transpose for real matrices."""
        return MatrixElement(np.conj(self.data).T)

    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.linalg.norm(self.data))

    def __repr__(self) -> str:
        return f"MatrixElement(n={self.n}, field={self.field!r})"


def _check_pair(u: MatrixElement, v: MatrixElement) -> None:
    if u.n != v.n or u.field != v.field:
        raise DimensionMismatch(
            f"operands disagree: {u.n}x{u.n} {u.field} vs {v.n}x{v.n} {v.field}")


def bracket(u: MatrixElement, v: MatrixElement) -> MatrixElement:
    """Lie bracket [u, v] = uv - vu."""
    _check_pair(u, v)
    return MatrixElement(u.data @ v.data - v.data @ u.data)


def frobenius_inner(u: MatrixElement, v: MatrixElement) -> float:
    """Frobenius inner product: tr(u^T v), or Re tr(u* v) over the complex field."""
    _check_pair(u, v)
    return float(np.sum(np.conj(u.data) * v.data).real)


def frobenius_norm(u: MatrixElement) -> float:
    return u.norm()


def matrix_exp(u: MatrixElement) -> MatrixElement:
    """Matrix exponential by scaling-and-squaring with a degree-13 Pade
    approximant (relative accuracy ~1e-13 for ||u|| <= 10).

    Raises Overflow if the result leaves the representable range.
    """
    with np.errstate(over="ignore", invalid="ignore"):
        out = scipy.linalg.expm(u.data)
    if not np.all(np.isfinite(out)):
        raise Overflow(f"exponential overflowed for a matrix of norm {u.norm():.3g}")
    return MatrixElement(out)


def random_matrix(rng: np.random.Generator, n: int, field: str = REAL) -> MatrixElement:
    """Matrix with entries i.i.d. uniform in [-1, 1]; for the complex field the
    real and imaginary parts are drawn independently."""
    re = rng.uniform(-1.0, 1.0, (n, n))
    if field == COMPLEX:
        return MatrixElement(re + 1j * rng.uniform(-1.0, 1.0, (n, n)))
    return MatrixElement(re)


def random_element(seed: Seed, n: int, field: str = REAL) -> MatrixElement:
    """Deterministic random matrix keyed by (seed, n, field)."""
    if n < 1:
        raise DimensionMismatch(f"n must be >= 1, got {n}")
    return random_matrix(np.random.default_rng(seed), n, field)


# -- JSON wire form ---------------------------------------------------------
#
#   {"n": int, "field": "real"|"complex", "entries": [...]}
#
# entries is a flat row-major list of length n*n; real entries are plain
# numbers, complex entries are [re, im] pairs.


def matrix_to_json(u: MatrixElement) -> dict:
    if u.field == COMPLEX:
        entries: list[Any] = [[float(z.real), float(z.imag)] for z in u.data.flat]
    else:
        entries = [float(x) for x in u.data.flat]
    return {"n": u.n, "field": u.field, "entries": entries}


def matrix_from_json(obj: Any) -> MatrixElement:
    """Parse the JSON wire form. A bare nested list of rows is also accepted
    and is read as a real matrix."""
    if isinstance(obj, list):
        return MatrixElement(_rows_to_array(obj))
    if not isinstance(obj, dict):
        raise ValueError(f"expected a matrix object or nested list, got {type(obj).__name__}")
    try:
        n = int(obj["n"])
        field = obj["field"]
        entries = obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
    if field not in (REAL, COMPLEX):
        raise ValueError(f"unknown field tag {field!r}")
    if not isinstance(entries, list) or len(entries) != n * n:
        raise ValueError(f"entries must hold exactly {n * n} scalars")
    if field == COMPLEX:
        flat = [complex(_num(p[0]), _num(p[1])) for p in map(_pair, entries)]
        arr = np.array(flat, dtype=np.complex128).reshape(n, n)
    else:
        arr = np.array([_num(x) for x in entries], dtype=np.float64).reshape(n, n)
    return MatrixElement(arr)


def _rows_to_array(rows: Iterable) -> np.ndarray:
    arr = np.array(rows, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"nested list must be square rows, got shape {arr.shape}")
    return arr


def _num(x: Any) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ValueError(f"expected a number, got {x!r}")
    return float(x)


def _pair(p: Any) -> list:
    if not isinstance(p, list) or len(p) != 2:
        raise ValueError(f"complex entries must be [re, im] pairs, got {p!r}")
    return p
