"""Dense exact linear algebra and a canonical subspace calculus.

Matrices are numpy arrays (int64 mod p, or object arrays of Fractions) with
the field passed alongside.  Subspaces are immutable values carrying their
reduced row-echelon basis, so equal subspaces have identical bases.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .errors import InputError
from .fields import Field


# ---------------------------------------------------------------------------
# array construction
# ---------------------------------------------------------------------------

def as_vector(field: Field, entries) -> np.ndarray:
    """Coerce a sequence of scalars into a canonical 1-D array."""
    if field.is_finite:
        return np.array([int(x) for x in entries], dtype=np.int64) % field.characteristic
    out = np.empty(len(entries), dtype=object)
    for i, x in enumerate(entries):
        out[i] = Fraction(x)
    return out


def as_matrix(field: Field, rows) -> np.ndarray:
    rows = list(rows)
    if not rows:
        return np.zeros((0, 0), dtype=field.dtype)
    return np.stack([as_vector(field, r) for r in rows])


def zeros(field: Field, shape) -> np.ndarray:
    if field.is_finite:
        return np.zeros(shape, dtype=np.int64)
    out = np.empty(shape, dtype=object)
    out[...] = Fraction(0)
    return out


def eye(field: Field, n: int) -> np.ndarray:
    out = zeros(field, (n, n))
    for i in range(n):
        out[i, i] = field.one()
    return out


def unit_vector(field: Field, n: int, i: int) -> np.ndarray:
    v = zeros(field, n)
    v[i] = field.one()
    return v


def matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact matrix product (np.dot supports both int64 and object arrays)."""
    c = np.dot(a, b)
    if field.is_finite:
        c = c % field.characteristic
    return c


def is_zero_array(a: np.ndarray) -> bool:
    if a.size == 0:
        return True
    return not np.any(a)


def array_key(field: Field, a: np.ndarray):
    """Hashable canonical key of an exact array."""
    if field.is_finite:
        return (a.shape, a.tobytes())
    return (a.shape, tuple((x.numerator, x.denominator) for x in a.flat))


# ---------------------------------------------------------------------------
# reduced row echelon engine
# ---------------------------------------------------------------------------

class Echelon:
    """Incremental reduced row-echelon basis of a growing row collection.

    The stored rows are mutually reduced, so reducing a vector is a single
    gather + matrix product rather than a per-pivot loop.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self._mat = np.zeros((0, ncols), dtype=field.dtype)
        self.pivots: list[int] = []

    @property
    def rows(self):
        return [self._mat[i] for i in range(self._mat.shape[0])]

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Fully reduce v against the current basis."""
        p = self.field.characteristic
        v = v % p if p else v.copy()
        if not self.pivots:
            return v
        coeffs = v[self.pivots]
        if not np.any(coeffs):
            return v
        v = v - np.dot(coeffs, self._mat)
        return v % p if p else v

    def insert(self, v: np.ndarray) -> bool:
        """Reduce and adjoin v; returns True when the span grew."""
        p = self.field.characteristic
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        piv = int(nz[0])
        lead = v[piv]
        if p:
            if lead != 1:
                v = (v * pow(int(lead), -1, p)) % p
        elif lead != 1:
            v = v / lead
        col = self._mat[:, piv].copy()
        if np.any(col):
            self._mat = self._mat - np.outer(col, v)
            if p:
                self._mat = self._mat % p
        at = bisect_left(self.pivots, piv)
        self._mat = np.insert(self._mat, at, v, axis=0)
        self.pivots.insert(at, piv)
        return True

    def extend(self, rows) -> bool:
        grew = False
        for r in rows:
            grew |= self.insert(r)
        return grew

    def contains(self, v: np.ndarray) -> bool:
        return is_zero_array(self.reduce(v))

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def matrix(self) -> np.ndarray:
        return self._mat.copy()


def rref(field: Field, a: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Unique reduced row-echelon form of a and its pivot columns."""
    if a.ndim != 2:
        raise InputError("rref expects a 2-D array")
    ech = Echelon(field, a.shape[1])
    ech.extend(a)
    return ech.matrix(), tuple(ech.pivots)


def rank(field: Field, a: np.ndarray) -> int:
    return rref(field, a)[0].shape[0]


def kernel(field: Field, a: np.ndarray) -> np.ndarray:
    """RREF basis of the right null space {x : a @ x = 0}."""
    r, pivots = rref(field, a)
    n = a.shape[1]
    free = [j for j in range(n) if j not in pivots]
    rows = []
    for j in free:
        v = zeros(field, n)
        v[j] = field.one()
        for i, piv in enumerate(pivots):
            v[piv] = field.neg(r[i, j])
        rows.append(v)
    if not rows:
        return np.zeros((0, n), dtype=field.dtype)
    out, _ = rref(field, np.stack(rows))
    return out


def solve(field: Field, a: np.ndarray, b: np.ndarray):
    """One solution of a @ x = b, or None when inconsistent."""
    m, n = a.shape
    if b.shape != (m,):
        raise InputError("solve: dimension mismatch")
    aug = np.concatenate([a, b.reshape(m, 1)], axis=1)
    r, pivots = rref(field, aug)
    if n in pivots:
        return None
    x = zeros(field, n)
    for i, piv in enumerate(pivots):
        x[piv] = r[i, n]
    return x


def inverse(field: Field, a: np.ndarray) -> np.ndarray:
    """Inverse of a square matrix; RREF of [a | I] yields [I | a^-1]."""
    n = a.shape[0]
    if a.shape != (n, n):
        raise InputError("inverse expects a square matrix")
    aug = np.concatenate([a, eye(field, n)], axis=1)
    r, pivots = rref(field, aug)
    if pivots[: min(len(pivots), n)] != tuple(range(n)):
        raise InputError("matrix is singular")
    return r[:, n:]


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """Canonical subspace of F^n: an RREF basis with no zero rows.

    Canonicity gives the central invariant: two subspaces over the same
    ambient are equal as sets iff their basis arrays are identical.
    """

    field: Field
    ambient: int
    basis: np.ndarray = dc_field(repr=False)
    pivots: tuple[int, ...]

    @staticmethod
    def from_rows(field: Field, ambient: int, rows) -> "Subspace":
        if isinstance(rows, np.ndarray):
            if rows.ndim != 2 or rows.shape[1] != ambient:
                raise InputError("subspace rows have wrong shape")
            mat = rows
        else:
            rows = [as_vector(field, r) for r in rows]
            for r in rows:
                if r.shape != (ambient,):
                    raise InputError("subspace vector has wrong length")
            mat = np.stack(rows) if rows else np.zeros((0, ambient), dtype=field.dtype)
        b, piv = rref(field, mat)
        b.flags.writeable = False
        return Subspace(field, ambient, b, piv)

    @staticmethod
    def zero(field: Field, ambient: int) -> "Subspace":
        b = np.zeros((0, ambient), dtype=field.dtype)
        b.flags.writeable = False
        return Subspace(field, ambient, b, ())

    @staticmethod
    def full(field: Field, ambient: int) -> "Subspace":
        b = eye(field, ambient)
        b.flags.writeable = False
        return Subspace(field, ambient, b, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def key(self):
        return (self.ambient, self.pivots, array_key(self.field, self.basis))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self):
        return hash(self.key())

    def _check_compatible(self, other: "Subspace"):
        if self.field != other.field or self.ambient != other.ambient:
            raise InputError("subspaces live in different ambients")

    def echelon(self) -> Echelon:
        ech = Echelon(self.field, self.ambient)
        ech._mat = self.basis.copy()
        ech.pivots = list(self.pivots)
        return ech

    def reduce_vector(self, v: np.ndarray) -> np.ndarray:
        return self.echelon().reduce(v)

    def contains_vector(self, v: np.ndarray) -> bool:
        return is_zero_array(self.reduce_vector(v))

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        ech = self.echelon()
        return all(ech.contains(other.basis[i]) for i in range(other.dim))

    def coords_of(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of a member vector in the canonical basis.

        For an RREF basis the pivot columns are unit columns, so coordinates
        are just the pivot entries of v.
        """
        if not self.contains_vector(v):
            raise InputError("vector not in subspace")
        if self.dim == 0:
            return np.zeros(0, dtype=self.field.dtype)
        return v[list(self.pivots)].copy()

    def add(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        ech = self.echelon()
        ech.extend(other.basis)
        b = ech.matrix()
        b.flags.writeable = False
        return Subspace(self.field, self.ambient, b, tuple(ech.pivots))

    def meet(self, other: "Subspace") -> "Subspace":
        """Intersection by double-block (Zassenhaus-style) elimination."""
        self._check_compatible(other)
        n = self.ambient
        fld = self.field
        top = np.concatenate([self.basis, self.basis], axis=1)
        bot = np.concatenate([other.basis, zeros(fld, (other.dim, n))], axis=1)
        ech = Echelon(fld, 2 * n)
        ech.extend(top)
        ech.extend(bot)
        rows = [row[n:] for row, piv in zip(ech.rows, ech.pivots) if piv >= n]
        return Subspace.from_rows(fld, n, rows)

    def annihilator(self) -> np.ndarray:
        """Rows spanning the functionals vanishing on this subspace."""
        if self.dim == 0:
            return eye(self.field, self.ambient)
        return kernel(self.field, self.basis)

    def complement_positions(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.ambient) if j not in self.pivots)

    # -- finite-field enumeration ----------------------------------------

    def point_count(self) -> int:
        q = self.field.characteristic
        if not q:
            raise InputError("point enumeration needs a finite field")
        return q ** self.dim

    def projective_points(self):
        """All nonzero vectors up to scalar, deterministically ordered."""
        q = self.field.characteristic
        if not q:
            raise InputError("point enumeration needs a finite field")
        k = self.dim
        for lead in range(k):
            head = [0] * lead + [1]
            for tail in itertools.product(range(q), repeat=k - lead - 1):
                coords = np.array(head + list(tail), dtype=np.int64)
                yield (coords @ self.basis) % q


def sum_spaces(spaces, field: Field, ambient: int) -> Subspace:
    out = Subspace.zero(field, ambient)
    for s in spaces:
        out = out.add(s)
    return out


def render_vector(field: Field, v: np.ndarray, labels) -> str:
    """Human-readable linear combination of labeled basis elements."""
    parts = []
    for i, c in enumerate(v):
        if not c:
            continue
        if c == field.one():
            parts.append(labels[i])
        else:
            parts.append(f"{field.fmt(c)}*{labels[i]}")
    return " + ".join(parts) if parts else "0"


def render_subspace(space: Subspace, labels) -> str:
    if space.is_zero:
        return "0"
    if space.dim == space.ambient:
        return "<whole algebra>"
    rows = [render_vector(space.field, space.basis[i], labels) for i in range(space.dim)]
    return "span{ " + ", ".join(rows) + " }"


# ---------------------------------------------------------------------------
# exhaustive subspace enumeration over GF(q)
# ---------------------------------------------------------------------------

def gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_all_subspaces(q: int, n: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def iter_all_subspaces(field: Field, n: int, dims=None):
    """Every subspace of GF(q)^n as a canonical Subspace, by dimension.

    Enumerates RREF matrices directly: choose pivot columns, then all
    assignments of the free entries.
    """
    q = field.characteristic
    if not q:
        raise InputError("subspace enumeration needs a finite field")
    dim_range = range(n + 1) if dims is None else dims
    for k in dim_range:
        if k == 0:
            yield Subspace.zero(field, n)
            continue
        for pivots in itertools.combinations(range(n), k):
            free = [
                (i, j)
                for i in range(k)
                for j in range(pivots[i] + 1, n)
                if j not in pivots
            ]
            for values in itertools.product(range(q), repeat=len(free)):
                mat = np.zeros((k, n), dtype=np.int64)
                for i, p in enumerate(pivots):
                    mat[i, p] = 1
                for (i, j), v in zip(free, values):
                    mat[i, j] = v
                mat.flags.writeable = False
                yield Subspace(field, n, mat, tuple(pivots))
