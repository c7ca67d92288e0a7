"""Structure-constant Lie algebras and their elementary calculus.

A table stores [e_i, e_j] for i < j only; antisymmetry and the zero diagonal
are synthesized, so alternation cannot be violated by construction.  The
Jacobi identity is the one law that must be checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InputError, ValidationError
from .fields import Field
from .linalg import (
    Echelon,
    Subspace,
    as_vector,
    eye,
    is_zero_array,
    rref,
    kernel,
    zeros,
)


class LieAlgebra:
    """Finite-dimensional Lie algebra given by structure constants."""

    def __init__(self, field: Field, dim: int, table: dict, labels=None, name: str = ""):
        """table maps (i, j) with i < j to a coefficient vector of [e_i, e_j]."""
        self.field = field
        self.dim = dim
        self.name = name or f"lie{dim}"
        self.labels = tuple(labels) if labels else tuple(f"e{i+1}" for i in range(dim))
        if len(self.labels) != dim:
            raise InputError("label count does not match dimension")
        canon = {}
        for (i, j), vec in table.items():
            if not (0 <= i < j < dim):
                raise InputError(f"bad bracket index pair ({i}, {j})")
            v = vec if isinstance(vec, np.ndarray) else as_vector(field, vec)
            if field.is_finite:
                v = v % field.characteristic
            if v.shape != (dim,):
                raise InputError(f"bracket [{i},{j}] has wrong length")
            if not is_zero_array(v):
                v = v.copy()
                v.flags.writeable = False
                canon[(i, j)] = v
        self.table = canon
        # ad tensor: ad[i] is the matrix of y -> [e_i, y]
        ad = zeros(field, (dim, dim, dim))
        for (i, j), v in canon.items():
            ad[i, :, j] = v
            ad[j, :, i] = (-v) % field.characteristic if field.is_finite else -v
        ad.flags.writeable = False
        self.ad = ad

    # -- identity ----------------------------------------------------------

    def structure_key(self):
        from .linalg import array_key

        items = tuple(
            (ij, array_key(self.field, v)) for ij, v in sorted(self.table.items())
        )
        return (self.field.characteristic, self.dim, items)

    def __repr__(self):
        return f"LieAlgebra({self.name}, dim={self.dim}, {self.field})"

    # -- brackets ----------------------------------------------------------

    def ad_of(self, x: np.ndarray) -> np.ndarray:
        """Matrix of y -> [x, y]."""
        if self.field.is_finite:
            p = self.field.characteristic
            return np.tensordot(x, self.ad, axes=(0, 0)) % p
        m = zeros(self.field, (self.dim, self.dim))
        for i, c in enumerate(x):
            if c:
                m = m + c * self.ad[i]
        return m

    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        out = np.dot(self.ad_of(x), y)
        if self.field.is_finite:
            out = out % self.field.characteristic
        return out

    def bracket_rows(self, rows_a: np.ndarray, rows_b: np.ndarray) -> list[np.ndarray]:
        """All pairwise brackets of two row collections."""
        out = []
        p = self.field.characteristic
        for a in rows_a:
            m = self.ad_of(a)
            imgs = np.dot(rows_b, m.T)
            if p:
                imgs = imgs % p
            out.extend(imgs[i] for i in range(imgs.shape[0]))
        return out

    def product_space(self, u: Subspace, v: Subspace) -> Subspace:
        """Span of all [x, y] with x in u and y in v (bilinearity)."""
        self._check_space(u)
        self._check_space(v)
        rows = self.bracket_rows(u.basis, v.basis)
        return Subspace.from_rows(self.field, self.dim, rows)

    def _check_space(self, s: Subspace):
        if s.field != self.field or s.ambient != self.dim:
            raise InputError("subspace does not live in this algebra")

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, rows) -> Subspace:
        return Subspace.from_rows(self.field, self.dim, rows)

    def basis_vector(self, i: int) -> np.ndarray:
        v = zeros(self.field, self.dim)
        v[i] = self.field.one()
        return v

    # -- validation ---------------------------------------------------------

    def validate(self):
        """Check the Jacobi identity on all basis triples.

        Returns a ValidationReport; the first violating triple is recorded
        1-based for error messages.
        """
        p = self.field.characteristic
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                wij = self.ad[i][:, j]
                for k in range(j + 1, self.dim):
                    r = (
                        np.dot(self.ad[k], wij)
                        + np.dot(self.ad[i], self.ad[j][:, k])
                        + np.dot(self.ad[j], self.ad[k][:, i])
                    )
                    if p:
                        r = r % p
                    if not is_zero_array(r):
                        residual = (-r) % p if p else -r
                        return ValidationReport(
                            ok=False,
                            triple=(i + 1, j + 1, k + 1),
                            residual=residual,
                            message=f"Jacobi fails on triple ({i+1},{j+1},{k+1})",
                        )
        return ValidationReport(ok=True, triple=None, residual=None, message="ok")

    def require_valid(self):
        report = self.validate()
        if not report.ok:
            raise ValidationError(report.message, triple=report.triple)
        return self

    # -- centres and centralisers -------------------------------------------

    @cached_property
    def centre(self) -> Subspace:
        stacked = np.concatenate([self.ad[i] for i in range(self.dim)], axis=0)
        return Subspace.from_rows(self.field, self.dim, kernel(self.field, stacked))

    def centraliser(self, s: Subspace) -> Subspace:
        """C_L(S) = {x : [x, S] = 0}, computed as a stacked kernel."""
        self._check_space(s)
        if s.is_zero:
            return self.full_space()
        blocks = [self.ad_of(s.basis[i]) for i in range(s.dim)]
        return Subspace.from_rows(
            self.field, self.dim, kernel(self.field, np.concatenate(blocks, axis=0))
        )

    def centraliser_mod(self, a: Subspace, b: Subspace) -> Subspace:
        """{y : [y, a] <= b}; with b = 0 this is the plain centraliser."""
        self._check_space(a)
        self._check_space(b)
        if a.is_zero:
            return self.full_space()
        ann = b.annihilator()
        blocks = [np.dot(ann, self.ad_of(a.basis[i])) for i in range(a.dim)]
        stacked = np.concatenate(blocks, axis=0)
        if self.field.is_finite:
            stacked = stacked % self.field.characteristic
        return Subspace.from_rows(self.field, self.dim, kernel(self.field, stacked))

    # -- subalgebra predicates ------------------------------------------------

    def is_subalgebra(self, s: Subspace) -> bool:
        return s.contains(self.product_space(s, s))

    def is_ideal(self, s: Subspace) -> bool:
        return s.contains(self.product_space(self.full_space(), s))

    def is_perfect_space(self, s: Subspace) -> bool:
        return self.product_space(s, s) == s

    # -- series ---------------------------------------------------------------

    def derived_series(self, s: Subspace | None = None):
        """Terms S, [S,S], ... until stabilization; derived length when solvable."""
        s = s if s is not None else self.full_space()
        terms = [s]
        if s.is_zero:
            return terms, 0
        while True:
            nxt = self.product_space(terms[-1], terms[-1])
            if nxt == terms[-1]:
                return terms, None
            terms.append(nxt)
            if nxt.is_zero:
                return terms, len(terms) - 1

    def lower_central_series(self, s: Subspace | None = None):
        """Terms S, [S,S], [S,[S,S]], ...; nilpotency class when nilpotent."""
        s = s if s is not None else self.full_space()
        terms = [s]
        if s.is_zero:
            return terms, 0
        while True:
            nxt = self.product_space(s, terms[-1])
            if nxt == terms[-1]:
                return terms, None
            terms.append(nxt)
            if nxt.is_zero:
                return terms, len(terms) - 1

    def is_nilpotent(self, s: Subspace | None = None) -> bool:
        return self.lower_central_series(s)[1] is not None

    def is_solvable(self, s: Subspace | None = None) -> bool:
        return self.derived_series(s)[1] is not None

    def nilpotency_class(self, s: Subspace | None = None):
        return self.lower_central_series(s)[1]

    def derived_length(self, s: Subspace | None = None):
        return self.derived_series(s)[1]

    # -- constructions ----------------------------------------------------------

    def quotient(self, ideal: Subspace) -> "Quotient":
        if not self.is_ideal(ideal):
            raise InputError("quotient requires an ideal")
        return Quotient(self, ideal)

    def restriction(self, s: Subspace) -> "Restriction":
        if not self.is_subalgebra(s):
            raise InputError("restriction requires a subalgebra")
        return Restriction(self, s)

    def core(self, s: Subspace) -> Subspace:
        """Largest ideal contained in s: descending invariance iteration."""
        self._check_space(s)
        x = s
        while True:
            if x.is_zero:
                return x
            ann = x.annihilator()
            blocks = [np.dot(ann, self.ad[i]) for i in range(self.dim)]
            stacked = np.concatenate(blocks, axis=0)
            if self.field.is_finite:
                stacked = stacked % self.field.characteristic
            inv = Subspace.from_rows(self.field, self.dim, kernel(self.field, stacked))
            nxt = inv.meet(x)
            if nxt == x:
                return x
            x = nxt

    def change_of_basis(self, p_rows: np.ndarray) -> "LieAlgebra":
        """Same algebra written on the basis given by the rows of p_rows."""
        from .linalg import inverse

        n = self.dim
        pinv = inverse(self.field, p_rows.T)  # columns are new basis vectors
        table = {}
        for a in range(n):
            for b in range(a + 1, n):
                w = self.bracket(p_rows[a], p_rows[b])
                coords = np.dot(pinv, w)
                if self.field.is_finite:
                    coords = coords % self.field.characteristic
                table[(a, b)] = coords
        return LieAlgebra(self.field, n, table, name=self.name + "'")


@dataclass
class ValidationReport:
    ok: bool
    triple: tuple | None
    residual: np.ndarray | None
    message: str


@dataclass
class SubAlgHandle:
    """A subspace of a parent algebra with cached structural flags."""

    parent: LieAlgebra
    space: Subspace

    @cached_property
    def is_subalgebra(self) -> bool:
        return self.parent.is_subalgebra(self.space)

    @cached_property
    def is_ideal(self) -> bool:
        return self.parent.is_ideal(self.space)

    @cached_property
    def is_perfect(self) -> bool:
        return self.parent.is_perfect_space(self.space)


class Quotient:
    """Quotient algebra L/I with push and pull maps.

    The quotient basis is the set of standard basis vectors at the non-pivot
    positions of I, taken greedily in pivot order; pull(push(U)) = U + I for
    subspaces U containing I.
    """

    def __init__(self, parent: LieAlgebra, ideal: Subspace):
        self.parent = parent
        self.ideal = ideal
        self.positions = ideal.complement_positions()
        k = len(self.positions)
        table = {}
        for a in range(k):
            for b in range(a + 1, k):
                w = parent.bracket(
                    parent.basis_vector(self.positions[a]),
                    parent.basis_vector(self.positions[b]),
                )
                table[(a, b)] = self.push_vector(w)
        labels = [parent.labels[i] for i in self.positions]
        self.algebra = LieAlgebra(
            parent.field, k, table, labels=labels, name=parent.name + "/I"
        )

    def push_vector(self, v: np.ndarray) -> np.ndarray:
        r = self.ideal.reduce_vector(v)
        return r[list(self.positions)] if self.positions else np.zeros(0, dtype=self.parent.field.dtype)

    def lift_vector(self, c: np.ndarray) -> np.ndarray:
        v = zeros(self.parent.field, self.parent.dim)
        for coord, pos in zip(c, self.positions):
            v[pos] = coord
        return v

    def push_space(self, s: Subspace) -> Subspace:
        rows = [self.push_vector(s.basis[i]) for i in range(s.dim)]
        return Subspace.from_rows(self.parent.field, self.algebra.dim, rows)

    def pull_space(self, s: Subspace) -> Subspace:
        rows = [self.lift_vector(s.basis[i]) for i in range(s.dim)]
        rows.extend(self.ideal.basis[i] for i in range(self.ideal.dim))
        return Subspace.from_rows(self.parent.field, self.parent.dim, rows)


class Restriction:
    """A subalgebra written as a standalone algebra on its canonical basis."""

    def __init__(self, parent: LieAlgebra, space: Subspace):
        self.parent = parent
        self.space = space
        k = space.dim
        table = {}
        for a in range(k):
            for b in range(a + 1, k):
                w = parent.bracket(space.basis[a], space.basis[b])
                table[(a, b)] = w[list(space.pivots)]
        labels = [f"s{a+1}" for a in range(k)]
        self.algebra = LieAlgebra(parent.field, k, table, labels=labels, name=parent.name + "|sub")

    def to_parent(self, s: Subspace) -> Subspace:
        rows = np.dot(s.basis, self.space.basis) if s.dim else []
        if isinstance(rows, np.ndarray) and self.parent.field.is_finite:
            rows = rows % self.parent.field.characteristic
        return Subspace.from_rows(self.parent.field, self.parent.dim, rows)

    def from_parent(self, s: Subspace) -> Subspace:
        rows = [s.basis[i][list(self.space.pivots)] for i in range(s.dim)]
        return Subspace.from_rows(self.parent.field, self.space.dim, rows)

    def to_parent_vector(self, v: np.ndarray) -> np.ndarray:
        out = np.dot(v, self.space.basis)
        if self.parent.field.is_finite:
            out = out % self.parent.field.characteristic
        return out


@dataclass
class DirectSum:
    algebra: LieAlgebra
    left: Subspace
    right: Subspace
    parts: tuple


def direct_sum(l1: LieAlgebra, l2: LieAlgebra, name: str = "") -> DirectSum:
    """Block-diagonal sum; both blocks are ideals of the result."""
    if l1.field != l2.field:
        raise InputError("direct sum requires a common field")
    n1, n2 = l1.dim, l2.dim
    field = l1.field
    table = {}
    for (i, j), v in l1.table.items():
        w = zeros(field, n1 + n2)
        w[:n1] = v
        table[(i, j)] = w
    for (i, j), v in l2.table.items():
        w = zeros(field, n1 + n2)
        w[n1:] = v
        table[(i + n1, j + n1)] = w
    labels = [f"{lbl}.1" for lbl in l1.labels] + [f"{lbl}.2" for lbl in l2.labels]
    alg = LieAlgebra(field, n1 + n2, table, labels=labels, name=name or f"{l1.name}(+){l2.name}")
    left = Subspace.from_rows(field, n1 + n2, eye(field, n1 + n2)[:n1])
    right = Subspace.from_rows(field, n1 + n2, eye(field, n1 + n2)[n1:])
    return DirectSum(alg, left, right, (l1, l2))
