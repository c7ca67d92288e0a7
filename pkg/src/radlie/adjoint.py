"""Adjoint-module machinery: spinning, minimal ideals, irreducibility, socles.

Minimality of an ideal is irreducibility of the adjoint action on it.  Over
finite fields the decisive test is Norton's criterion: for any singular
element t of the enveloping action, either some kernel vector spins to a
proper submodule (reducible, with witness), or every kernel vector spins to
the whole module and one dual kernel vector spins to the whole dual, which
proves irreducibility.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import CapacityError, InputError, RegimeError
from .fields import Field
from .linalg import Echelon, Subspace, kernel, rref, zeros
from .liealg import LieAlgebra


# ---------------------------------------------------------------------------
# spinning
# ---------------------------------------------------------------------------

def spin(L: LieAlgebra, vectors) -> Subspace:
    """Smallest ideal of L containing the given vectors."""
    if isinstance(vectors, Subspace):
        rows = [vectors.basis[i] for i in range(vectors.dim)]
    else:
        rows = list(vectors)
    ech = Echelon(L.field, L.dim)
    frontier = [r for r in rows if ech.insert(r)]
    p = L.field.characteristic
    while frontier:
        batch = np.stack(frontier)
        new = []
        for i in range(L.dim):
            imgs = np.dot(batch, L.ad[i].T)
            if p:
                imgs = imgs % p
            for r in range(imgs.shape[0]):
                if ech.insert(imgs[r]):
                    new.append(imgs[r])
        frontier = new
    b = ech.matrix()
    b.flags.writeable = False
    return Subspace(L.field, L.dim, b, tuple(ech.pivots))


def spin_closure(L: LieAlgebra, space: Subspace, extra) -> Subspace:
    return spin(L, list(space.basis) + list(extra))


# ---------------------------------------------------------------------------
# module coordinates for an ideal
# ---------------------------------------------------------------------------

@dataclass
class AdjointModule:
    """The adjoint action of L restricted to an ideal, in canonical coords.

    Row-vector convention: a coordinate row c represents c @ basis, and the
    generator g_i acts by c -> c @ act[i].
    """

    L: LieAlgebra
    space: Subspace
    act: list

    @staticmethod
    def of(L: LieAlgebra, space: Subspace) -> "AdjointModule":
        piv = list(space.pivots)
        p = L.field.characteristic
        mats = []
        for i in range(L.dim):
            m = np.dot(space.basis, L.ad[i].T)
            if p:
                m = m % p
            mats.append(m[:, piv])
        return AdjointModule(L, space, mats)

    @property
    def dim(self) -> int:
        return self.space.dim

    def to_ambient(self, coords: np.ndarray) -> np.ndarray:
        v = np.dot(coords, self.space.basis)
        if self.L.field.is_finite:
            v = v % self.L.field.characteristic
        return v

    def submodule_to_ambient(self, rows) -> Subspace:
        return Subspace.from_rows(self.L.field, self.L.dim, [self.to_ambient(r) for r in rows])

    def spin_coords(self, start_rows, transpose=False) -> Echelon:
        """Closure of coordinate rows under the action (or its transpose)."""
        k = self.dim
        p = self.L.field.characteristic
        gens = [m.T for m in self.act] if transpose else self.act
        ech = Echelon(self.L.field, k)
        frontier = [r for r in start_rows if ech.insert(r)]
        while frontier:
            batch = np.stack(frontier)
            new = []
            for g in gens:
                imgs = np.dot(batch, g)
                if p:
                    imgs = imgs % p
                for r in range(imgs.shape[0]):
                    if ech.insert(imgs[r]):
                        new.append(imgs[r])
            frontier = new
        return ech


# ---------------------------------------------------------------------------
# Norton-style irreducibility over finite fields
# ---------------------------------------------------------------------------

def _candidate_elements(mod: AdjointModule, rng, attempts):
    """Deterministic stream of enveloping-algebra elements to test."""
    k = mod.dim
    p = mod.L.field.characteristic
    nonzero = [m for m in mod.act if np.any(m)]
    for m in nonzero:
        yield m
    for _ in range(attempts):
        t = np.zeros((k, k), dtype=np.int64)
        for m in nonzero:
            t = (t + rng.randrange(p) * m) % p
        if rng.randrange(2) and len(nonzero) >= 2:
            a = nonzero[rng.randrange(len(nonzero))]
            b = nonzero[rng.randrange(len(nonzero))]
            t = (t + np.dot(a, b)) % p
        yield t


def norton_irreducible(L: LieAlgebra, space: Subspace, rng, enum_cap: int, attempts: int = 64):
    """Decide irreducibility of an ideal as an L-module over a finite field.

    Returns (irreducible, certificate, witness_submodule_or_None).
    """
    if not L.field.is_finite:
        raise RegimeError("Norton test needs a finite field")
    if space.is_zero:
        raise InputError("irreducibility of the zero module is undefined")
    k = space.dim
    if k == 1:
        return True, "dimension 1", None
    q = L.field.characteristic
    mod = AdjointModule.of(L, space)
    if all(not np.any(m) for m in mod.act):
        # trivial action: any coordinate line is a proper submodule
        line = mod.submodule_to_ambient([np.eye(k, dtype=np.int64)[0]])
        return False, "trivial action", line

    best = None  # (nullity, t, ker_rows)
    for t in _candidate_elements(mod, rng, attempts):
        ker_rows = kernel(L.field, t.T)  # {c : c @ t = 0}
        nullity = ker_rows.shape[0]
        if 0 < nullity < k:
            if best is None or nullity < best[0]:
                best = (nullity, t, ker_rows)
            if nullity == 1:
                break
    if best is None:
        # no singular element found: fall back to exhaustive spinning
        if q ** k > enum_cap:
            raise CapacityError("enum_cap", q ** k, enum_cap)
        full = Subspace.full(L.field, k)
        for pt in full.projective_points():
            ech = mod.spin_coords([pt])
            if ech.rank < k:
                return False, "exhaustive spin found proper submodule", mod.submodule_to_ambient(ech.rows)
        return True, f"exhaustive spin of {q}^{k} vectors", None

    nullity, t, ker_rows = best
    if q ** nullity > enum_cap:
        raise CapacityError("enum_cap", q ** nullity, enum_cap)
    ker_space = Subspace.from_rows(L.field, k, ker_rows)
    for pt in ker_space.projective_points():
        ech = mod.spin_coords([pt])
        if ech.rank < k:
            return False, "kernel vector spins to proper submodule", mod.submodule_to_ambient(ech.rows)
    dual_rows = kernel(L.field, t)  # {f : t @ f = 0}, dual-side kernel
    f = dual_rows[0]
    dech = mod.spin_coords([f], transpose=True)
    if dech.rank < k:
        perp = kernel(L.field, dech.matrix())
        return False, "dual kernel vector exposes proper submodule", mod.submodule_to_ambient(perp)
    cert = f"Norton: nullity {nullity}, all kernel spins full, dual spin full"
    return True, cert, None


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class SocleReport:
    minimal_ideals: list
    socle: Subspace
    abelian_socle: Subspace
    complete: bool
    regime: str
    certificates: list = dc_field(default_factory=list)


@dataclass
class ChiefFactor:
    """Nested ideals lower < upper with upper/lower minimal in L/lower."""

    lower: Subspace
    upper: Subspace
    kind: str  # abelian | simple | irregular
    certificate: str

    @property
    def dim(self) -> int:
        return self.upper.dim - self.lower.dim


def minimal_ideals_exhaustive(L: LieAlgebra, within: Subspace, enum_cap: int) -> list[Subspace]:
    """All minimal ideals of L inside the ideal `within`, by spinning every
    projective point; complete by construction."""
    q = L.field.characteristic
    if not q:
        raise RegimeError("exhaustive enumeration needs a finite field")
    if q ** within.dim > enum_cap:
        raise CapacityError("enum_cap", q ** within.dim, enum_cap)
    spins = {}
    for pt in within.projective_points():
        s = spin(L, [pt])
        spins[s.key()] = s
    distinct = sorted(spins.values(), key=lambda s: (s.dim, s.key()))
    minimal = []
    for s in distinct:
        if not any(s.contains(t) for t in minimal):
            minimal.append(s)
    return minimal


def factor_centraliser(L: LieAlgebra, factor: ChiefFactor) -> Subspace:
    """C_L(A/B) = {y : [y, A] <= B}."""
    _check_factor(L, factor)
    return L.centraliser_mod(factor.upper, factor.lower)


def induces_inner(L: LieAlgebra, factor: ChiefFactor, x: np.ndarray, cent: Subspace | None = None) -> bool:
    """Whether x acts on A/B as some element of A does: x in A + C_L(A/B)."""
    _check_factor(L, factor)
    c = cent if cent is not None else factor_centraliser(L, factor)
    return factor.upper.add(c).contains_vector(x)


def _check_factor(L: LieAlgebra, factor: ChiefFactor):
    if factor.upper.dim <= factor.lower.dim or not factor.upper.contains(factor.lower):
        raise InputError("malformed chief factor: need lower strictly inside upper")


# ---------------------------------------------------------------------------
# characteristic-0 structured machinery
# ---------------------------------------------------------------------------

def action_matrices(L: LieAlgebra, space: Subspace) -> list[np.ndarray]:
    """Right-action matrices of the basis of L on an invariant subspace."""
    return AdjointModule.of(L, space).act


def associative_closure(field: Field, gens: list[np.ndarray], unital: bool = True):
    """Basis of the associative algebra generated by gens (as k*k matrices)."""
    if not gens:
        return []
    k = gens[0].shape[0]
    ech = Echelon(field, k * k)
    basis = []

    def push(m):
        if ech.insert(m.reshape(-1)):
            basis.append(m)
            return True
        return False

    if unital:
        push(np.eye(k, dtype=np.int64) if field.is_finite else _obj_eye(k))
    frontier = [g for g in gens if push(g)]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                for prod in (np.dot(m, g), np.dot(g, m)):
                    if field.is_finite:
                        prod = prod % field.characteristic
                    if push(prod):
                        new.append(prod)
        frontier = new
    return basis


def _obj_eye(k):
    from fractions import Fraction

    m = np.empty((k, k), dtype=object)
    m[...] = Fraction(0)
    for i in range(k):
        m[i, i] = Fraction(1)
    return m


def associative_radical_char0(field: Field, basis: list[np.ndarray]) -> list[np.ndarray]:
    """Jacobson radical of a matrix algebra over Q: the trace-form kernel."""
    if field.is_finite:
        raise RegimeError("trace-form radical only valid in characteristic 0")
    d = len(basis)
    if d == 0:
        return []
    gram = zeros(field, (d, d))
    for r in range(d):
        for s in range(d):
            gram[r, s] = np.trace(np.dot(basis[r], basis[s]))
    coords = kernel(field, gram)
    return [sum(c * b for c, b in zip(row, basis)) for row in coords]


def module_socle_char0(field: Field, gens: list[np.ndarray], dim: int) -> Subspace:
    """Socle of F^dim (rows) under the right action of gens, char 0.

    The socle is the annihilator of the radical of the enveloping algebra.
    """
    nonzero = [g for g in gens if np.any(g)]
    if not nonzero:
        return Subspace.full(field, dim)
    alg = associative_closure(field, nonzero, unital=True)
    rad = associative_radical_char0(field, alg)
    if not rad:
        return Subspace.full(field, dim)
    # rows c with c @ j = 0 for every radical element j
    stacked = np.concatenate([j.T for j in rad], axis=0)
    return Subspace.from_rows(field, dim, kernel(field, stacked))


def minimal_polynomial(field: Field, m: np.ndarray):
    """Monic minimal polynomial coefficients (low to high degree)."""
    k = m.shape[0]
    ech = Echelon(field, k * k)
    power = _obj_eye(k) if not field.is_finite else np.eye(k, dtype=np.int64)
    powers = [power]
    ech.insert(power.reshape(-1))
    while True:
        power = np.dot(powers[-1], m)
        if field.is_finite:
            power = power % field.characteristic
        red = ech.reduce(power.reshape(-1))
        if not np.any(red):
            break
        ech.insert(power.reshape(-1))
        powers.append(power)
    # express the last power in terms of the previous ones
    from .linalg import solve as lin_solve

    mat = np.stack([p.reshape(-1) for p in powers]).T
    coeffs = lin_solve(field, mat, power.reshape(-1))
    deg = len(powers)
    poly = [field.neg(c) for c in coeffs] + [field.one()]
    assert len(poly) == deg + 1
    return poly


def _poly_of_matrix(field: Field, coeffs, m: np.ndarray) -> np.ndarray:
    k = m.shape[0]
    out = zeros(field, (k, k))
    power = _obj_eye(k) if not field.is_finite else np.eye(k, dtype=np.int64)
    for c in coeffs:
        if c:
            out = out + c * power
        power = np.dot(power, m)
        if field.is_finite:
            power = power % field.characteristic
            out = out % field.characteristic
    return out


def split_by_centroid_char0(alg: LieAlgebra) -> list[Subspace]:
    """Decompose a perfect algebra over Q into indecomposable ideals.

    The centroid (commutant of the adjoint action) of a semisimple algebra is
    a product of fields; factoring the minimal polynomial of a primitive
    element yields the primitive idempotents and hence the components.
    """
    if alg.field.is_finite:
        raise RegimeError("centroid splitting implemented for characteristic 0")
    n = alg.dim
    if n == 0:
        return []
    # commutant of {ad e_i}: c with c @ ad_i - ad_i @ c = 0; unknowns c (n x n)
    blocks = []
    for i in range(n):
        a = alg.ad[i]
        # row for each (r, s) entry of the commutator, unknown vec(c)
        # (c @ a - a @ c)[r, s] = sum_t c[r,t] a[t,s] - a[r,t] c[t,s]
        m = zeros(alg.field, (n * n, n * n))
        for r in range(n):
            for s in range(n):
                row = r * n + s
                for t in range(n):
                    m[row, r * n + t] = m[row, r * n + t] + a[t, s]
                    m[row, t * n + s] = m[row, t * n + s] - a[r, t]
        blocks.append(m)
    sol = kernel(alg.field, np.concatenate(blocks, axis=0))
    centroid = [row.reshape(n, n) for row in sol]
    if len(centroid) <= 1:
        return [Subspace.full(alg.field, n)]

    gamma = _primitive_element(alg.field, centroid)
    coeffs = minimal_polynomial(alg.field, gamma)
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x)
    factors = [sympy.Poly(f, x) for f, _ in poly.factor_list()[1]]
    if len(factors) == 1:
        return [Subspace.full(alg.field, n)]
    components = []
    for f in factors:
        cof = sympy.div(poly, f, x)[0]
        # idempotent e = s*cof with s*cof = 1 mod f; cof kills the other factors
        s, _, g = sympy.gcdex(cof.as_expr(), f.as_expr(), x)
        assert sympy.simplify(g - 1) == 0
        e_poly = sympy.rem(sympy.expand(s * cof.as_expr()), poly.as_expr(), x)
        e_coeffs = _sympy_poly_coeffs(alg.field, e_poly, x, len(coeffs))
        e = _poly_of_matrix(alg.field, e_coeffs, gamma)
        comp = Subspace.from_rows(alg.field, n, rref(alg.field, e.T)[0])
        if not comp.is_zero:
            components.append(comp)
    return sorted(components, key=lambda s: s.key())


def _sympy_poly_coeffs(field: Field, expr, x, pad: int):
    import sympy

    p = sympy.Poly(expr, x)
    from fractions import Fraction

    out = [Fraction(0)] * pad
    for power, c in zip(range(p.degree(), -1, -1), p.all_coeffs()):
        out[power] = Fraction(int(sympy.numer(c)), int(sympy.denom(c)))
    return out


def _primitive_element(field: Field, centroid: list[np.ndarray]) -> np.ndarray:
    """Deterministic search for an element whose min poly has full degree."""
    d = len(centroid)
    best = None
    best_deg = -1
    import itertools

    for height in range(1, 6):
        for combo in itertools.product(range(-height, height + 1), repeat=d):
            if all(c == 0 for c in combo):
                continue
            gamma = sum(c * g for c, g in zip(combo, centroid))
            deg = len(minimal_polynomial(field, gamma)) - 1
            if deg > best_deg:
                best, best_deg = gamma, deg
            if deg == d:
                return gamma
    return best
