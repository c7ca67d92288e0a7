"""Classical radicals and related machinery.

Characteristic-0 algorithms are structural and provably exact: the solvable
radical is the Killing-orthogonal of the derived algebra, and the nilradical
of a solvable algebra consists of those x whose adjoint lies in the radical
of the enveloping associative algebra (computable from the trace form).

In characteristic p there is no comparable general algorithm in scope, so the
regimes are exhaustive enumeration under a cap, fast paths (nilpotent or
solvable algebras), and hint verification; dispatch lives in analysis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, InputError, RegimeError
from .fields import Field
from .linalg import (
    Subspace,
    count_all_subspaces,
    iter_all_subspaces,
    kernel,
    zeros,
)
from .liealg import LieAlgebra
from .adjoint import associative_closure, _obj_eye


# ---------------------------------------------------------------------------
# derivations
# ---------------------------------------------------------------------------

def derivation_algebra(L: LieAlgebra) -> list[np.ndarray]:
    """Basis of Der(L): solutions D of D[x,y] = [Dx,y] + [x,Dy] on basis pairs."""
    n = L.dim
    field = L.field
    p = field.characteristic
    if n <= 1:
        # no Leibniz constraints: every endomorphism is a derivation
        out = []
        for r in range(n):
            for c in range(n):
                m = zeros(field, (n, n))
                m[r, c] = field.one()
                out.append(m)
        return out
    blocks = []
    for i in range(n):
        for j in range(i + 1, n):
            w = L.ad[i][:, j]
            block = zeros(field, (n, n * n))
            brs = block.reshape(n, n, n)  # [row r][D-row t][D-col c]
            rng = np.arange(n)
            brs[rng, rng, :] += w[np.newaxis, :]
            brs[:, :, i] += L.ad[j]
            brs[:, :, j] -= L.ad[i]
            if p:
                block %= p
            blocks.append(block)
    system = np.concatenate(blocks, axis=0)
    sols = kernel(field, system)
    return [row.reshape(n, n) for row in sols]


def is_derivation(L: LieAlgebra, d: np.ndarray) -> bool:
    p = L.field.characteristic
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = np.dot(d, L.ad[i][:, j])
            rhs = L.bracket(d[:, i], L.basis_vector(j)) + L.bracket(
                L.basis_vector(i), d[:, j]
            )
            r = lhs - rhs
            if p:
                r = r % p
            if np.any(r):
                return False
    return True


def is_characteristic(L: LieAlgebra, ideal: Subspace, ders: list[np.ndarray] | None = None) -> bool:
    """Whether the ideal is invariant under every derivation of L."""
    if not L.is_ideal(ideal):
        raise InputError("is_characteristic expects an ideal")
    if ders is None:
        ders = derivation_algebra(L)
    p = L.field.characteristic
    ech = ideal.echelon()
    for d in ders:
        imgs = np.dot(ideal.basis, d.T)
        if p:
            imgs = imgs % p
        for r in range(imgs.shape[0]):
            if not ech.contains(imgs[r]):
                return False
    return True


def invariant_core(field: Field, start: Subspace, operators: list[np.ndarray]) -> Subspace:
    """Largest subspace of `start` invariant under all the operators."""
    x = start
    while True:
        if x.is_zero:
            return x
        ann = x.annihilator()
        blocks = []
        for m in operators:
            b = np.dot(ann, m)
            if field.is_finite:
                b = b % field.characteristic
            blocks.append(b)
        if not blocks:
            return x
        inv = Subspace.from_rows(field, x.ambient, kernel(field, np.concatenate(blocks, axis=0)))
        nxt = inv.meet(x)
        if nxt == x:
            return x
        x = nxt


def characteristic_radical(L: LieAlgebra, s: Subspace, s_radical_coords: Subspace) -> Subspace:
    """Largest solvable ideal of the subalgebra s invariant under Der(s).

    `s_radical_coords` is the solvable radical of the restriction algebra, in
    restriction coordinates; the result is mapped back to the parent.
    """
    rest = L.restriction(s)
    ders = derivation_algebra(rest.algebra)
    # operators act on columns; invariant_core works with row spaces
    ops = [d.T for d in ders]
    core = invariant_core(L.field, s_radical_coords, ops)
    out = rest.to_parent(core)
    if not rest.algebra.is_solvable(core):
        raise RegimeError("characteristic radical lost solvability (internal)")
    return out


# ---------------------------------------------------------------------------
# regularity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegularityVerdict:
    nilregular: bool
    solregular: bool
    regular: bool
    nil_class: int | None
    derived_len: int | None
    characteristic: int

    @staticmethod
    def of(characteristic: int, nil_class: int | None, derived_len: int | None) -> "RegularityVerdict":
        if characteristic == 0:
            return RegularityVerdict(True, True, True, nil_class, derived_len, 0)
        p = characteristic
        nilreg = nil_class is not None and nil_class < p - 1
        # strict integer form of dl < log2(p)
        solreg = derived_len is not None and 2 ** derived_len < p
        return RegularityVerdict(nilreg, solreg, nilreg or solreg, nil_class, derived_len, p)


# ---------------------------------------------------------------------------
# characteristic-0 structural algorithms
# ---------------------------------------------------------------------------

def killing_gram(L: LieAlgebra) -> np.ndarray:
    n = L.dim
    g = zeros(L.field, (n, n))
    for i in range(n):
        for j in range(i, n):
            t = np.trace(np.dot(L.ad[i], L.ad[j]))
            if L.field.is_finite:
                t = t % L.field.characteristic
            g[i, j] = t
            g[j, i] = t
    return g


def killing_nondegenerate(L: LieAlgebra) -> bool:
    return kernel(L.field, killing_gram(L)).shape[0] == 0


def solvable_radical_char0(L: LieAlgebra) -> Subspace:
    """R = Killing-orthogonal of the derived algebra (exact in char 0)."""
    if L.field.is_finite:
        raise RegimeError("Killing-orthogonality radical needs characteristic 0")
    l2 = L.product_space(L.full_space(), L.full_space())
    if l2.is_zero:
        return L.full_space()
    g = killing_gram(L)
    rows = np.dot(l2.basis, g)
    r = Subspace.from_rows(L.field, L.dim, kernel(L.field, rows))
    if not (L.is_ideal(r) and L.is_solvable(r)):
        raise RegimeError("radical postcondition failed (internal)")
    return r


def nilradical_char0(L: LieAlgebra) -> Subspace:
    """N(L) = N(R): x in R with ad_R(x) in the radical of the enveloping algebra."""
    if L.field.is_finite:
        raise RegimeError("structural nilradical needs characteristic 0")
    r = solvable_radical_char0(L)
    if r.is_zero:
        return r
    rest = L.restriction(r)
    ra = rest.algebra
    k = ra.dim
    gens = [ra.ad[i] for i in range(k)]
    alg = associative_closure(L.field, [g for g in gens if np.any(g)], unital=True)
    if len(alg) <= 1:
        # abelian radical: everything is ad-nilpotent
        n_coords = Subspace.full(L.field, k)
    else:
        # x in N(R)  iff  tr(ad(x) . b) = 0 for every b in the enveloping algebra
        rows = zeros(L.field, (len(alg), k))
        for bi, b in enumerate(alg):
            for a in range(k):
                rows[bi, a] = np.trace(np.dot(gens[a], b))
        n_coords = Subspace.from_rows(L.field, k, kernel(L.field, rows))
    n = rest.to_parent(n_coords)
    if not (L.is_ideal(n) and L.is_nilpotent(n)):
        raise RegimeError("nilradical postcondition failed (internal)")
    return n


def max_semisimple_ideal(L: LieAlgebra, nilrad: Subspace, cent: Subspace) -> Subspace:
    """B = C_L(N)^2 with the verified decomposition C_L(N) = Z(N) + B (char 0)."""
    if L.field.is_finite:
        raise RegimeError("maximal semisimple ideal supported in characteristic 0 only")
    b = L.product_space(cent, cent)
    zn = nilrad.meet(cent)
    if not L.is_ideal(b):
        raise RegimeError("C_L(N)^2 failed to be an ideal (internal)")
    if not (zn.meet(b).is_zero and zn.add(b) == cent):
        raise RegimeError("C_L(N) did not split as Z(N) + C_L(N)^2 (internal)")
    if not b.is_zero:
        rb = L.restriction(b)
        if not killing_nondegenerate(rb.algebra):
            raise RegimeError("C_L(N)^2 is not semisimple (internal)")
    return b


# ---------------------------------------------------------------------------
# exhaustive enumeration oracles (finite fields)
# ---------------------------------------------------------------------------

def _require_enumerable(L: LieAlgebra, cap: int) -> int:
    if not L.field.is_finite:
        raise RegimeError("subspace enumeration needs a finite field")
    total = count_all_subspaces(L.field.characteristic, L.dim)
    if total > cap:
        raise CapacityError("subspace_cap", total, cap)
    return total


def all_ideals(L: LieAlgebra, cap: int) -> list[Subspace]:
    _require_enumerable(L, cap)
    return [s for s in iter_all_subspaces(L.field, L.dim) if L.is_ideal(s)]


def all_subalgebras(L: LieAlgebra, cap: int) -> list[Subspace]:
    _require_enumerable(L, cap)
    return [s for s in iter_all_subspaces(L.field, L.dim) if L.is_subalgebra(s)]


def nilradical_exhaustive(L: LieAlgebra, cap: int) -> Subspace:
    """Sum of all nilpotent ideals, by full enumeration."""
    out = L.zero_space()
    for s in all_ideals(L, cap):
        if L.is_nilpotent(s):
            out = out.add(s)
    if not L.is_nilpotent(out):
        raise RegimeError("sum of nilpotent ideals not nilpotent (internal)")
    return out


def solvable_radical_exhaustive(L: LieAlgebra, cap: int) -> Subspace:
    out = L.zero_space()
    for s in all_ideals(L, cap):
        if L.is_solvable(s):
            out = out.add(s)
    if not L.is_solvable(out):
        raise RegimeError("sum of solvable ideals not solvable (internal)")
    return out


def minimal_ideals_by_enumeration(L: LieAlgebra, cap: int) -> list[Subspace]:
    ideals = [s for s in all_ideals(L, cap) if not s.is_zero]
    ideals.sort(key=lambda s: (s.dim, s.key()))
    minimal = []
    for s in ideals:
        if not any(s.contains(t) for t in minimal):
            minimal.append(s)
    return minimal


def maximal_subalgebras(L: LieAlgebra, caps) -> list[Subspace]:
    """All maximal proper subalgebras over a finite field.

    Nilpotent algebras have a fast path: maximal subalgebras are exactly the
    hyperplanes containing the derived algebra.
    """
    if not L.field.is_finite:
        raise RegimeError("maximal subalgebras supported over finite fields only")
    if L.dim == 0:
        return []
    if L.is_nilpotent():
        l2 = L.product_space(L.full_space(), L.full_space())
        q = L.quotient(l2)
        k = q.algebra.dim
        out = []
        for s in iter_all_subspaces(L.field, k, dims=[k - 1]):
            out.append(q.pull_space(s))
        return out
    subs = [s for s in all_subalgebras(L, caps.subspace_cap) if s.dim < L.dim]
    subs.sort(key=lambda s: -s.dim)
    maximal: list[Subspace] = []
    for s in subs:
        if not any(m.contains(s) for m in maximal):
            maximal.append(s)
    return maximal


@dataclass
class FrattiniReport:
    subalgebra: Subspace
    ideal: Subspace
    phi_free: bool
    regime: str


def frattini(L: LieAlgebra, caps) -> FrattiniReport:
    """Frattini subalgebra (intersection of maximals) and Frattini ideal."""
    if L.dim == 0:
        z = L.zero_space()
        return FrattiniReport(z, z, True, "trivial")
    if L.is_nilpotent():
        l2 = L.product_space(L.full_space(), L.full_space())
        return FrattiniReport(l2, l2, l2.is_zero, "nilpotent fast path")
    maxes = maximal_subalgebras(L, caps)
    f = L.full_space()
    for m in maxes:
        f = f.meet(m)
    phi = L.core(f)
    return FrattiniReport(f, phi, phi.is_zero, "enumeration")
