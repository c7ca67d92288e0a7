"""Per-algebra analysis context: regime dispatch, hint verification, caching.

Every radical-style quantity is computed once per algebra under an explicit
regime and cached together with its provenance:

* "structured"  - provably-correct characteristic-0 algorithms,
* "fast-path"   - degenerate shapes (nilpotent, solvable, zero nilradical),
* "exhaustive"  - finite-field enumeration below the configured caps,
* "hinted"      - a fixture-supplied candidate that passed verification.

Hinted values are never trusted raw: a nilradical hint, for instance, must be
a nilpotent ideal such that no minimal ideal of the quotient has a nilpotent
preimage, with the quotient's minimal ideals themselves certified complete.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import CapacityError, HintError, InputError, RegimeError
from .fields import Field
from .linalg import Subspace, as_vector, sum_spaces
from .liealg import LieAlgebra, Quotient, Restriction
from . import adjoint as adj
from . import radicals as rad
from .adjoint import ChiefFactor, SocleReport


@dataclass(frozen=True)
class Caps:
    """Enumeration budgets; flags and env vars override the defaults."""

    enum_cap: int = 1 << 16        # max q**dim for per-candidate vector enumeration
    subspace_cap: int = 5_000_000  # max subspace count for full enumeration
    spin_seeds: int = 64           # randomized spin attempts in Norton searches
    seed: int = 0


@dataclass
class Hints:
    """Optional assisted-regime candidates, all in this algebra's coordinates."""

    nilradical: list | None = None          # list of vectors
    radical: list | None = None
    minimal_ideals: list | None = None      # list of vector lists
    frattini: list | None = None            # only the empty list (phi = 0) is verifiable
    frattini_witnesses: list | None = None  # list of vector lists (codim-1 subalgebras)
    sub: dict = dc_field(default_factory=dict)  # subspace key -> Hints (vectors in parent coords)

    @staticmethod
    def empty() -> "Hints":
        return Hints()

    def is_empty(self) -> bool:
        return not any(
            [self.nilradical is not None, self.radical is not None,
             self.minimal_ideals is not None, self.frattini is not None,
             self.frattini_witnesses is not None, self.sub]
        )


@dataclass
class Computed:
    value: object
    regime: str


def _stable_seed(seed: int, *tags) -> int:
    h = zlib.crc32(repr(tags).encode())
    return (seed * 1_000_003 + h) & 0x7FFFFFFF


class Analysis:
    """Lazy, regime-aware computation cache for one Lie algebra."""

    def __init__(self, L: LieAlgebra, caps: Caps | None = None,
                 hints: Hints | None = None, name: str | None = None):
        self.L = L
        self.caps = caps or Caps()
        self.hints = hints or Hints.empty()
        self.name = name or L.name
        self._cache: dict = {}
        self.sum_parts = None  # (left_space, right_space, left_analysis, right_analysis)

    # -- plumbing -----------------------------------------------------------

    def _memo(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    def _rng(self, *tags) -> random.Random:
        return random.Random(_stable_seed(self.caps.seed, self.name, *tags))

    def _space(self, vectors) -> Subspace:
        rows = [as_vector(self.L.field, v) for v in vectors]
        return Subspace.from_rows(self.L.field, self.L.dim, rows)

    @property
    def field(self) -> Field:
        return self.L.field

    # -- elementary cached objects -------------------------------------------

    def centre(self) -> Subspace:
        return self.L.centre

    def derived_algebra(self) -> Subspace:
        return self._memo("L2", lambda: self.L.product_space(self.L.full_space(), self.L.full_space()))

    def is_nilpotent(self) -> bool:
        return self._memo("nilp", lambda: self.L.is_nilpotent())

    def is_solvable(self) -> bool:
        return self._memo("solv", lambda: self.L.is_solvable())

    def derivations(self) -> list:
        return self._memo("der", lambda: rad.derivation_algebra(self.L))

    # -- restrictions and quotients -------------------------------------------

    def restriction_analysis(self, space: Subspace) -> tuple[Restriction, "Analysis"]:
        def build():
            rest = self.L.restriction(space)
            if space.dim == self.L.dim:
                # identity restriction: coordinates agree, keep all hints
                an = Analysis(rest.algebra, self.caps, self.hints, name=self.name)
            else:
                sub_hints = self.hints.sub.get(space.key(), Hints.empty())
                converted = _convert_hints_to_restriction(sub_hints, rest)
                an = Analysis(rest.algebra, self.caps, converted,
                              name=f"{self.name}|{space.dim}d")
            return rest, an

        return self._memo(("rest", space.key()), build)

    def quotient_analysis(self, ideal: Subspace) -> tuple[Quotient, "Analysis"]:
        def build():
            q = self.L.quotient(ideal)
            an = Analysis(q.algebra, self.caps, Hints.empty(),
                          name=f"{self.name}/{ideal.dim}d")
            return q, an

        return self._memo(("quot", ideal.key()), build)

    # -- nilradical and solvable radical ---------------------------------------

    def nilradical(self) -> Computed:
        return self._memo("N", self._nilradical)

    def _nilradical(self) -> Computed:
        L = self.L
        if L.dim == 0:
            return Computed(L.zero_space(), "trivial")
        if not L.field.is_finite:
            return Computed(rad.nilradical_char0(L), "structured")
        if self.is_nilpotent():
            return Computed(L.full_space(), "fast-path: nilpotent")
        if self.hints.nilradical is not None:
            space = self._space(self.hints.nilradical)
            self._verify_radical_hint(space, "nilradical")
            return Computed(space, "hinted")
        total = rad.count_all_subspaces(L.field.characteristic, L.dim)
        if total <= self.caps.subspace_cap:
            return Computed(rad.nilradical_exhaustive(L, self.caps.subspace_cap), "exhaustive")
        raise CapacityError("subspace_cap", total, self.caps.subspace_cap)

    def radical(self) -> Computed:
        return self._memo("R", self._radical)

    def _radical(self) -> Computed:
        L = self.L
        if L.dim == 0:
            return Computed(L.zero_space(), "trivial")
        if not L.field.is_finite:
            return Computed(rad.solvable_radical_char0(L), "structured")
        if self.is_solvable():
            return Computed(L.full_space(), "fast-path: solvable")
        if self.hints.radical is not None:
            space = self._space(self.hints.radical)
            self._verify_radical_hint(space, "radical")
            return Computed(space, "hinted")
        total = rad.count_all_subspaces(L.field.characteristic, L.dim)
        if total <= self.caps.subspace_cap:
            return Computed(rad.solvable_radical_exhaustive(L, self.caps.subspace_cap), "exhaustive")
        raise CapacityError("subspace_cap", total, self.caps.subspace_cap)

    def _verify_radical_hint(self, space: Subspace, which: str):
        """A candidate N (resp. R) must be a nilpotent (solvable) ideal such
        that no minimal ideal of L/candidate pulls back nilpotent (solvable)."""
        L = self.L
        if not L.is_ideal(space):
            raise HintError(f"{which} hint is not an ideal")
        if which == "nilradical":
            if not L.is_nilpotent(space):
                raise HintError("nilradical hint is not nilpotent")
        else:
            if not L.is_solvable(space):
                raise HintError("radical hint is not solvable")
        if space.dim == L.dim:
            return
        if space.is_zero:
            report = self.socle()
            pulled = [(m, m) for m in report.minimal_ideals]
        else:
            q, qan = self.quotient_analysis(space)
            report = qan.socle()
            pulled = [(m, q.pull_space(m)) for m in report.minimal_ideals]
        if not _socle_is_provably_complete(report):
            raise HintError(
                f"{which} hint cannot be certified: quotient minimal ideals not provably complete"
            )
        for mbar, m in pulled:
            if which == "nilradical" and L.is_nilpotent(m):
                raise HintError("nilradical hint not maximal: nilpotent overideal exists")
            if which == "radical" and L.is_solvable(m):
                raise HintError("radical hint not maximal: solvable overideal exists")

    # -- derived quantities -----------------------------------------------------

    def cent_nilradical(self) -> Subspace:
        return self._memo("C", lambda: self.L.centraliser(self.nilradical().value))

    def zn(self) -> Subspace:
        """Z(N) = N meet C_L(N)."""
        return self._memo("ZN", lambda: self.nilradical().value.meet(self.cent_nilradical()))

    def regularity(self, space: Subspace | None = None) -> rad.RegularityVerdict:
        """Regularity verdict of a subalgebra (default: L itself)."""
        key = ("reg", None if space is None else space.key())

        def build():
            if space is None or space.dim == self.L.dim:
                an = self
            else:
                _, an = self.restriction_analysis(space)
            n = an.nilradical().value
            r = an.radical().value
            ncls = an.L.nilpotency_class(n)
            rdl = an.L.derived_length(r)
            return rad.RegularityVerdict.of(self.field.characteristic, ncls, rdl)

        return self._memo(key, build)

    # -- socles -------------------------------------------------------------------

    def socle(self, within: Subspace | None = None) -> SocleReport:
        w = within if within is not None else self.L.full_space()
        return self._memo(("socle", w.key()), lambda: self._socle(w))

    def _socle(self, within: Subspace) -> SocleReport:
        L = self.L
        if within.is_zero:
            return SocleReport([], L.zero_space(), L.zero_space(), True, "trivial")
        if not L.is_ideal(within):
            raise InputError("socle computation expects an ideal")
        if L.field.is_finite:
            q = L.field.characteristic
            if q ** within.dim <= self.caps.enum_cap:
                mins = adj.minimal_ideals_exhaustive(L, within, self.caps.enum_cap)
                return _assemble_socle(L, mins, True, "exhaustive",
                                       [f"spun all {q}**{within.dim} vectors"])
            if self.hints.minimal_ideals is not None:
                return self._socle_hinted(within)
            raise CapacityError("enum_cap", q ** within.dim, self.caps.enum_cap)
        return self._socle_char0(within)

    def _socle_hinted(self, within: Subspace) -> SocleReport:
        L = self.L
        certs = []
        all_mins = []
        for vectors in self.hints.minimal_ideals:
            m = self._space(vectors)
            if m.is_zero or not L.is_ideal(m):
                raise HintError("minimal-ideal hint is not a nonzero ideal")
            ok, cert = self.is_minimal_ideal(m)
            if not ok:
                raise HintError(f"minimal-ideal hint is not minimal: {cert}")
            certs.append(cert)
            all_mins.append(m)
        # exhaustiveness certificate: with S the sum of the verified minimal
        # ideals, any unlisted minimal ideal B has B meet M_i = 0 for all i,
        # hence [B, S] = 0; C_L(S) <= S and Z(S) = 0 then force B = 0.
        s = sum_spaces(all_mins, L.field, L.dim)
        provably = False
        if all_mins:
            c = L.centraliser(s)
            if s.contains(c) and s.meet(c).is_zero:
                provably = True
                certs.append("exhaustive-in-fact: C_L(S) inside S and Z(S) = 0")
        listed = [m for m in all_mins if within.contains(m)]
        report = _assemble_socle(L, listed, False, "hinted", certs)
        report.provably_exhaustive = provably
        return report

    def _socle_char0(self, within: Subspace) -> SocleReport:
        L = self.L
        n = self.nilradical().value
        c = self.cent_nilradical()
        zn = self.zn()
        certs = []
        # abelian minimal ideals live inside Z(N)
        v = zn.meet(within)
        ab_list, ab_soc, ab_complete = _abelian_socle_char0(L, v)
        certs.append(f"abelian socle from the action on a {v.dim}-dim central space")
        # non-abelian minimal ideals are the simple components of C_L(N)^2
        b = rad.max_semisimple_ideal(L, n, c)
        comps = []
        if not b.is_zero:
            restb, _ = self.restriction_analysis(b)
            for comp_coords in adj.split_by_centroid_char0(restb.algebra):
                comp = restb.to_parent(comp_coords)
                if not L.is_ideal(comp) or not L.is_perfect_space(comp):
                    raise RegimeError("centroid component failed verification (internal)")
                rc, _ = self.restriction_analysis(comp)
                if not rad.killing_nondegenerate(rc.algebra):
                    raise RegimeError("centroid component not semisimple (internal)")
                if within.contains(comp):
                    comps.append(comp)
            certs.append(f"{len(comps)} simple components by centroid splitting")
        mins = sorted(ab_list + comps, key=lambda s: (s.dim, s.key()))
        soc = ab_soc.add(sum_spaces(comps, L.field, L.dim))
        report = SocleReport(mins, soc, ab_soc, ab_complete, "structured", certs)
        # the socle sum is exact either way; the listing is exhaustive only
        # when the abelian part split completely
        report.provably_exhaustive = ab_complete
        return report

    def l_socle(self, s: Subspace) -> Subspace:
        """Sum of the minimal ideals of L contained in the ideal s."""
        return self.socle(within=s).socle

    def minimal_ideal_inside(self, within: Subspace) -> tuple[Subspace, bool]:
        """One minimal ideal of L inside the nonzero ideal `within`.

        Returns (ideal, exhaustive_regime_flag).
        """
        if within.is_zero:
            raise InputError("no minimal ideal inside the zero ideal")
        L = self.L
        if L.field.is_finite:
            q = L.field.characteristic
            if q ** within.dim <= self.caps.enum_cap:
                mins = adj.minimal_ideals_exhaustive(L, within, self.caps.enum_cap)
                return mins[0], True
            report = self.socle()
            if not _socle_is_provably_complete(report):
                raise CapacityError("enum_cap", q ** within.dim, self.caps.enum_cap)
            for m in report.minimal_ideals:
                if within.contains(m):
                    return m, False
            raise RegimeError("no certified minimal ideal inside the given ideal")
        report = self.socle(within=within)
        if not report.minimal_ideals:
            raise RegimeError("characteristic-0 socle listing could not split the action")
        return report.minimal_ideals[0], False

    def is_minimal_ideal(self, space: Subspace) -> tuple[bool, str]:
        """Certified minimality of a nonzero ideal as an adjoint module."""
        L = self.L
        if space.is_zero:
            raise InputError("zero ideal cannot be minimal")
        if L.field.is_finite:
            q = L.field.characteristic
            if q ** space.dim <= self.caps.enum_cap:
                for pt in space.projective_points():
                    s = adj.spin(L, [pt])
                    if s != space:
                        return False, "witness point spins to a different ideal"
                return True, f"enumerated {q}**{space.dim} vectors"
            rng = self._rng("norton", space.key())
            irr, cert, _ = adj.norton_irreducible(
                L, space, rng, self.caps.enum_cap, attempts=self.caps.spin_seeds
            )
            return irr, cert
        report = self.socle(within=space)
        if report.socle != space:
            return False, "socle inside the ideal is proper"
        ok = len(report.minimal_ideals) == 1 and report.minimal_ideals[0] == space
        return ok, "structured socle listing"

    # -- Frattini ------------------------------------------------------------------

    def frattini_ideal(self) -> Computed:
        return self._memo("phi", self._frattini_ideal)

    def _frattini_ideal(self) -> Computed:
        L = self.L
        if L.dim == 0:
            return Computed(L.zero_space(), "trivial")
        if self.is_nilpotent():
            return Computed(self.derived_algebra(), "fast-path: nilpotent (phi = L^2)")
        n = self.nilradical().value
        if n.is_zero:
            # the Frattini ideal is nilpotent, hence vanishes with N
            return Computed(L.zero_space(), "fast-path: N = 0")
        if L.field.is_finite:
            total = rad.count_all_subspaces(L.field.characteristic, L.dim)
            if total <= self.caps.subspace_cap:
                return Computed(rad.frattini(L, self.caps).ideal, "enumeration")
        if self.hints.frattini is not None:
            space = self._space(self.hints.frattini)
            if not space.is_zero:
                raise HintError("only phi = 0 hints are verifiable from witnesses")
            if not self.hints.frattini_witnesses:
                raise HintError("phi hint needs witness maximal subalgebras")
            meet = L.full_space()
            for vectors in self.hints.frattini_witnesses:
                w = self._space(vectors)
                if w.dim != L.dim - 1 or not L.is_subalgebra(w):
                    raise HintError("phi witness must be a codimension-1 subalgebra")
                meet = meet.meet(w)
            if not L.core(meet).is_zero:
                raise HintError("phi witnesses do not pin the Frattini ideal to 0")
            return Computed(L.zero_space(), "hinted: codim-1 witnesses")
        if L.field.is_finite:
            total = rad.count_all_subspaces(L.field.characteristic, L.dim)
            raise CapacityError("subspace_cap", total, self.caps.subspace_cap)
        raise RegimeError("Frattini ideal out of regime for this algebra")

    def frattini_full(self) -> rad.FrattiniReport:
        return self._memo("frattini_full", lambda: rad.frattini(self.L, self.caps))

    # -- chief series -----------------------------------------------------------------

    def chief_series(self) -> Computed:
        return self._memo("chief", self._chief_series)

    def _chief_series(self) -> Computed:
        """Ascending chief series refined through Z(N), N, N-dagger and N + C."""
        from . import genrad

        L = self.L
        seeds = [L.zero_space()]
        for cand in (self.zn(), self.nilradical().value):
            if not any(cand == s for s in seeds):
                seeds.append(cand)
        try:
            nd = genrad.mcomp(self).n_radical
            if not any(nd == s for s in seeds):
                seeds.append(nd)
        except (CapacityError, RegimeError):
            pass
        dplus = self.nilradical().value.add(self.cent_nilradical())
        if not any(dplus == s for s in seeds):
            seeds.append(dplus)
        if not any(L.full_space() == s for s in seeds):
            seeds.append(L.full_space())
        # keep only a nested chain of ideals
        chain = [L.zero_space()]
        for s in seeds[1:]:
            if s.contains(chain[-1]) and s != chain[-1] and L.is_ideal(s):
                chain.append(s)
        if chain[-1] != L.full_space():
            chain.append(L.full_space())

        factors: list[ChiefFactor] = []
        all_exhaustive = True
        for lower, upper in zip(chain, chain[1:]):
            current = lower
            while current != upper:
                q, qan = (None, self) if current.is_zero else self.quotient_analysis(current)
                target = upper if q is None else q.push_space(upper)
                mbar, exhaustive = qan.minimal_ideal_inside(target)
                all_exhaustive &= exhaustive
                nxt = mbar if q is None else q.pull_space(mbar)
                kind, cert = self._classify_factor(current, nxt)
                factors.append(ChiefFactor(current, nxt, kind, cert))
                current = nxt
        out = Computed(factors, "exhaustive" if all_exhaustive else "mixed")
        return out

    def _classify_factor(self, lower: Subspace, upper: Subspace) -> tuple[str, str]:
        """Type a chief factor: abelian, simple or irregular."""
        if lower.is_zero:
            rest, ran = self.restriction_analysis(upper)
            factor_an = ran
        else:
            q, qan = self.quotient_analysis(lower)
            ubar = q.push_space(upper)
            _, factor_an = qan.restriction_analysis(ubar)
        alg = factor_an.L
        sq = alg.product_space(alg.full_space(), alg.full_space())
        if sq.is_zero:
            return "abelian", "square is zero"
        simple, cert = factor_an.is_simple()
        if simple:
            return "simple", cert
        return "irregular", cert

    def is_simple(self) -> tuple[bool, str]:
        return self._memo("simple", self._is_simple)

    def _is_simple(self) -> tuple[bool, str]:
        L = self.L
        if L.dim == 0:
            return False, "zero algebra"
        full = L.full_space()
        if self.derived_algebra() != full:
            return False, "not perfect"
        # cheap reducibility witnesses first
        for i in range(L.dim):
            s = adj.spin(L, [L.basis_vector(i)])
            if s.dim < L.dim:
                return False, f"basis vector {i} generates a proper ideal"
        if L.field.is_finite:
            rng = self._rng("simple")
            irr, cert, _ = adj.norton_irreducible(
                L, full, rng, self.caps.enum_cap, attempts=self.caps.spin_seeds
            )
            return irr, cert
        if not rad.killing_nondegenerate(L):
            return False, "Killing form degenerate"
        comps = adj.split_by_centroid_char0(L)
        if len(comps) == 1:
            return True, "Killing nondegenerate and centroid field"
        return False, f"{len(comps)} centroid components"

    # -- ideal sampling for the theorem suite ---------------------------------------

    def sample_ideals(self, extra_random: int = 3) -> list[Subspace]:
        def build():
            L = self.L
            out = []

            def push(s):
                if s is not None and not any(s == t for t in out):
                    out.append(s)

            push(L.zero_space())
            push(self.centre())
            push(self.zn())
            push(self.nilradical().value)
            try:
                push(self.radical().value)
            except (CapacityError, RegimeError):
                pass
            push(self.derived_algebra())
            rng = self._rng("sample-ideals")
            for _ in range(extra_random):
                v = as_vector(L.field, [L.field.random(rng) for _ in range(L.dim)])
                push(adj.spin(L, [v]))
            push(L.full_space())
            return out

        return self._memo("samples", build)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _socle_is_provably_complete(report: SocleReport) -> bool:
    return report.complete or getattr(report, "provably_exhaustive", False)


def _assemble_socle(L: LieAlgebra, mins: list[Subspace], complete: bool,
                    regime: str, certs: list[str]) -> SocleReport:
    soc = sum_spaces(mins, L.field, L.dim)
    abelian = [m for m in mins if L.product_space(m, m).is_zero]
    ab = sum_spaces(abelian, L.field, L.dim)
    report = SocleReport(sorted(mins, key=lambda s: (s.dim, s.key())), soc, ab, complete, regime, certs)
    report.provably_exhaustive = complete
    return report


def _abelian_socle_char0(L: LieAlgebra, v: Subspace):
    """Minimal L-submodules of a central-in-N subspace v, plus their sum.

    The sum is exact (annihilator of the radical of the enveloping algebra).
    The listing is complete unless a component with non-scalar commutant
    appears; a trivial-action component of dimension at least 2 has
    infinitely many minimal submodules, so a canonical basis decomposition
    is listed and the flag cleared.
    """
    field = L.field
    if v.is_zero:
        return [], L.zero_space(), True
    mod = adj.AdjointModule.of(L, v)
    soc_coords = adj.module_socle_char0(field, mod.act, v.dim)
    amb_basis = np.dot(soc_coords.basis, v.basis)  # socle rows in ambient coords
    soc = Subspace.from_rows(field, L.dim, list(amb_basis))
    if soc_coords.dim == 0:
        return [], soc, True
    piv = list(soc_coords.pivots)
    gens = [np.dot(soc_coords.basis, m)[:, piv] for m in mod.act]
    pieces, complete = _split_semisimple_module_char0(field, gens, soc_coords.dim)
    out = [
        Subspace.from_rows(field, L.dim, list(np.dot(piece.basis, amb_basis)))
        for piece in pieces
    ]
    return out, soc, complete


def _split_semisimple_module_char0(field: Field, gens: list, k: int):
    """Split a completely reducible module into minimal submodules (coords).

    Handles the shapes the corpus produces: trivial-action components,
    one-dimensional pieces, and irreducible pieces with scalar commutant.
    Returns (pieces, complete_flag); an unresolved piece is dropped and the
    flag cleared.
    """
    from fractions import Fraction

    if k == 0:
        return [], True
    full = Subspace.full(field, k)
    nonzero = [g for g in gens if np.any(g)]

    def lines_of(piece: Subspace) -> list[Subspace]:
        return [
            Subspace.from_rows(field, k, [piece.basis[i]]) for i in range(piece.dim)
        ]

    if not nonzero:
        return lines_of(full), k <= 1
    if k == 1:
        return [full], True
    alg = adj.associative_closure(field, nonzero, unital=True)
    center = _matrix_commutant(field, alg, alg)
    isotypics = [full] if len(center) <= 1 else _split_by_idempotents(field, center, k)
    pieces: list[Subspace] = []
    complete = True
    for piece in isotypics:
        if piece.dim == 1:
            pieces.append(piece)
            continue
        piv = list(piece.pivots)
        sub_gens = [np.dot(piece.basis, g)[:, piv] for g in nonzero]
        if not any(np.any(g) for g in sub_gens):
            pieces.extend(lines_of(piece))
            complete = False
            continue
        sub_alg = adj.associative_closure(field, sub_gens, unital=True)
        endo = _matrix_commutant(field, sub_alg, sub_gens, commutant_of_all=True)
        if len(endo) == 1:
            pieces.append(piece)
        else:
            complete = False
    return pieces, complete


def _matrix_commutant(field: Field, algebra_basis: list, gens: list, commutant_of_all: bool = False):
    """Elements of span(algebra_basis) commuting with every generator.

    With commutant_of_all=True the search space is all of End (module
    endomorphisms), not just the image algebra.
    """
    if not algebra_basis:
        return []
    k = algebra_basis[0].shape[0]
    if commutant_of_all:
        basis = []
        for r in range(k):
            for c in range(k):
                m = zeros_matrix(field, k)
                m[r, c] = field.one()
                basis.append(m)
    else:
        basis = algebra_basis
    d = len(basis)
    blocks = []
    for g in gens:
        m = np.empty((k * k, d), dtype=object) if not field.is_finite else np.zeros((k * k, d), dtype=np.int64)
        for c_idx, a in enumerate(basis):
            comm = np.dot(a, g) - np.dot(g, a)
            if field.is_finite:
                comm = comm % field.characteristic
            m[:, c_idx] = comm.reshape(-1)
        blocks.append(m)
    from .linalg import kernel as lin_kernel

    sol = lin_kernel(field, np.concatenate(blocks, axis=0))
    out = []
    for row in sol:
        z = zeros_matrix(field, k)
        for c, a in zip(row, basis):
            if c:
                z = z + c * a
        out.append(z)
    return out


def zeros_matrix(field: Field, k: int):
    from .linalg import zeros as lin_zeros

    return lin_zeros(field, (k, k))


def _split_by_idempotents(field: Field, center: list, k: int) -> list[Subspace]:
    """Isotypic pieces from the primitive idempotents of an etale center."""
    gamma = adj._primitive_element(field, center)
    coeffs = adj.minimal_polynomial(field, gamma)
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x)
    factors = [sympy.Poly(f, x) for f, _ in poly.factor_list()[1]]
    if len(factors) == 1:
        return [Subspace.full(field, k)]
    pieces = []
    for f in factors:
        cof = sympy.div(poly, f, x)[0]
        s, _, g = sympy.gcdex(cof.as_expr(), f.as_expr(), x)
        assert sympy.simplify(g - 1) == 0
        e_expr = sympy.rem(sympy.expand(s * cof.as_expr()), poly.as_expr(), x)
        e_coeffs = adj._sympy_poly_coeffs(field, e_expr, x, len(coeffs))
        e = adj._poly_of_matrix(field, e_coeffs, gamma)
        # row space: {c @ e} for rows c
        from .linalg import rref as lin_rref

        piece = Subspace.from_rows(field, k, lin_rref(field, e.T)[0])
        if not piece.is_zero:
            pieces.append(piece)
    return sorted(pieces, key=lambda s: s.key())


def _convert_hints_to_restriction(h: Hints, rest: Restriction) -> Hints:
    """Re-express hint vectors (parent coords) in restriction coordinates."""
    if h.is_empty():
        return Hints.empty()

    def conv_vectors(vectors):
        if vectors is None:
            return None
        piv = list(rest.space.pivots)
        out = []
        for v in vectors:
            vec = as_vector(rest.parent.field, v)
            if not rest.space.contains_vector(vec):
                raise HintError("sub-hint vector not inside the subalgebra")
            out.append(list(vec[piv]))
        return out

    def conv_list_of_bases(bases):
        if bases is None:
            return None
        return [conv_vectors(b) for b in bases]

    # nested sub-hints are supported one level deep, which the corpus uses
    sub = {}
    return Hints(
        nilradical=conv_vectors(h.nilradical),
        radical=conv_vectors(h.radical),
        minimal_ideals=conv_list_of_bases(h.minimal_ideals),
        frattini=conv_vectors(h.frattini),
        frattini_witnesses=conv_list_of_bases(h.frattini_witnesses),
        sub=sub,
    )
