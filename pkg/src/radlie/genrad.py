"""Generalised radicals built over the nilradical.

Four constructions are computed and cross-checked:

* the component radical N + sum of quasi-minimal ideals,
* the socle form: preimage of the L/N-socle of (N + C_L(N))/N,
* the quasi-simple variant N + sum of quasi-simple ideals,
* the Frattini form: preimage of Soc(L/phi(L)).

The component radical is recovered from the socle witnesses (component =
(X meet C)^2 for each witness X), but every component is independently
re-certified as quasi-minimal, so the equality of the two routes remains a
genuine machine-checked statement rather than a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import CapacityError, InputError, RegimeError
from .linalg import Subspace, sum_spaces
from .analysis import Analysis, Computed, _socle_is_provably_complete
from . import radicals as rad
from . import adjoint as adj


@dataclass
class ComponentSet:
    kind: str                    # "MComp" or "SComp"
    components: list
    span: Subspace               # sum of the components
    n_radical: Subspace          # nilradical + span
    regime: str


@dataclass
class StarWitness:
    quotient_minimal: Subspace   # minimal ideal of L/N inside (N+C)/N, pulled back
    kind: str                    # abelian | simple | irregular (abelian cannot occur)


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def centre_of_ideal(an: Analysis, a: Subspace) -> Subspace:
    """Z(a) = a meet C_L(a); an ideal of L."""
    return a.meet(an.L.centraliser(a))


def is_quasi_minimal(an: Analysis, a: Subspace) -> bool:
    """a^2 = a and the image of a in L/Z(a) is a minimal ideal there."""
    if a.is_zero:
        raise InputError("quasi-minimality is undefined for the zero ideal")
    if not an.L.is_ideal(a):
        raise InputError("quasi-minimality expects an ideal")
    if an.L.product_space(a, a) != a:
        return False
    z = centre_of_ideal(an, a)
    if z.is_zero:
        ok, _ = an.is_minimal_ideal(a)
        return ok
    q, qan = an.quotient_analysis(z)
    ok, _ = qan.is_minimal_ideal(q.push_space(a))
    return ok


def is_quasi_simple(an: Analysis, a: Subspace) -> bool:
    """a^2 = a and a/Z(a) is simple as an algebra in its own right."""
    if a.is_zero:
        raise InputError("quasi-simplicity is undefined for the zero ideal")
    if not an.L.is_ideal(a):
        raise InputError("quasi-simplicity expects an ideal")
    if an.L.product_space(a, a) != a:
        return False
    rest, ran = an.restriction_analysis(a)
    z_coords = rest.from_parent(centre_of_ideal(an, a))
    if z_coords.is_zero:
        ok, _ = ran.is_simple()
        return ok
    _, qan = ran.quotient_analysis(z_coords)
    ok, _ = qan.is_simple()
    return ok


# ---------------------------------------------------------------------------
# the socle route
# ---------------------------------------------------------------------------

def n_star(an: Analysis) -> Computed:
    """Preimage in L of the L/N-socle of (N + C_L(N))/N, with witnesses."""
    def build():
        L = an.L
        n = an.nilradical().value
        c = an.cent_nilradical()
        d = n.add(c)
        if d == n:
            return Computed(n, an.nilradical().regime), []
        if n.is_zero:
            rep = an.socle(within=d)
            pull = lambda s: s
        else:
            q, qan = an.quotient_analysis(n)
            rep = qan.socle(within=q.push_space(d))
            pull = q.pull_space
        if not getattr(rep, "provably_exhaustive", rep.complete):
            raise RegimeError(
                "generalised nilradical needs a certified-complete socle of the quotient"
            )
        witnesses = []
        for mbar in rep.minimal_ideals:
            x = pull(mbar)
            kind, _ = an._classify_factor(n, x)
            witnesses.append(StarWitness(x, kind))
        value = n.add(pull(rep.socle))
        return Computed(value, f"socle route ({rep.regime})"), witnesses

    return an._memo("nstar", build)[0]


def n_star_witnesses(an: Analysis) -> list:
    n_star(an)
    return an._cache["nstar"][1]


# ---------------------------------------------------------------------------
# the component route
# ---------------------------------------------------------------------------

def mcomp(an: Analysis) -> ComponentSet:
    """Quasi-minimal components recovered from the socle witnesses.

    Each component is (X meet C_L(N))^2 and is re-certified quasi-minimal
    independently of its construction.
    """
    def build():
        L = an.L
        n = an.nilradical().value
        c = an.cent_nilradical()
        star = n_star(an)
        comps = []
        seen = set()
        for w in n_star_witnesses(an):
            xc = w.quotient_minimal.meet(c)
            p = L.product_space(xc, xc)
            if p.is_zero:
                raise RegimeError("witness produced an abelian component (internal)")
            if p.key() in seen:
                continue
            if not is_quasi_minimal(an, p):
                raise RegimeError("component failed quasi-minimality re-certification")
            seen.add(p.key())
            comps.append(p)
        span = sum_spaces(comps, L.field, L.dim)
        return ComponentSet("MComp", comps, span, n.add(span), star.regime)

    return an._memo("mcomp", build)


def scomp(an: Analysis) -> ComponentSet:
    """Quasi-simple components: the quasi-minimal ones with simple core."""
    def build():
        m = mcomp(an)
        keep = [p for p in m.components if is_quasi_simple(an, p)]
        span = sum_spaces(keep, an.L.field, an.L.dim)
        n = an.nilradical().value
        return ComponentSet("SComp", keep, span, n.add(span), m.regime)

    return an._memo("scomp", build)


def n_dagger(an: Analysis) -> Subspace:
    return mcomp(an).n_radical


def e_dagger(an: Analysis) -> Subspace:
    return mcomp(an).span


def n_hat(an: Analysis) -> Subspace:
    return scomp(an).n_radical


def e_hat(an: Analysis) -> Subspace:
    return scomp(an).span


# ---------------------------------------------------------------------------
# the Frattini route
# ---------------------------------------------------------------------------

def n_tilde(an: Analysis) -> Computed:
    """Preimage in L of Soc(L/phi(L))."""
    def build():
        phi = an.frattini_ideal()
        if phi.value.is_zero:
            rep = an.socle()
            if not _sum_exact(rep):
                raise RegimeError("socle sum not certified exact under this regime")
            return Computed(rep.socle, f"phi=0 ({phi.regime}); socle {rep.regime}")
        q, qan = an.quotient_analysis(phi.value)
        rep = qan.socle()
        if not _sum_exact(rep):
            raise RegimeError("socle sum not certified exact under this regime")
        return Computed(q.pull_space(rep.socle), f"phi {phi.regime}; socle {rep.regime}")

    return an._memo("ntilde", build)


def _sum_exact(rep) -> bool:
    # exhaustive and structured socles have exact sums; hinted ones only
    # when provably exhaustive
    if rep.regime in ("exhaustive", "structured", "trivial"):
        return True
    return getattr(rep, "provably_exhaustive", False)


# ---------------------------------------------------------------------------
# iterated series
# ---------------------------------------------------------------------------

def iterated_series(an: Analysis, kind: str) -> tuple[list, Subspace]:
    """Descending series L >= X_1 >= X_2 ... for X in {n_star, n_tilde}.

    Terms are reported in the coordinates of L; the series ends with its
    first repeated term, which is the fixpoint (idempotence is exactly the
    observed repetition).
    """
    if kind not in ("star", "tilde"):
        raise InputError(f"unknown series kind {kind!r}")

    def build():
        op = n_star if kind == "star" else n_tilde
        terms = [an.L.full_space()]
        current = an
        to_root = lambda s: s
        while True:
            val = op(current).value  # in the coordinates of `current`
            root = to_root(val)
            prev = terms[-1]
            terms.append(root)
            if root == prev or root.is_zero:
                break
            rest, ran = current.restriction_analysis(val)
            prev_to_root = to_root
            to_root = lambda s, r=rest, f=prev_to_root: f(r.to_parent(s))
            current = ran
        return terms, terms[-1]

    return an._memo(("series", kind), build)


# ---------------------------------------------------------------------------
# chief-factor intersection form
# ---------------------------------------------------------------------------

def cent_intersection(an: Analysis) -> tuple[Subspace, bool]:
    """Intersection of A + C_L(A/B) over the computed chief series.

    Returns (intersection, exhaustive_series_flag); the intersection always
    contains the component radical, with equality asserted by the suite on
    exhaustive-regime series.
    """
    def build():
        series = an.chief_series()
        out = an.L.full_space()
        for f in series.value:
            c = adj.factor_centraliser(an.L, f)
            out = out.meet(f.upper.add(c))
        return out, series.regime == "exhaustive"

    return an._memo("cent-intersection", build)


# ---------------------------------------------------------------------------
# characteristic radical of the centraliser (classical cross-check)
# ---------------------------------------------------------------------------

def rc_of_centraliser(an: Analysis) -> Computed:
    """R_c(C_L(N)): largest Der(C)-invariant solvable ideal of C = C_L(N)."""
    def build():
        c = an.cent_nilradical()
        if c.is_zero:
            return Computed(an.L.zero_space(), "trivial")
        rest, ran = an.restriction_analysis(c)
        r = ran.radical()
        value = rad.characteristic_radical(an.L, c, r.value)
        return Computed(value, f"Der-shrink over R ({r.regime})")

    return an._memo("rc", build)
