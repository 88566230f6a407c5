"""Independent cross-check engine built on plain row reduction.

Everything in here recomputes quantities the Groebner path also produces,
using nothing but linear algebra over the coefficient field: a finite
dimensional slice of the ring is spanned by explicit rows and reduced to
echelon form.  No S-polynomials, no monomial orders beyond a fixed total
order used as a tie breaker, no shared code with the basis engine.  The
point is that a bug would have to occur twice, in two unrelated
algorithms, to go unnoticed.

The slice of the polynomial ring below plain degree K is a vector space
with monomial basis.  For generators g_1..g_r the rows

    truncate_K(u * g_i),   u a monomial with deg u < K - mindeg(g_i)

span exactly (g_1..g_r, m^K) intersected with that slice: any element of
the ideal is a sum of terms h*g_i, and the contribution of every monomial
of h with degree >= K - mindeg(g_i) lands entirely in degrees >= K, where
truncation kills it.  Quotient dimensions, memberships and socle ranks
all reduce to ranks of such row families.
"""

from __future__ import annotations

import math

from .errors import BudgetExceededError
from .ring import Polynomial, RingSpec, mono_mul, plain_degree

DEFAULT_DIM_CAP = 20000


def _dim_below(ring: RingSpec, K: int) -> int:
    """Number of monomials of plain degree < K, without enumerating them."""
    n = ring.nvars
    return math.comb(K - 1 + n, n)


def truncate_poly(f: Polynomial, K: int) -> dict:
    """Row form of f mod m^K: {mono: coeff} over degrees < K."""
    return {m: c for m, c in f.terms if plain_degree(m) < K}


class Echelon:
    """Incremental reduced row echelon over an exact field.

    Rows are dicts keyed by hashable labels (monomials here); the pivot of
    a row is its largest label under the supplied key function.  Stored
    rows are monic at their pivot and mutually lead-reduced, which is all
    that span membership needs: a row reduces to the empty dict iff it
    lies in the span.
    """

    def __init__(self, field, keyfn):
        self.field = field
        self.keyfn = keyfn
        self.pivots: dict = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        """Lead-reduce row against the stored rows; returns the residual."""
        fld = self.field
        row = dict(row)
        while row:
            piv = max(row, key=self.keyfn)
            hit = self.pivots.get(piv)
            if hit is None:
                return row
            c = row[piv]
            for m, a in hit.items():
                b = fld.sub(row.get(m, fld.zero), fld.mul(c, a))
                if b:
                    row[m] = b
                else:
                    row.pop(m, None)
        return row

    def add(self, row: dict):
        """Insert a row; returns its pivot label, or None if dependent."""
        fld = self.field
        red = self.reduce(row)
        if not red:
            return None
        piv = max(red, key=self.keyfn)
        inv = fld.inv(red[piv])
        self.pivots[piv] = {m: fld.mul(inv, c) for m, c in red.items()}
        return piv

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def _mono_key(ring: RingSpec):
    order, w = ring.default_order, ring.weights
    return lambda m: order.key(m, w)


def _spanning_rows(gens, K: int):
    """Yield the truncated multiples that span (gens, m^K) below degree K."""
    for g in gens:
        if not g:
            continue
        ring = g.ring
        bound = K - g.min_plain_degree()
        for d in range(max(bound, 0)):
            for u in ring.monomials_of_plain_degree(d):
                row = {}
                for m, c in g.terms:
                    mm = mono_mul(u, m)
                    if plain_degree(mm) < K:
                        row[mm] = c
                if row:
                    yield row


def _echelon_of(ring: RingSpec, gens, K: int) -> Echelon:
    ech = Echelon(ring.field, _mono_key(ring))
    for row in _spanning_rows(gens, K):
        ech.add(row)
    return ech


def oracle_quotient_dim(ring: RingSpec, gens, K: int, cap: int = DEFAULT_DIM_CAP) -> int:
    """dim_k S/(gens + m^K), by counting monomials minus the row rank."""
    total = _dim_below(ring, K)
    if total > cap:
        raise BudgetExceededError(
            f"truncated slice has dimension {total}, above the cap of {cap}"
        )
    return total - _echelon_of(ring, gens, K).rank


def oracle_member(ring: RingSpec, gens, f: Polynomial, K: int,
                  cap: int = DEFAULT_DIM_CAP) -> bool:
    """Is f in (gens) + m^K?  Exact for every K."""
    if _dim_below(ring, K) > cap:
        raise BudgetExceededError(
            f"truncated slice has dimension {_dim_below(ring, K)}, above the cap of {cap}"
        )
    return _echelon_of(ring, gens, K).contains(truncate_poly(f, K))


def graded_member_level(f: Polynomial) -> int:
    """Truncation level at which membership in a weighted homogeneous ideal
    is equivalent to plain membership.

    For H generated in the weights' grading and K > every weighted degree
    occurring in f, suppose f = h + g with h in H and g in m^K.  Each term
    of g has plain degree >= K, hence weighted degree >= K (weights are
    positive integers), so the graded pieces of f in the degrees it
    actually occupies agree with those of h, and each piece of h lies in H
    because H is homogeneous.  Thus f in H + m^K implies f in H.
    """
    ring = f.ring
    top = max((ring.wdeg(m) for m, _ in f.terms), default=0)
    return top + 1


def oracle_member_graded(ring: RingSpec, gens, f: Polynomial,
                         cap: int = DEFAULT_DIM_CAP) -> bool:
    """Membership in a weighted homogeneous ideal, decided at a finite level.

    Every generator must be weighted homogeneous; that makes the ideal
    homogeneous and justifies the finite cutoff from graded_member_level.
    """
    for g in gens:
        if g and g.weighted_degree() is None:
            raise ValueError("oracle_member_graded needs weighted homogeneous generators")
    if not f:
        return True
    return oracle_member(ring, gens, f, graded_member_level(f), cap=cap)


# ---------------------------------------------------------------------------
# truncated algebras


class TruncatedAlgebra:
    """The finite dimensional algebra S/(gens + m^K), as echelon data.

    Carries a monomial basis (the non-pivot monomials below degree K) and
    a normal form map; products of basis classes are formed by multiplying
    representatives, truncating, and reducing.
    """

    def __init__(self, ring: RingSpec, gens, K: int, cap: int = DEFAULT_DIM_CAP):
        total = _dim_below(ring, K)
        if total > cap:
            raise BudgetExceededError(
                f"truncated slice has dimension {total}, above the cap of {cap}"
            )
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        self.K = K
        self.cap = cap
        self.ech = _echelon_of(ring, self.gens, K)
        key = _mono_key(ring)
        self.basis = tuple(
            m for m in ring.monomials_below_plain_degree(K)
            if m not in self.ech.pivots
        )
        self.keyfn = key

    @property
    def dim(self) -> int:
        return len(self.basis)

    def nf(self, f: Polynomial) -> dict:
        """Normal form of f: a row supported on basis monomials only."""
        return self.ech.reduce(truncate_poly(f, self.K))

    def nf_row(self, row: dict) -> dict:
        return self.ech.reduce(row)

    def contains(self, f: Polynomial) -> bool:
        return not self.nf(f)

    def multiply_row(self, row: dict, g: Polynomial) -> dict:
        """Class of (row * g), reduced."""
        fld = self.ring.field
        out: dict = {}
        for m, c in row.items():
            for mg, cg in g.terms:
                mm = mono_mul(m, mg)
                if plain_degree(mm) >= self.K:
                    continue
                b = fld.add(out.get(mm, fld.zero), fld.mul(c, cg))
                if b:
                    out[mm] = b
                else:
                    out.pop(mm, None)
        return self.nf_row(out)

    def subspace_dim(self, extra_gens) -> int:
        """Dimension of the image of (extra_gens) inside this algebra."""
        sub = oracle_quotient_dim(self.ring, tuple(self.gens) + tuple(extra_gens),
                                  self.K, cap=self.cap)
        return self.dim - sub

    def colon_dim(self, j_gens, by_gens) -> int:
        """dim of {v : v * by_gens inside the image of j_gens}, inside here.

        Computed as the kernel dimension of the stacked multiplication maps
        v -> v*b mod (j_gens), over the generators b.  Note this annihilator
        is a statement about the truncated algebra itself; relating it to
        the untruncated ring needs a stabilisation argument on the caller's
        side (see stable_socle_dim).
        """
        fld = self.ring.field
        j_ech = Echelon(fld, self.keyfn)
        for row in _spanning_rows(tuple(j_gens), self.K):
            j_ech.add(self.nf_row(row))
        by = [b for b in by_gens if b]
        keyfn = self.keyfn

        def stacked_key(label):
            return (label[0], keyfn(label[1]))

        maps = Echelon(fld, stacked_key)
        for mu in self.basis:
            stacked: dict = {}
            for i, b in enumerate(by):
                img = j_ech.reduce(self.multiply_row({mu: fld.one}, b))
                for m, c in img.items():
                    stacked[(i, m)] = c
            maps.add(stacked)
        return self.dim - maps.rank

    def socle_dim(self) -> int:
        """Kernel dimension of multiplication by the variables."""
        return self.colon_dim((), self.ring.gens())


def stable_socle_dim(ring: RingSpec, gens, budget: int,
                     cap: int = DEFAULT_DIM_CAP) -> tuple:
    """Socle dimension of S/(gens), certified by dimension stabilisation.

    Runs its own K loop: once dim S/(gens + m^K) equals dim S/(gens + m^{K+1})
    the ideal contains m^K up to the stable part (Nakayama on the finite
    local algebra), so the truncated model at that K *is* S/(gens) and its
    socle is the true one.  Returns (socle_dim, quotient_dim, K).
    """
    prev = None
    for K in range(1, budget + 1):
        alg = TruncatedAlgebra(ring, gens, K, cap=cap)
        if prev is not None and alg.dim == prev[1]:
            return prev[0].socle_dim(), prev[1], K - 1
        prev = (alg, alg.dim)
    raise BudgetExceededError(
        f"quotient dimension did not stabilise within the truncation budget of {budget}"
    )


# ---------------------------------------------------------------------------
# audit hook


class OracleAuditor:
    """Recomputes the certified answers a LocalRing emits, independently.

    Attach an instance as ``local.auditor``; every quotient dimension and
    membership decision the local layer certifies is then re-derived by
    row reduction, with mismatches recorded.  Instances whose truncated
    slice exceeds dim_cap are counted as skipped rather than ground
    through, so audits stay cheap enough to run everywhere.
    """

    def __init__(self, dim_cap: int = 2000):
        self.dim_cap = dim_cap
        self.checked = 0
        self.skipped = 0
        self.mismatches: list = []

    def summary(self) -> dict:
        return {
            "checked": self.checked,
            "skipped": self.skipped,
            "mismatches": len(self.mismatches),
        }

    def __call__(self, event: dict) -> None:
        kind = event.get("kind")
        if kind == "quotient_dim":
            self._audit_quotient_dim(event)
        elif kind == "membership":
            self._audit_membership(event)

    def _audit_quotient_dim(self, event: dict) -> None:
        ring, gens, K = event["ring"], event["gens"], event["K"]
        if _dim_below(ring, K) > self.dim_cap:
            self.skipped += 1
            return
        got = oracle_quotient_dim(ring, gens, K, cap=self.dim_cap)
        self.checked += 1
        if got != event["dim"]:
            self.mismatches.append({**event, "oracle": got})

    def _audit_membership(self, event: dict) -> None:
        ring, gens, f, K = event["ring"], event["gens"], event["f"], event["K"]
        if K is None:
            # graded route: auditable only when the generators are visibly
            # homogeneous, since that is what justifies the finite cutoff
            if any(g and g.weighted_degree() is None for g in gens):
                self.skipped += 1
                return
            K = graded_member_level(f)
        if _dim_below(ring, K) > self.dim_cap:
            self.skipped += 1
            return
        got = oracle_member(ring, gens, f, K, cap=self.dim_cap)
        self.checked += 1
        if got != event["member"]:
            self.mismatches.append({**event, "oracle": got})
