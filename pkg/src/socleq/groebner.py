"""Deterministic Buchberger engine and the cached Ideal type.

Determinism contract: given the same generators in the same order, the same
monomial order and the same field, every run performs the identical sequence
of reductions and returns the identical reduced basis (which is also the
mathematically unique reduced Groebner basis, so generator permutations
change nothing either).

Selection is the normal strategy: pending S-pairs are processed by weighted
degree of the pair lcm, ties broken by generator indices.  The product
criterion and a conservative chain criterion prune pairs; a pair is only ever
skipped against partner pairs that were themselves certified (reduced to
zero, product-skipped, or chain-skipped earlier), which keeps the pruning
acyclic and therefore sound.

An optional plain-degree truncation supports Artinian quotient computations:
with trunc=K the engine computes the reduced basis of the input ideal PLUS
the K-th power of the ideal of all variables.  Every monomial of total degree
K is installed as a basis element up front (a "cover"), so deleting terms of
total degree >= K during reduction is ordinary division by a cover.  S-pairs
between a polynomial and a cover are what propagate low-degree consequences
of high-degree cancellations (the inhomogeneous cascade), so they are real
pairs here; only those whose lcm has total degree >= K + 2 are dropped, which
is sound because such an lcm always admits a third degree-K divisor whose two
sub-lcms divide it strictly, giving a well-founded chain argument.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .errors import BudgetExceededError, InputError, RingMismatchError
from .limits import DEFAULT_LIMITS, Limits
from .ring import (
    Block,
    Monomial,
    MonomialOrder,
    Polynomial,
    RingSpec,
    mono_div,
    mono_divides,
    mono_gcd_is_one,
    mono_lcm,
    mono_mul,
    plain_degree,
)


class _Steps:
    """Mutable reduction-step counter shared across one basis computation."""

    __slots__ = ("left", "total")

    def __init__(self, budget: int):
        self.left = budget
        self.total = budget

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError(
                f"step budget of {self.total} reduction steps exhausted; "
                "raise it via limits/--step-budget if the input is expected to be this hard"
            )


def _poly_to_dict(p: Polynomial) -> dict:
    return dict(p.terms)


def _dict_to_poly(ring: RingSpec, acc: dict) -> Polynomial:
    return ring.from_terms(acc)


class _Elt:
    """A monic basis element in working form."""

    __slots__ = ("lead", "tail", "is_monomial", "rep", "cover")

    def __init__(self, lead: Monomial, tail: tuple, rep, cover: bool = False):
        self.lead = lead
        self.tail = tail  # ((mono, coeff), ...) of the non-lead terms
        self.is_monomial = not tail
        self.rep = rep  # {gen_index: {mono: coeff}} or None
        self.cover = cover  # degree-K monomial installed by a truncated run


def _rep_submul(fld, acc_rep: dict, elt_rep: dict, c, u: Monomial) -> None:
    """acc_rep -= c * x^u * elt_rep."""
    for idx, poly in elt_rep.items():
        tgt = acc_rep.setdefault(idx, {})
        for m, pc in poly.items():
            k = mono_mul(m, u)
            s = fld.sub(tgt.get(k, fld.zero), fld.mul(c, pc))
            if s:
                tgt[k] = s
            else:
                tgt.pop(k, None)


def _rep_scale(fld, rep: dict, c) -> dict:
    return {idx: {m: fld.mul(c, pc) for m, pc in poly.items()} for idx, poly in rep.items()}


class _Engine:
    def __init__(self, ring: RingSpec, order: MonomialOrder, steps: _Steps, trunc: int | None, track: bool):
        self.ring = ring
        self.order = order
        self.weights = ring.weights
        self.keyf = lambda m: order.key(m, ring.weights)
        self.steps = steps
        self.trunc = trunc
        self.track = track
        self.basis: list[_Elt] = []
        self.divs: list[_Elt] = []  # basis minus covers, the divisor scan list
        self.pairs: list = []  # heap of (wdeg(lcm), i, j, lcm)
        self.certified: set = set()

    # -- reduction -------------------------------------------------------------

    def reduce_full(self, acc: dict, rep: dict | None):
        """Fully reduce acc (a {mono: coeff} dict, consumed) modulo the basis."""
        fld = self.ring.field
        keyf, trunc, divs = self.keyf, self.trunc, self.divs
        out = {}
        while acc:
            m = max(acc, key=keyf)
            c = acc.pop(m)
            if trunc is not None and plain_degree(m) >= trunc:
                self.steps.spend()
                continue
            hit = None
            # covers are absent from divs on purpose: they cannot divide a
            # term that survived the trunc check (it has plain degree < K,
            # the cover has exactly K)
            for elt in divs:
                if mono_divides(elt.lead, m):
                    hit = elt
                    break
            if hit is None:
                out[m] = c
                continue
            self.steps.spend()
            u = mono_div(m, hit.lead)
            for tm, tc in hit.tail:
                k = mono_mul(tm, u)
                s = fld.sub(acc.get(k, fld.zero), fld.mul(c, tc))
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
            if rep is not None and hit.rep is not None:
                # invariant: value(acc) + value(out) == sum(rep_i * gen_i);
                # the step removed c * x^u * hit from acc
                _rep_submul(fld, rep, hit.rep, c, u)
        return out, rep

    # -- basis growth -----------------------------------------------------------

    def add_cover(self, mono: Monomial) -> None:
        """Install a degree-K monomial directly, bypassing reduction.

        Covers are added before any generator, so the only existing elements
        are other covers and those pairs are monomial-monomial (S identically
        zero); no pair bookkeeping is needed.
        """
        self.basis.append(_Elt(mono, (), None, cover=True))

    def insert(self, acc: dict, rep: dict | None) -> None:
        acc, rep = self.reduce_full(acc, rep)
        if not acc:
            return
        fld = self.ring.field
        lead = max(acc, key=self.keyf)
        lc = acc.pop(lead)
        inv = fld.inv(lc)
        tail = tuple(
            (m, fld.mul(inv, c))
            for m, c in sorted(acc.items(), key=lambda t: self.keyf(t[0]), reverse=True)
        )
        if rep is not None:
            rep = _rep_scale(fld, rep, inv)
        elt = _Elt(lead, tail, rep)
        t = len(self.basis)
        self.basis.append(elt)
        self.divs.append(elt)
        for s in range(t):
            other = self.basis[s]
            pair = (s, t)
            if other.is_monomial and elt.is_monomial:
                self.certified.add(pair)  # S-polynomial is identically zero
                continue
            if mono_gcd_is_one(other.lead, elt.lead):
                self.certified.add(pair)  # product criterion
                continue
            lcm = mono_lcm(other.lead, elt.lead)
            if other.cover and plain_degree(lcm) >= self.trunc + 2:
                # redundant by the chain argument in the module docstring;
                # deliberately NOT marked certified, so the runtime chain
                # criterion never cites it and stays time-ordered acyclic
                continue
            deg = sum(e * w for e, w in zip(lcm, self.weights))
            heapq.heappush(self.pairs, (deg, s, t, lcm))

    def _pair_ok(self, a: int, b: int) -> bool:
        """Is the (a, b) pair known to reduce to zero?  Monomial-monomial
        pairs qualify unconditionally: their S-polynomial is identically 0."""
        if self.basis[a].is_monomial and self.basis[b].is_monomial:
            return True
        return ((a, b) if a < b else (b, a)) in self.certified

    def chain_skippable(self, i: int, j: int, lcm: Monomial) -> bool:
        for k, elt in enumerate(self.basis):
            if k == i or k == j:
                continue
            if mono_divides(elt.lead, lcm):
                if self._pair_ok(i, k) and self._pair_ok(j, k):
                    return True
        return False

    def run(self) -> None:
        fld = self.ring.field
        while self.pairs:
            _, i, j, lcm = heapq.heappop(self.pairs)
            if (i, j) in self.certified:
                continue
            if self.chain_skippable(i, j, lcm):
                self.certified.add((i, j))
                continue
            gi, gj = self.basis[i], self.basis[j]
            ui = mono_div(lcm, gi.lead)
            uj = mono_div(lcm, gj.lead)
            acc: dict = {}
            for m, c in gi.tail:
                k = mono_mul(m, ui)
                acc[k] = c
            for m, c in gj.tail:
                k = mono_mul(m, uj)
                s = fld.sub(acc.get(k, fld.zero), c)
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
            rep = None
            if self.track:
                rep = {}
                if gi.rep is not None:
                    _rep_submul(fld, rep, gi.rep, fld.neg(fld.one), ui)
                if gj.rep is not None:
                    _rep_submul(fld, rep, gj.rep, fld.one, uj)
            self.certified.add((i, j))
            self.insert(acc, rep)

    # -- reduced basis ----------------------------------------------------------

    def reduced_basis(self):
        """Interreduce to the unique reduced basis (monic, tails irreducible)."""
        keyf = self.keyf
        live = sorted(range(len(self.basis)), key=lambda i: keyf(self.basis[i].lead))
        kept: list[int] = []
        for i in live:
            li = self.basis[i].lead
            if not any(mono_divides(self.basis[k].lead, li) for k in kept):
                kept.append(i)
        fld = self.ring.field
        out = []
        for i in kept:
            elt = self.basis[i]
            others = [self.basis[k] for k in kept if k != i]
            sub = _Engine(self.ring, self.order, self.steps, self.trunc, self.track)
            sub.basis = others
            sub.divs = [e for e in others if not e.cover]
            acc = dict(elt.tail)
            red, rep = sub.reduce_full(acc, elt.rep)
            terms = [(elt.lead, fld.one)]
            terms.extend(sorted(red.items(), key=lambda t: keyf(t[0]), reverse=True))
            out.append((elt.lead, terms, rep))
        out.sort(key=lambda t: keyf(t[0]))
        return out


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    limits: Limits = DEFAULT_LIMITS,
    trunc: int | None = None,
    track: bool = False,
    ring: RingSpec | None = None,
):
    """Reduced Groebner basis of the given generators.

    Returns a list of Polynomials sorted ascending by lead monomial.  With
    track=True each output also carries a cofactor certificate, and the pair
    (basis, certificates) is returned instead.  With trunc=K the result is
    the reduced basis of the ideal generated by gens plus the K-th power of
    the ideal of all variables (gens may then be empty if ring is given).
    """
    gens = [g for g in gens if g]
    if not gens and (trunc is None or ring is None):
        raise InputError("cannot compute a basis for the zero list of generators")
    if track and trunc is not None:
        raise InputError("cofactor tracking is not defined for truncated runs")
    if gens:
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generators from different rings")
    order = order or ring.default_order
    steps = _Steps(limits.step_budget)
    eng = _Engine(ring, order, steps, trunc, track)
    if trunc is not None:
        if trunc < 1:
            raise InputError("truncation degree must be at least 1")
        keyf = eng.keyf
        for mono in sorted(ring.monomials_of_plain_degree(trunc), key=keyf):
            eng.add_cover(mono)
    for idx, g in enumerate(gens):
        rep = {idx: {(0,) * ring.nvars: ring.field.one}} if track else None
        eng.insert(_poly_to_dict(g), rep)
    eng.run()
    rows = eng.reduced_basis()
    basis = [ring.from_terms(terms) for _, terms, _ in rows]
    if track:
        certs = [
            {idx: ring.from_terms(poly) for idx, poly in (rep or {}).items()}
            for _, _, rep in rows
        ]
        return basis, certs
    return basis


def normal_form(
    f: Polynomial,
    basis: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    limits: Limits = DEFAULT_LIMITS,
    trunc: int | None = None,
) -> Polynomial:
    """Remainder of f on full division by the (Groebner) basis."""
    ring = f.ring
    order = order or ring.default_order
    steps = _Steps(limits.step_budget)
    eng = _Engine(ring, order, steps, trunc, False)
    fld = ring.field
    keyf = eng.keyf
    for g in basis:
        if g.ring != ring:
            raise RingMismatchError("basis element from a different ring")
        lead, lc = g.lead(order)
        inv = fld.inv(lc)
        tail = tuple(
            (m, fld.mul(inv, c))
            for m, c in sorted(
                ((m, c) for m, c in g.terms if m != lead),
                key=lambda t: keyf(t[0]),
                reverse=True,
            )
        )
        elt = _Elt(lead, tail, None)
        eng.basis.append(elt)
        eng.divs.append(elt)
    red, _ = eng.reduce_full(_poly_to_dict(f), None)
    return _dict_to_poly(ring, red)


# ---------------------------------------------------------------------------
# the Ideal type


class Ideal:
    """A finitely generated ideal of the ambient ring, with a per-order cache
    of reduced Groebner bases (first writer wins, safe for concurrent readers).
    """

    __slots__ = ("ring", "gens", "_cache")

    def __init__(self, ring: RingSpec, gens: Iterable[Polynomial]):
        seen = set()
        kept = []
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if g and g not in seen:
                seen.add(g)
                kept.append(g)
        self.ring = ring
        self.gens = tuple(kept)
        self._cache: dict = {}

    def __repr__(self):
        inner = ", ".join(repr(g) for g in self.gens[:6])
        more = ", ..." if len(self.gens) > 6 else ""
        return f"Ideal({inner}{more})"

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def groebner_basis(self, order: MonomialOrder | None = None, limits: Limits = DEFAULT_LIMITS) -> tuple:
        order = order or self.ring.default_order
        cached = self._cache.get(order)
        if cached is not None:
            return cached
        if not self.gens:
            basis: tuple = ()
        else:
            basis = tuple(buchberger(self.gens, order, limits))
        self._cache.setdefault(order, basis)
        return self._cache[order]

    def normal_form(self, f: Polynomial, order: MonomialOrder | None = None, limits: Limits = DEFAULT_LIMITS) -> Polynomial:
        basis = self.groebner_basis(order, limits)
        if not basis:
            return f
        return normal_form(f, basis, order or self.ring.default_order, limits)

    def contains(self, f: Polynomial, limits: Limits = DEFAULT_LIMITS) -> bool:
        if not f:
            return True
        return not self.normal_form(f, None, limits)

    def contains_ideal(self, other: "Ideal", limits: Limits = DEFAULT_LIMITS) -> bool:
        return all(self.contains(g, limits) for g in other.gens)

    def is_unit_ideal(self, limits: Limits = DEFAULT_LIMITS) -> bool:
        return self.contains(self.ring.one(), limits)

    def certified_basis(self, order: MonomialOrder | None = None, limits: Limits = DEFAULT_LIMITS):
        """Reduced basis plus cofactor certificates; both directions verified.

        Each basis element is returned with polynomials c_i such that it
        equals sum(c_i * gens[i]), and every generator is checked to reduce
        to zero against the basis.
        """
        order = order or self.ring.default_order
        basis, certs = buchberger(self.gens, order, limits, track=True)
        for b, cert in zip(basis, certs):
            acc = self.ring.zero()
            for idx, cof in cert.items():
                acc = acc + cof * self.gens[idx]
            if acc != b:
                raise AssertionError("cofactor certificate failed to reproduce basis element")
        for g in self.gens:
            if normal_form(g, basis, order, limits):
                raise AssertionError("generator does not reduce to zero against its own basis")
        return tuple(basis), tuple(certs)


def eliminate(ideal: Ideal, keep: Iterable[str], limits: Limits = DEFAULT_LIMITS) -> Ideal:
    """Intersection of the ideal with the subring on the kept variables."""
    ring = ideal.ring
    keep = tuple(keep)
    for name in keep:
        if name not in ring.vars:
            raise InputError(f"unknown variable {name!r}")
    keep_idx = {ring.vars.index(n) for n in keep}
    drop_idx = tuple(i for i in range(ring.nvars) if i not in keep_idx)
    if not drop_idx:
        return Ideal(ring, ideal.groebner_basis(None, limits))
    order = Block(drop_idx)
    basis = ideal.groebner_basis(order, limits)
    kept = [g for g in basis if all(m[i] == 0 for m, _ in g.terms for i in drop_idx)]
    return Ideal(ring, kept)


# ---------------------------------------------------------------------------
# combinatorics on lead-term ideals


def min_lead_monomials(basis: Sequence[Polynomial], order: MonomialOrder | None = None) -> list:
    leads = [g.lead(order)[0] for g in basis if g]
    out = []
    for m in leads:
        if not any(mono_divides(o, m) for o in leads if o != m):
            if m not in out:
                out.append(m)
    return out


def standard_monomials_below(leads: Sequence[Monomial], ring: RingSpec, k: int, cap: int | None = None) -> list:
    """Monomials of total degree < k outside the monomial ideal of the leads."""
    out = []
    for d in range(k):
        for m in ring.monomials_of_plain_degree(d):
            if not any(mono_divides(l, m) for l in leads):
                out.append(m)
                if cap is not None and len(out) > cap:
                    raise BudgetExceededError(f"standard monomial count exceeded cap {cap}")
    return out


def lead_ideal_dimension(basis: Sequence[Polynomial], ring: RingSpec, order: MonomialOrder | None = None) -> int:
    """Combinatorial (Krull) dimension of the quotient by the lead-term ideal.

    dim = size of the largest variable subset V such that no lead monomial is
    supported inside V.  With a Groebner basis as input this is the dimension
    of the quotient by the ideal itself.
    """
    leads = min_lead_monomials(basis, order)
    if any(plain_degree(m) == 0 for m in leads):
        return -1  # unit ideal
    n = ring.nvars
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]
    best = 0
    for size in range(n, 0, -1):
        import itertools as _it

        for combo in _it.combinations(range(n), size):
            cs = set(combo)
            if all(not s <= cs for s in supports):
                return size
    return best
