"""Truncations M_{>=d} of presented modules and the linear-truncation test."""

from __future__ import annotations

import threading
from itertools import product

from .groebner import (
    Buchberger,
    FreeModule,
    GradedHom,
    ModuleGB,
    groebner_basis,
    syzygies,
)
from .koszul import GradedPieces, koszul_tor_dim
from .resolution import (
    BettiTable,
    ChainComplexData,
    betti,
    free_resolution,
    is_linear_complex,
    minimal_presentation,
)
from .ring import Ring, deg_add, deg_max, deg_sub, monomials_of_multidegree, total


class PresentedModule:
    """M = coker(presentation).  Derived data is computed lazily and cached."""

    def __init__(self, presentation: GradedHom):
        self.presentation = presentation
        self._lock = threading.Lock()
        self._cache: dict = {}

    @classmethod
    def from_matrix(cls, ring: Ring, target_twists, source_twists, rows) -> PresentedModule:
        target = FreeModule(ring, tuple(map(tuple, target_twists)))
        source = FreeModule(ring, tuple(map(tuple, source_twists)))
        return cls(GradedHom.from_matrix(target, source, rows))

    @classmethod
    def free(cls, ring: Ring, twists) -> PresentedModule:
        target = FreeModule(ring, tuple(map(tuple, twists)))
        return cls(GradedHom(target, FreeModule(ring, ()), []))

    @property
    def ring(self) -> Ring:
        return self.presentation.ring

    @property
    def generator_twists(self):
        return self.presentation.target.twists

    def _cached(self, key, compute):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute()
        with self._lock:
            return self._cache.setdefault(key, value)

    def gb(self) -> ModuleGB:
        """Reduced Gröbner basis of the relations im(presentation)."""
        phi = self.presentation
        return self._cached("gb", lambda: groebner_basis(phi.target, phi.columns))

    def pieces(self) -> GradedPieces:
        return self._cached("pieces", lambda: GradedPieces(self.gb()))

    def resolution(self) -> ChainComplexData:
        return self._cached("res", lambda: free_resolution(self.presentation))

    def betti(self) -> BettiTable:
        return self._cached("betti", lambda: betti(self.resolution()))

    def dim(self, b) -> int:
        """dim_k M_b."""
        return self.pieces().dim(tuple(b))

    def is_zero(self) -> bool:
        return self.minimal_presentation().target.rank == 0

    def minimal_presentation(self) -> GradedHom:
        return self._cached("minpres", lambda: minimal_presentation(self.presentation))

    def __repr__(self):
        return "PresentedModule(coker %r)" % (self.presentation,)


def truncate(d, M: PresentedModule) -> PresentedModule:
    """A minimal presentation of M_{>=d}.

    Generators are the vectors u*e_k with deg u = max(d - g_k, 0); those that
    are redundant modulo the relations of M are discarded first, and the
    relations among the rest are the generator block of the syzygies of
    [kept | presentation].
    """
    d = tuple(d)
    ring = M.ring
    phi = M.presentation
    F = phi.target
    if len(d) != ring.r:
        raise ValueError("degree %r has wrong length" % (d,))
    cand = []
    for k, g in enumerate(F.twists):
        shift = tuple(max(x, 0) for x in deg_sub(d, g))
        for u in monomials_of_multidegree(ring, shift):
            cand.append({(u, k): 1})
    b = Buchberger(F)
    for col in phi.columns:
        if col:
            b.add(col)
    cand.sort(key=lambda v: b._degree(next(iter(v))))
    kept = []
    for v in cand:
        b.complete(b._degree(next(iter(v))))
        r, _ = b.top_reduce(dict(v))
        if r:
            kept.append(v)
            b.add(r)
    if not kept:
        zero = FreeModule(ring, ())
        return PresentedModule(GradedHom(zero, zero, []))
    kept_twists = tuple(F.degree(v) for v in kept)
    joint = GradedHom(F, FreeModule(ring, kept_twists + phi.source.twists),
                      kept + list(phi.columns))
    syz = syzygies(joint)
    nk = len(kept)
    rels = []
    for col in syz.columns:
        rel = {t: c for t, c in col.items() if t[1] < nk}
        if rel:
            rels.append(rel)
    gens = FreeModule(ring, kept_twists)
    rel_module = FreeModule(ring, tuple(gens.degree(v) for v in rels))
    return PresentedModule(minimal_presentation(GradedHom(gens, rel_module, rels)))


def nonlinear_tor_candidates(M: PresentedModule, d) -> list[tuple[int, tuple]]:
    """Every (m, b) where Tor_m(M_{>=d}, k)_b could break linearity.

    Truncation is exact, so a resolution F of M gives an exact complex of the
    truncated free modules (F_i)_{>=d} resolving M_{>=d}.  A summand S(-a) of
    F_i truncates to S_{>=c}(-a) with c = max(d - a, 0), whose Tor lives in
    degrees max(a, d) + lam with 0 <= lam_t <= n_t where c_t > 0 and lam_t = 0
    elsewhere, homological index |lam|.  Tor of M_{>=d} is supported inside
    the union of these, at index i + |lam|; the slope |b| - m of such a
    point equals |max(a, d)| - i, so only Betti entries with that slope above
    |d| can contribute non-linear Tor.
    """
    d = tuple(d)
    n = M.ring.n
    out = set()
    for (i, a) in M.betti():
        base = deg_max(a, d)
        if total(base) - i <= total(d):
            continue
        ranges = [range(n[t] + 1) if d[t] > a[t] else range(1) for t in range(len(d))]
        for lam in product(*ranges):
            out.add((i + sum(lam), deg_add(base, lam)))
    return sorted(out, key=lambda mb: (mb[0], total(mb[1]), mb[1]))


def truncation_is_zero(M: PresentedModule, d) -> bool:
    d = tuple(d)
    return all(M.dim(deg_max(g, d)) == 0 for g in M.generator_twists)


def has_linear_truncation(M: PresentedModule, d, method: str = "koszul") -> bool:
    """True iff M_{>=d} is zero or has a linear resolution generated in degree d.

    ``method="resolution"`` truncates and resolves explicitly.  The default
    ``"koszul"`` instead computes dim Tor_m(M_{>=d}, k)_b by Koszul homology
    at the finitely many (m, b) listed by :func:`nonlinear_tor_candidates`;
    the truncation is linear exactly when all of them vanish.
    """
    d = tuple(d)
    if len(d) != M.ring.r:
        raise ValueError("degree %r has wrong length" % (d,))
    if method == "resolution":
        N = truncate(d, M)
        if N.is_zero():
            return True
        if any(t != d for t in N.minimal_presentation().target.twists):
            return False
        return is_linear_complex(N.resolution())
    if method != "koszul":
        raise ValueError("unknown method %r" % method)
    if truncation_is_zero(M, d):
        return True
    pieces = M.pieces()
    for m, b in nonlinear_tor_candidates(M, d):
        if koszul_tor_dim(pieces, b, m, lower=d):
            return False
    return True


def truncated_betti(M: PresentedModule, d) -> BettiTable:
    """Betti table of M_{>=d} via its explicit minimal resolution."""
    return truncate(d, M).betti()
