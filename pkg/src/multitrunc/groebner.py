"""Gröbner bases and syzygies for submodules of graded free modules.

A free module F = (+) S(-a_k) is described by its twists a_k.  Elements of F
("vectors") are dicts ``{(monomial, position): coefficient}``.  The module
order is term-over-position: monomials are compared in grevlex first and
ties go to the lower position index.

Syzygies come from the same Buchberger loop run with histories: every basis
element remembers how it was built from the inputs, and each S-pair that
reduces to zero contributes its history as a syzygy (Schreyer).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .ring import (
    Polynomial,
    Ring,
    deg_add,
    deg_sub,
    inverse,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_key,
    mono_lcm,
    mono_mul,
    total,
)


class InhomogeneousError(ValueError):
    pass


# --- vectors ---------------------------------------------------------------

def term_key(term):
    mono, pos = term
    return (mono_key(mono), -pos)


def vec_lead(v):
    return max(v, key=term_key)


def vec_axpy(v: dict, c: int, mono, w: dict, p: int):
    """v += c * mono * w in place."""
    for (m, pos), a in w.items():
        key = (mono_mul(m, mono), pos)
        x = (v.get(key, 0) + c * a) % p
        if x:
            v[key] = x
        else:
            v.pop(key, None)


def vec_scale(v: dict, c: int, p: int) -> dict:
    c %= p
    if not c:
        return {}
    return {k: a * c % p for k, a in v.items()}


def vec_times_poly(v: dict, f: dict, p: int) -> dict:
    out = {}
    for m, c in f.items():
        vec_axpy(out, c, m, v, p)
    return out


def vec_add(v: dict, w: dict, p: int, c: int = 1) -> dict:
    out = dict(v)
    for k, a in w.items():
        x = (out.get(k, 0) + c * a) % p
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return out


# --- free modules and graded maps -----------------------------------------

@dataclass(frozen=True)
class FreeModule:
    """F = (+)_k S(-twists[k]); generator k has degree twists[k]."""

    ring: Ring
    twists: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        tw = tuple(tuple(int(x) for x in t) for t in self.twists)
        for t in tw:
            if len(t) != self.ring.r:
                raise ValueError("twist %r has wrong length for r=%d" % (t, self.ring.r))
        object.__setattr__(self, "twists", tw)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def term_degree(self, term):
        mono, pos = term
        return deg_add(self.ring.mono_degree(mono), self.twists[pos])

    def degree(self, v: dict):
        """Multidegree of a homogeneous vector (None for zero)."""
        degs = {self.term_degree(t) for t in v}
        if not degs:
            return None
        if len(degs) > 1:
            raise InhomogeneousError("vector is not homogeneous")
        return degs.pop()

    def is_homogeneous(self, v: dict) -> bool:
        return len({self.term_degree(t) for t in v}) <= 1

    def basis_vector(self, k: int) -> dict:
        return {(self.ring.one(), k): 1}

    def shift(self, c) -> FreeModule:
        return FreeModule(self.ring, tuple(deg_add(t, c) for t in self.twists))

    def vector_from_polys(self, polys) -> dict:
        if len(polys) != self.rank:
            raise ValueError("expected %d entries, got %d" % (self.rank, len(polys)))
        v = {}
        for k, f in enumerate(polys):
            for m, c in f.coeffs.items():
                v[(m, k)] = c
        return v

    def polys_from_vector(self, v: dict) -> list[Polynomial]:
        rows = [dict() for _ in range(self.rank)]
        for (m, k), c in v.items():
            rows[k][m] = c
        return [Polynomial(self.ring, r) for r in rows]


class GradedHom:
    """A homogeneous map source -> target, stored as a tuple of column vectors.

    Entry (k, l) is zero or homogeneous of degree source.twists[l] -
    target.twists[k]; this is checked on construction.
    """

    __slots__ = ("target", "source", "columns")

    def __init__(self, target: FreeModule, source: FreeModule, columns):
        if target.ring != source.ring:
            raise ValueError("source and target over different rings")
        columns = tuple(dict(c) for c in columns)
        if len(columns) != source.rank:
            raise ValueError("need %d columns, got %d" % (source.rank, len(columns)))
        for l, col in enumerate(columns):
            for term in col:
                if not 0 <= term[1] < target.rank:
                    raise ValueError("column %d has a term outside the target" % l)
                if target.term_degree(term) != source.twists[l]:
                    k = term[1]
                    raise InhomogeneousError(
                        "entry (%d,%d) is not homogeneous of degree %r"
                        % (k, l, deg_sub(source.twists[l], target.twists[k])))
        self.target = target
        self.source = source
        self.columns = columns

    @classmethod
    def from_matrix(cls, target: FreeModule, source: FreeModule, rows) -> GradedHom:
        """Build from a target-rank x source-rank matrix of Polynomials."""
        rows = [list(r) for r in rows]
        if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
            raise ValueError("matrix shape does not match twists")
        cols = []
        for l in range(source.rank):
            cols.append(target.vector_from_polys([rows[k][l] for k in range(target.rank)]))
        return cls(target, source, cols)

    @property
    def ring(self) -> Ring:
        return self.target.ring

    def entry(self, k: int, l: int) -> Polynomial:
        return Polynomial(self.ring, {m: c for (m, pos), c in self.columns[l].items() if pos == k})

    def matrix(self) -> list[list[Polynomial]]:
        cols = [self.target.polys_from_vector(c) for c in self.columns]
        return [[cols[l][k] for l in range(self.source.rank)] for k in range(self.target.rank)]

    def apply(self, v: dict) -> dict:
        """Image of a vector of the source."""
        p = self.ring.p
        out = {}
        for (m, l), c in v.items():
            vec_axpy(out, c, m, self.columns[l], p)
        return out

    def compose(self, other: GradedHom) -> GradedHom:
        """self o other."""
        if other.target != self.source:
            raise ValueError("maps are not composable")
        return GradedHom(self.target, other.source, [self.apply(c) for c in other.columns])

    def is_zero(self) -> bool:
        return not any(self.columns)

    def has_unit_entry(self) -> bool:
        one = self.ring.one()
        return any(m == one for col in self.columns for (m, _) in col)

    def __eq__(self, other):
        return (isinstance(other, GradedHom) and self.target == other.target
                and self.source == other.source and self.columns == other.columns)

    def __repr__(self):
        return "GradedHom(%d <- %d)" % (self.target.rank, self.source.rank)


# --- Buchberger -----------------------------------------------------------

class Buchberger:
    """Incremental homogeneous Buchberger over a free module.

    With ``track`` set, every element carries a history vector expressing it
    in terms of the inputs, and the histories of zero reductions are
    collected in ``syzygies``.  ``complete(limit)`` processes all pairs of total degree
    at most ``limit``, which is enough to decide membership for vectors of
    that degree.
    """

    def __init__(self, ambient: FreeModule, criteria: bool = True, track: bool = False):
        self.ambient = ambient
        self.ring = ambient.ring
        self.p = ambient.ring.p
        self.criteria = criteria
        self.track = track
        self._twist_total = [total(t) for t in ambient.twists]
        self.elems: list[dict] = []
        self.leads: list[tuple] = []
        self.hists: list[dict | None] = []
        self.by_pos: dict[int, list[int]] = {}
        self._heap: list = []
        self._pending: set = set()
        self._seq = 0
        self.syzygies: list[dict] = []
        self.product_ok = criteria and ambient.rank == 1

    def _degree(self, term) -> int:
        return sum(term[0]) + self._twist_total[term[1]]

    def add(self, v: dict, hist: dict | None = None) -> int:
        """Append a nonzero vector (made monic) to the basis; returns its index."""
        lead = vec_lead(v)
        c = inverse(v[lead], self.p)
        v = vec_scale(v, c, self.p)
        if hist is not None:
            hist = vec_scale(hist, c, self.p)
        idx = len(self.elems)
        mono, pos = lead
        for j in self.by_pos.get(pos, ()):
            lcm = mono_lcm(self.leads[j][0], mono)
            heapq.heappush(self._heap, (self._degree((lcm, pos)), self._seq, j, idx))
            self._seq += 1
            self._pending.add((j, idx))
        self.elems.append(v)
        self.leads.append(lead)
        self.hists.append(hist)
        self.by_pos.setdefault(pos, []).append(idx)
        return idx

    def _reducer(self, term):
        mono, pos = term
        for k in self.by_pos.get(pos, ()):
            if mono_divides(self.leads[k][0], mono):
                return k
        return None

    def top_reduce(self, v: dict, hist: dict | None = None):
        """Reduce until the leading term is irreducible (or v is zero)."""
        p = self.p
        while v:
            lead = vec_lead(v)
            k = self._reducer(lead)
            if k is None:
                break
            c = p - v[lead]
            t = mono_div(lead[0], self.leads[k][0])
            vec_axpy(v, c, t, self.elems[k], p)
            if hist is not None:
                vec_axpy(hist, c, t, self.hists[k], p)
        return v, hist

    def reduce_full(self, v: dict) -> dict:
        p = self.p
        v = dict(v)
        rem = {}
        while v:
            lead = vec_lead(v)
            k = self._reducer(lead)
            if k is None:
                rem[lead] = v.pop(lead)
                continue
            c = p - v[lead]
            t = mono_div(lead[0], self.leads[k][0])
            vec_axpy(v, c, t, self.elems[k], p)
        return rem

    def _chain_skip(self, i: int, j: int, lcm, pos) -> bool:
        pend = self._pending
        for k in self.by_pos[pos]:
            if k == i or k == j:
                continue
            if not mono_divides(self.leads[k][0], lcm):
                continue
            if (min(i, k), max(i, k)) in pend or (min(j, k), max(j, k)) in pend:
                continue
            return True
        return False

    def pending_degree(self):
        return self._heap[0][0] if self._heap else None

    def complete(self, limit: int | None = None):
        p = self.p
        while self._heap and (limit is None or self._heap[0][0] <= limit):
            _, _, i, j = heapq.heappop(self._heap)
            self._pending.discard((i, j))
            mi, pos = self.leads[i]
            mj, _ = self.leads[j]
            lcm = mono_lcm(mi, mj)
            if self.product_ok and mono_coprime(mi, mj):
                if self.track:
                    # Koszul relation g_j*g_i - g_i*g_j = 0, written on the inputs.
                    gi = {m: c for (m, _), c in self.elems[i].items()}
                    gj = {m: c for (m, _), c in self.elems[j].items()}
                    s = vec_times_poly(self.hists[i], gj, p)
                    s = vec_add(s, vec_times_poly(self.hists[j], gi, p), p, -1)
                    if s:
                        self.syzygies.append(s)
                continue
            if self.criteria and self._chain_skip(i, j, lcm, pos):
                continue
            ti = mono_div(lcm, mi)
            tj = mono_div(lcm, mj)
            s = {}
            vec_axpy(s, 1, ti, self.elems[i], p)
            vec_axpy(s, p - 1, tj, self.elems[j], p)
            h = None
            if self.track:
                h = {}
                vec_axpy(h, 1, ti, self.hists[i], p)
                vec_axpy(h, p - 1, tj, self.hists[j], p)
            s, h = self.top_reduce(s, h)
            if s:
                self.add(s, h)
            elif self.track and h:
                self.syzygies.append(h)


@dataclass(frozen=True)
class ModuleGB:
    """A reduced Gröbner basis of a submodule of ``ambient``."""

    ambient: FreeModule
    elements: tuple

    @property
    def leads(self):
        return tuple(vec_lead(g) for g in self.elements)

    def _engine(self) -> Buchberger:
        b = Buchberger(self.ambient)
        for g in self.elements:
            b.elems.append(g)
            b.leads.append(vec_lead(g))
            b.hists.append(None)
            b.by_pos.setdefault(vec_lead(g)[1], []).append(len(b.elems) - 1)
        return b


def _check_homogeneous(ambient: FreeModule, gens):
    for idx, v in enumerate(gens):
        for term in v:
            if not 0 <= term[1] < ambient.rank:
                raise ValueError("generator %d has a term outside the ambient module" % idx)
        if not ambient.is_homogeneous(v):
            raise InhomogeneousError("generator %d is not homogeneous" % idx)


def groebner_basis(ambient: FreeModule, gens, criteria: bool = True) -> ModuleGB:
    """Reduced Gröbner basis of the submodule generated by ``gens``."""
    gens = [dict(v) for v in gens]
    _check_homogeneous(ambient, gens)
    b = Buchberger(ambient, criteria=criteria)
    for v in sorted((v for v in gens if v), key=lambda v: b._degree(next(iter(v)))):
        b.add(v)
    b.complete()
    return _interreduce(ambient, b.elems)


def _interreduce(ambient: FreeModule, elems) -> ModuleGB:
    p = ambient.ring.p
    leads = [vec_lead(g) for g in elems]
    keep = []
    for i, (m, pos) in enumerate(leads):
        redundant = False
        for j, (mj, pj) in enumerate(leads):
            if j == i or pj != pos or not mono_divides(mj, m):
                continue
            # equal leads: keep the first occurrence
            if mj != m or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(elems[i])
    b = Buchberger(ambient)
    for g in keep:
        b.elems.append(g)
        b.leads.append(vec_lead(g))
        b.hists.append(None)
        b.by_pos.setdefault(vec_lead(g)[1], []).append(len(b.elems) - 1)
    reduced = []
    for idx, g in enumerate(keep):
        lead = vec_lead(g)
        tail = dict(g)
        c = tail.pop(lead)
        # tail terms are below the lead, so reducing them never touches g itself
        rem = b.reduce_full(tail)
        out = vec_scale(rem, inverse(c, p), p)
        out[lead] = 1
        reduced.append(out)
    reduced.sort(key=lambda g: term_key(vec_lead(g)))
    return ModuleGB(ambient, tuple(reduced))


def normal_form(v: dict, gb: ModuleGB) -> dict:
    """Remainder of v on division by gb; zero iff v lies in the submodule."""
    for term in v:
        if not 0 <= term[1] < gb.ambient.rank:
            raise ValueError("vector is not in the ambient module of the basis")
    return gb._engine().reduce_full(v)


def s_pair_remainders(gb: ModuleGB) -> list[dict]:
    """Normal forms of all S-pairs with matching lead positions (test hook)."""
    p = gb.ambient.ring.p
    engine = gb._engine()
    out = []
    els = gb.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            (mi, pi), (mj, pj) = engine.leads[i], engine.leads[j]
            if pi != pj:
                continue
            lcm = mono_lcm(mi, mj)
            s = {}
            vec_axpy(s, inverse(els[i][(mi, pi)], p), mono_div(lcm, mi), els[i], p)
            vec_axpy(s, p - inverse(els[j][(mj, pj)], p), mono_div(lcm, mj), els[j], p)
            out.append(engine.reduce_full(s))
    return out


def minimal_generators(ambient: FreeModule, gens) -> list[dict]:
    """A Nakayama-minimal sub-list of ``gens`` generating the same submodule.

    Candidates are visited by ascending total degree (ties by input order)
    and kept when they are not in the span of the vectors kept so far.
    """
    gens = [dict(v) for v in gens]
    _check_homogeneous(ambient, gens)
    b = Buchberger(ambient)
    order = sorted((i for i, v in enumerate(gens) if v),
                   key=lambda i: (b._degree(next(iter(gens[i]))), i))
    kept = []
    for i in order:
        v = gens[i]
        b.complete(b._degree(next(iter(v))))
        r, _ = b.top_reduce(dict(v))
        if r:
            kept.append(v)
            b.add(r)
    return kept


def syzygies(f: GradedHom) -> GradedHom:
    """A map g into f.source whose columns minimally generate ker f."""
    source = f.source
    b = Buchberger(f.target, track=True)
    one = f.ring.one()
    raw = []
    for l, col in enumerate(f.columns):
        if not col:
            raw.append({(one, l): 1})
    order = sorted((l for l, col in enumerate(f.columns) if col),
                   key=lambda l: (total(source.twists[l]), l))
    for l in order:
        b.add(dict(f.columns[l]), {(one, l): 1})
    b.complete()
    raw.extend(b.syzygies)
    kept = minimal_generators(source, raw)
    twists = tuple(source.degree(v) for v in kept)
    return GradedHom(source, FreeModule(f.ring, twists), kept)
