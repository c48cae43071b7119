"""Graded pieces of a presented module and Koszul homology in one degree.

For M = coker(phi) with a Gröbner basis of im(phi), the piece M_b has the
standard monomial vectors of degree b as a basis.  Multiplication by a
variable is read off a per-degree normal form table.  Koszul homology of the
truncation M_{>=d} in a single multidegree then gives dim Tor_m(M_{>=d}, k)_b
by sparse linear algebra over GF(p).
"""

from __future__ import annotations

import threading
from itertools import combinations

from .groebner import ModuleGB, term_key
from .ring import deg_add, deg_leq, deg_sub, inverse, mono_divides, mono_div, mono_mul, monomials_of_multidegree


class Echelon:
    """Incremental row echelon form of sparse vectors {index: coef} over GF(p)."""

    def __init__(self, p: int):
        self.p = p
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, v: dict) -> bool:
        """Insert v; True when it was independent of the vectors seen so far."""
        p = self.p
        v = {k: c % p for k, c in v.items() if c % p}
        pivots = self.pivots
        while v:
            lead = min(v)
            row = pivots.get(lead)
            if row is None:
                inv = inverse(v[lead], p)
                pivots[lead] = {k: c * inv % p for k, c in v.items()}
                return True
            c = v[lead]
            for k, a in row.items():
                x = (v.get(k, 0) - c * a) % p
                if x:
                    v[k] = x
                else:
                    del v[k]
        return False


def sparse_rank(columns, p: int) -> int:
    e = Echelon(p)
    for col in columns:
        e.add(col)
    return e.rank


class GradedPieces:
    """Bases of the graded pieces M_b and multiplication by variables."""

    def __init__(self, gb: ModuleGB):
        self.gb = gb
        self.ambient = gb.ambient
        self.ring = gb.ambient.ring
        self._leads: dict[int, list] = {}
        for g in gb.elements:
            lead = max(g, key=term_key)
            self._leads.setdefault(lead[1], []).append((lead[0], g))
        self._lock = threading.Lock()
        self._tables: dict = {}

    def _reducer(self, mono, pos):
        for lead, g in self._leads.get(pos, ()):
            if mono_divides(lead, mono):
                return lead, g
        return None

    def _table(self, b):
        b = tuple(b)
        with self._lock:
            hit = self._tables.get(b)
        if hit is not None:
            return hit
        ring = self.ring
        p = ring.p
        terms = []
        for k, g in enumerate(self.ambient.twists):
            for mono in monomials_of_multidegree(ring, deg_sub(b, g)):
                terms.append((mono, k))
        terms.sort(key=term_key)
        basis = []
        index = {}
        nf = {}
        for w in terms:
            red = self._reducer(*w)
            if red is None:
                index[w] = len(basis)
                basis.append(w)
                nf[w] = {index[w]: 1}
                continue
            lead, g = red
            t = mono_div(w[0], lead)
            out = {}
            for (m, pos), c in g.items():
                if m == lead and pos == w[1]:
                    continue
                # g is monic, so w = -t * tail(g) modulo the submodule
                for idx, a in nf[(mono_mul(m, t), pos)].items():
                    x = (out.get(idx, 0) - c * a) % p
                    if x:
                        out[idx] = x
                    else:
                        del out[idx]
            nf[w] = out
        entry = (basis, index, nf)
        with self._lock:
            self._tables.setdefault(b, entry)
        return entry

    def basis(self, b) -> list:
        return self._table(b)[0]

    def dim(self, b) -> int:
        return len(self._table(b)[0])

    def normal_form(self, term) -> dict:
        """Coordinates of a monomial vector in the standard basis of its degree."""
        b = self.ambient.term_degree(term)
        return self._table(b)[2][term]

    def times_variable(self, b, var: int) -> list[dict]:
        """Matrix of x_var: M_b -> M_{b+e}, one sparse column per basis element."""
        ring = self.ring
        e = [0] * ring.nvars
        e[var] = 1
        e = tuple(e)
        target = deg_add(b, ring.mono_degree(e))
        nf = self._table(target)[2]
        return [nf[(mono_mul(m, e), k)] for m, k in self.basis(b)]


def koszul_tor_dim(pieces: GradedPieces, c, m: int, lower=None) -> int:
    """dim Tor_m(N, k)_c where N = M_{>=lower} (N = M when lower is None).

    Uses the Koszul complex on all variables:
    H_m of  (+)_{|s|=m+1} N_{c-deg s} -> (+)_{|s|=m} N_{c-deg s} -> (+)_{|s|=m-1} ...
    """
    ring = pieces.ring
    nv = ring.nvars
    if m < 0 or m > nv:
        return 0
    c = tuple(c)
    var_deg = ring.degrees()

    def piece_degree(sigma):
        b = c
        for v in sigma:
            b = deg_sub(b, var_deg[v])
        return b

    def blocks(k):
        out = []
        offset = 0
        for sigma in combinations(range(nv), k):
            b = piece_degree(sigma)
            if lower is not None and not deg_leq(lower, b):
                continue
            dim = pieces.dim(b)
            if dim:
                out.append((sigma, b, offset, dim))
                offset += dim
        return out, offset

    def differential_rank(k):
        # rank of d_k : K_k -> K_{k-1}
        if k <= 0 or k > nv:
            return 0
        src, _ = blocks(k)
        if not src:
            return 0
        dst, _ = blocks(k - 1)
        where = {sigma: off for sigma, _, off, _ in dst}
        ech = Echelon(ring.p)
        for sigma, b, _, dim in src:
            parts = []
            for j, v in enumerate(sigma):
                face = sigma[:j] + sigma[j + 1:]
                off = where.get(face)
                if off is None:
                    continue
                sign = -1 if j % 2 else 1
                parts.append((sign, off, pieces.times_variable(b, v)))
            for col in range(dim):
                vec = {}
                for sign, off, mat in parts:
                    for idx, a in mat[col].items():
                        vec[off + idx] = sign * a
                if vec:
                    ech.add(vec)
        return ech.rank

    _, dim_m = blocks(m)
    if dim_m == 0:
        return 0
    return dim_m - differential_rank(m) - differential_rank(m + 1)
