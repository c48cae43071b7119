"""Upward-closed regions of Z^r, the frontier search, and Betti-number bounds."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import product

from .resolution import partial_regularities, total_regularity
from .ring import deg_add, deg_leq, deg_max, deg_min, deg_sub, total, unit
from .truncation import PresentedModule, has_linear_truncation


@dataclass(frozen=True)
class Region:
    """The union of the orthants g + N^r over an antichain of generators.

    ``gens is None`` stands for all of Z^r (the empty intersection).
    """

    r: int
    gens: tuple | None = ()

    def __post_init__(self):
        if self.gens is not None:
            gens = tuple(tuple(g) for g in self.gens)
            if any(len(g) != self.r for g in gens):
                raise ValueError("generator of wrong length in region of rank %d" % self.r)
            object.__setattr__(self, "gens", _antichain(gens))

    @classmethod
    def everything(cls, r: int) -> Region:
        return cls(r, None)

    @property
    def is_everything(self) -> bool:
        return self.gens is None

    def __contains__(self, d) -> bool:
        if self.gens is None:
            return True
        d = tuple(d)
        return any(deg_leq(g, d) for g in self.gens)

    def __iter__(self):
        return iter(self.gens or ())

    def __len__(self):
        return len(self.gens or ())

    def is_antichain(self) -> bool:
        gs = self.gens or ()
        return not any(a != b and deg_leq(a, b) for a in gs for b in gs)

    def to_json(self) -> str:
        """JSON array of integer arrays in lexicographic order; null for Z^r."""
        if self.gens is None:
            return "null"
        return json.dumps([list(g) for g in self.gens], separators=(",", ":"))

    def to_list(self):
        return None if self.gens is None else [list(g) for g in self.gens]


def _antichain(ds) -> tuple:
    uniq = sorted(set(ds))
    mins = [d for d in uniq if not any(e != d and deg_leq(e, d) for e in uniq)]
    return tuple(mins)


def find_mins(ds, r: int | None = None) -> Region:
    """Minimal elements of a list of multidegrees, as a region."""
    ds = [tuple(d) for d in ds]
    if r is None:
        r = len(ds[0]) if ds else 0
    return Region(r, ds)


def region_intersect(a: Region, b: Region) -> Region:
    if a.r != b.r:
        raise ValueError("regions in Z^%d and Z^%d" % (a.r, b.r))
    if a.is_everything:
        return b
    if b.is_everything:
        return a
    return Region(a.r, [deg_max(u, v) for u in a.gens for v in b.gens])


@dataclass(frozen=True)
class DegreeBox:
    lo: tuple
    hi: tuple

    def __post_init__(self):
        lo, hi = tuple(self.lo), tuple(self.hi)
        if len(lo) != len(hi):
            raise ValueError("box corners of different length")
        if not deg_leq(lo, hi):
            raise ValueError("empty box: %r is not <= %r" % (lo, hi))
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def r(self) -> int:
        return len(self.lo)

    def __contains__(self, d) -> bool:
        return deg_leq(self.lo, d) and deg_leq(d, self.hi)

    def __len__(self):
        out = 1
        for a, b in zip(self.lo, self.hi):
            out *= b - a + 1
        return out

    def points(self):
        return product(*[range(a, b + 1) for a, b in zip(self.lo, self.hi)])


def find_region(box: DegreeBox, M, f, seed_inside=(), seed_frontier=None) -> Region:
    """Minimal degrees of the box at which f(M, d) holds.

    Frontier search: a FIFO queue starts at ``seed_frontier`` (default
    ``[box.lo]``); a dequeued point already above an accepted one is
    skipped, an accepted point is recorded, and a rejected point enqueues its
    upward neighbours inside the box.  ``seed_inside`` points are taken as
    accepted without evaluation.  f must be monotone on the box; f is called
    at most once per point.
    """
    r = box.r
    accepted = [tuple(d) for d in seed_inside]
    frontier = [box.lo] if seed_frontier is None else [tuple(d) for d in seed_frontier]
    for d in accepted + frontier:
        if d not in box:
            raise ValueError("seed %r lies outside the box" % (d,))
    queue = deque()
    seen = set()
    for d in frontier:
        if d not in seen:
            seen.add(d)
            queue.append(d)
    while queue:
        d = queue.popleft()
        if any(deg_leq(a, d) for a in accepted):
            continue
        if f(M, d):
            accepted.append(d)
            continue
        for i in range(r):
            nxt = deg_add(d, unit(r, i))
            if deg_leq(nxt, box.hi) and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return Region(r, accepted)


def default_box(M: PresentedModule) -> DegreeBox:
    """lo = componentwise min of the generator degrees, hi = (reg+1, ..., reg+1)."""
    twists = M.generator_twists
    lo = twists[0]
    for t in twists[1:]:
        lo = deg_min(lo, t)
    reg = total_regularity(M.betti())
    hi = tuple(max(reg + 1, x) for x in lo)
    return DegreeBox(lo, hi)


def linear_truncations(M: PresentedModule, box: DegreeBox | None = None,
                       method: str = "koszul") -> Region:
    """Minimal elements, within the box, of the linear truncation region.

    Points whose true minimal elements lie outside the box are reported
    relative to the box.
    """
    if M.is_zero():
        return Region(M.ring.r, ())
    if box is None:
        box = default_box(M)
    return find_region(box, M, lambda N, d: has_linear_truncation(N, d, method=method))


def compositions(s: int, r: int):
    """All lam in N^r with sum s, in colex order."""
    if s < 0:
        return []
    if r == 1:
        return [(s,)]
    out = []
    for last in range(s + 1):
        for head in compositions(s - last, r - 1):
            out.append(head + (last,))
    return out


def _bound(M: PresentedModule, offset: int, shift) -> Region:
    r = M.ring.r
    result = Region.everything(r)
    for (i, b) in sorted(M.betti()):
        if i - offset < 0:
            continue
        base = deg_sub(b, shift)
        piece = Region(r, [deg_sub(base, lam) for lam in compositions(i - offset, r)])
        result = region_intersect(result, piece)
    return result


def linear_truncations_bound(M: PresentedModule) -> Region:
    """Intersection over Tor_i(M)_b != 0 of the union of b - lam + N^r, |lam| = i."""
    return _bound(M, 0, (0,) * M.ring.r)


def regularity_bound(M: PresentedModule) -> Region:
    """Intersection over Tor_i(M)_b != 0, i >= 1, of b - 1 - lam + N^r, |lam| = i - 1.

    With no Betti numbers in positive homological degree the result is all
    of Z^r.
    """
    return _bound(M, 1, (1,) * M.ring.r)


def bigraded_sufficiency(M: PresentedModule, d) -> bool:
    """d >= partial regularities and |d| >= regularity (sufficient for r = 2)."""
    if M.ring.r != 2:
        raise ValueError("only defined for bigraded rings")
    d = tuple(d)
    b = M.betti()
    return deg_leq(partial_regularities(b, 2), d) and total(d) >= total_regularity(b)
