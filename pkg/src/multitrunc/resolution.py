"""Minimal free resolutions, Betti tables and linearity of complexes."""

from __future__ import annotations

import math
import warnings
from collections import Counter
from dataclasses import dataclass

from .groebner import (
    FreeModule,
    GradedHom,
    minimal_generators,
    syzygies,
    vec_axpy,
)
from .ring import Ring, deg_add, inverse, mono_div, total


class NotAComplexError(ValueError):
    pass


@dataclass(frozen=True)
class ChainComplexData:
    """F_0 <- F_1 <- ... <- F_k with ``maps[i]: frees[i+1] -> frees[i]``.

    The zero complex has no free modules at all.
    """

    ring: Ring
    frees: tuple
    maps: tuple

    def __post_init__(self):
        object.__setattr__(self, "frees", tuple(self.frees))
        object.__setattr__(self, "maps", tuple(self.maps))
        if self.frees and len(self.maps) != len(self.frees) - 1:
            raise ValueError("need one map between consecutive free modules")
        for i, f in enumerate(self.maps):
            if f.target != self.frees[i] or f.source != self.frees[i + 1]:
                raise ValueError("map %d does not match the free modules" % (i + 1))

    @classmethod
    def from_maps(cls, maps) -> ChainComplexData:
        maps = list(maps)
        if not maps:
            raise ValueError("need at least one map; use zero() for the empty complex")
        return cls(maps[0].ring, [maps[0].target] + [f.source for f in maps], maps)

    @classmethod
    def zero(cls, ring: Ring) -> ChainComplexData:
        return cls(ring, (), ())

    @property
    def length(self) -> int:
        return max(len(self.frees) - 1, 0)

    def ranks(self) -> list[int]:
        return [F.rank for F in self.frees]

    def twists(self, i: int):
        return self.frees[i].twists if i < len(self.frees) else ()

    def is_zero(self) -> bool:
        return all(F.rank == 0 for F in self.frees)

    def is_minimal(self) -> bool:
        return not any(f.has_unit_entry() for f in self.maps)

    def check_complex(self):
        for i in range(len(self.maps) - 1):
            if not self.maps[i].compose(self.maps[i + 1]).is_zero():
                raise NotAComplexError("d_%d o d_%d != 0" % (i + 1, i + 2))

    def shift(self, c) -> ChainComplexData:
        """Twist every free module by c."""
        frees = [F.shift(c) for F in self.frees]
        maps = [GradedHom(frees[i], frees[i + 1], f.columns) for i, f in enumerate(self.maps)]
        return ChainComplexData(self.ring, frees, maps)

    def __str__(self):
        if not self.frees:
            return "0"
        return " <-- ".join("S^%d" % r for r in self.ranks())


def _unit_entry(f: GradedHom):
    one = f.ring.one()
    for l, col in enumerate(f.columns):
        for (m, k), c in col.items():
            if m == one:
                return k, l, c
    return None


def _drop_positions(v: dict, pos: int) -> dict:
    return {(m, k - (k > pos)): c for (m, k), c in v.items() if k != pos}


def _cancel(frees, maps, i, k, l, c, p):
    """Cancel the unit entry c at (row k, column l) of maps[i] in place."""
    f = maps[i]
    pivot = f.columns[l]
    cinv = inverse(c, p)
    new_cols = []
    for l2, col in enumerate(f.columns):
        if l2 == l:
            continue
        col = dict(col)
        row_entry = [(m, a) for (m, kk), a in col.items() if kk == k]
        for m, a in row_entry:
            vec_axpy(col, (p - a) * cinv % p, m, pivot, p)
        new_cols.append(_drop_positions(col, k))
    tgt = FreeModule(f.ring, frees[i].twists[:k] + frees[i].twists[k + 1:])
    src = FreeModule(f.ring, frees[i + 1].twists[:l] + frees[i + 1].twists[l + 1:])
    frees[i], frees[i + 1] = tgt, src
    maps[i] = GradedHom(tgt, src, new_cols)
    if i > 0:
        g = maps[i - 1]
        cols = [g.columns[j] for j in range(len(g.columns)) if j != k]
        maps[i - 1] = GradedHom(frees[i - 1], tgt, cols)
    if i + 1 < len(maps):
        h = maps[i + 1]
        maps[i + 1] = GradedHom(src, frees[i + 2], [_drop_positions(col, l) for col in h.columns])


def minimalize(c: ChainComplexData) -> ChainComplexData:
    """Cancel unit entries pairwise until no differential has one.

    Trailing zero free modules are dropped, so a complex that cancels
    completely becomes the zero complex.
    """
    if not c.frees:
        return c
    c.check_complex()
    p = c.ring.p
    frees = list(c.frees)
    maps = list(c.maps)
    i = 0
    while i < len(maps):
        hit = _unit_entry(maps[i])
        if hit is None:
            i += 1
            continue
        _cancel(frees, maps, i, *hit, p)
        i = max(i - 1, 0)
    while frees and frees[-1].rank == 0:
        frees.pop()
        if maps:
            maps.pop()
    if not frees:
        return ChainComplexData.zero(c.ring)
    return ChainComplexData(c.ring, frees, maps)


def minimal_presentation(phi: GradedHom) -> GradedHom:
    """Same cokernel, no redundant generators and minimal relations."""
    c = minimalize(ChainComplexData.from_maps([phi]))
    if not c.frees:
        return GradedHom(FreeModule(phi.ring, ()), FreeModule(phi.ring, ()), [])
    if len(c.frees) == 1:
        return GradedHom(c.frees[0], FreeModule(phi.ring, ()), [])
    f = c.maps[0]
    cols = minimal_generators(f.target, f.columns)
    src = FreeModule(phi.ring, tuple(f.target.degree(v) for v in cols))
    return GradedHom(f.target, src, cols)


def free_resolution(presentation: GradedHom) -> ChainComplexData:
    """Minimal free resolution of coker(presentation), computed to full length."""
    ring = presentation.ring
    phi = minimal_presentation(presentation)
    if phi.target.rank == 0:
        return ChainComplexData.zero(ring)
    if phi.source.rank == 0:
        return ChainComplexData(ring, [phi.target], [])
    maps = [phi]
    cur = phi
    while True:
        g = syzygies(cur)
        if g.source.rank == 0:
            break
        if g.has_unit_entry():
            # syzygies() returns minimal generators, so this cannot happen
            raise AssertionError("non-minimal syzygy step")
        maps.append(g)
        cur = g
        if len(maps) > ring.nvars:
            raise AssertionError("resolution longer than the number of variables")
    return ChainComplexData.from_maps(maps)


# --- Betti tables -------------------------------------------------------

class BettiTable(dict):
    """{(homological index, multidegree): rank}."""

    def indices(self) -> list[int]:
        return sorted({i for i, _ in self})

    def degrees(self, i: int) -> list:
        return sorted((b for j, b in self if j == i), reverse=True)

    def ranks(self) -> list[int]:
        if not self:
            return []
        top = max(i for i, _ in self)
        return [sum(v for (j, _), v in self.items() if j == i) for i in range(top + 1)]

    def render(self) -> str:
        return render_betti(self)


def betti(c: ChainComplexData) -> BettiTable:
    """Twist multiplicities per homological index.

    On a non-minimal complex the counts are only upper bounds for the Betti
    numbers; a warning is issued.
    """
    if not c.is_minimal():
        warnings.warn("Betti numbers of a non-minimal complex are only upper bounds")
    table = BettiTable()
    for i, F in enumerate(c.frees):
        for t, k in Counter(F.twists).items():
            table[(i, t)] = k
    return table


def support_of_tor(c: ChainComplexData) -> list[list[tuple[int, ...]]]:
    """Distinct twists of each F_i, in decreasing lexicographic order."""
    return [sorted(set(F.twists), reverse=True) for F in c.frees]


def is_linear_complex(c: ChainComplexData, strict: bool = True) -> bool:
    """Linearity: F_0 generated in one degree d, F_i twists of total degree |d| + i.

    With ``strict=False`` F_0 only needs a single total degree.
    """
    nonzero = [i for i, F in enumerate(c.frees) if F.rank]
    if not nonzero:
        return True
    if not c.frees[0].rank:
        return False
    base = c.frees[0].twists
    if strict and len(set(base)) != 1:
        return False
    t0 = total(base[0])
    if any(total(t) != t0 for t in base):
        return False
    return all(total(t) == t0 + i for i, F in enumerate(c.frees) for t in F.twists)


def total_regularity(b: BettiTable):
    """max(|d| - i) over the table; -inf for the zero module."""
    if not b:
        return -math.inf
    return max(total(d) - i for i, d in b)


def partial_regularities(b: BettiTable, r: int | None = None):
    """Coordinatewise regularity: entry k is max(d_k - i) over the table."""
    if not b:
        if r is None:
            raise ValueError("zero module: pass r to get the sentinel vector")
        return (-math.inf,) * r
    r = len(next(iter(b))[1])
    return tuple(max(d[k] - i for i, d in b) for k in range(r))


def _tag(d) -> str:
    letters = "abcdefghijklmnopqrstuvwxyz"
    out = ""
    for k, e in enumerate(d):
        if e == 1:
            out += letters[k]
        elif e:
            out += "%s^%d" % (letters[k], e)
    return out


def render_betti(b: BettiTable) -> str:
    """Human table: rows are slopes |d| - i, columns homological indices.

    A cell lists the twists of that slope as count-prefixed monomials in
    letters a, b, c, ... (one letter per grading component), so 2ab means
    two copies of S(-(1,1)); the degree 0 is written 1.
    """
    if not b:
        return "0"
    cols = range(max(i for i, _ in b) + 1)
    slopes = sorted({total(d) - i for i, d in b})
    cells = {}
    for (i, d), k in b.items():
        cells.setdefault((total(d) - i, i), []).append((d, k))
    grid = [[""] + [str(i) for i in cols]]
    for s in slopes:
        row = ["%d:" % s]
        for i in cols:
            entries = sorted(cells.get((s, i), []), reverse=True)
            if not entries:
                row.append(".")
                continue
            parts = []
            for d, k in entries:
                tag = _tag(d) or "1"
                if k == 1:
                    parts.append(tag)
                elif tag == "1":
                    parts.append(str(k))
                else:
                    parts.append("%d%s" % (k, tag))
            row.append("+".join(parts))
        grid.append(row)
    widths = [max(len(r[j]) for r in grid) for j in range(len(grid[0]))]
    lines = []
    for r in grid:
        lines.append(" ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines)
