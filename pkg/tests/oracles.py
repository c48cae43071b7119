"""Brute-force reference computations over GF(p).

Nothing here calls the Gröbner engine or the sparse echelon code: monomials
are enumerated by filtering a full exponent grid, and ranks come from a
dense Gaussian elimination written out below.
"""

from itertools import product


def grid_monomials(n, d):
    """Monomials of multidegree d for the ring with factor dimensions n."""
    if any(x < 0 for x in d):
        return []
    per_block = []
    for ni, di in zip(n, d):
        per_block.append([e for e in product(range(di + 1), repeat=ni + 1) if sum(e) == di])
    return sorted(sum(choice, ()) for choice in product(*per_block))


def dense_rank(rows, p):
    rows = [[x % p for x in r] for r in rows if any(x % p for x in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def free_basis(n, twists, c):
    return [(m, k) for k, t in enumerate(twists) for m in grid_monomials(n, _sub(c, t))]


def map_rows(n, p, target_twists, source_twists, columns, c):
    """Rows (one per source basis element) of a map in degree c.

    ``columns[l]`` is a dict {(mono, row): coef}.
    """
    tbasis = free_basis(n, target_twists, c)
    index = {b: i for i, b in enumerate(tbasis)}
    rows = []
    for u, l in free_basis(n, source_twists, c):
        row = [0] * len(tbasis)
        for (m, k), a in columns[l].items():
            row[index[(_mul(m, u), k)]] = (row[index[(_mul(m, u), k)]] + a) % p
        rows.append(row)
    return rows, len(tbasis)


def image_rank(n, p, target_twists, source_twists, columns, c):
    rows, width = map_rows(n, p, target_twists, source_twists, columns, c)
    if width == 0:
        return 0
    return dense_rank(rows, p)


def module_dim(phi, c):
    """dim_k coker(phi)_c by linear algebra on monomial bases."""
    ring = phi.ring
    tw, sw = phi.target.twists, phi.source.twists
    return len(free_basis(ring.n, tw, c)) - image_rank(ring.n, ring.p, tw, sw, phi.columns, c)


def exact_at(f, g, c):
    """ker(f)_c == im(g)_c, assuming f o g = 0 (f: F1 -> F0, g: F2 -> F1)."""
    ring = f.ring
    n, p = ring.n, ring.p
    dim_src = len(free_basis(n, f.source.twists, c))
    rank_f = image_rank(n, p, f.target.twists, f.source.twists, f.columns, c)
    rank_g = 0
    if g is not None:
        rank_g = image_rank(n, p, g.target.twists, g.source.twists, g.columns, c)
    return dim_src - rank_f == rank_g


def degrees_up_to(lo, bound):
    """All c >= lo (componentwise) with |c| <= bound."""
    r = len(lo)
    spare = bound - sum(lo)
    if spare < 0:
        return []
    out = []
    for extra in product(range(spare + 1), repeat=r):
        if sum(extra) <= spare:
            out.append(_mul(lo, extra))
    return out


def brute_minimal(points):
    pts = set(map(tuple, points))
    return sorted(p for p in pts if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in pts))
