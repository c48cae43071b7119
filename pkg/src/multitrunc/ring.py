"""Standard multigraded polynomial rings over a prime field.

The ring is k[x(i,j) | 0 <= i < r, 0 <= j <= n_i] with k = GF(p) and
deg x(i,j) = e_i, the Cox ring of P^{n_0} x ... x P^{n_{r-1}}.  Blocks and
variables are indexed from 0 in all external names; block i here is the
factor P^{n_i}.

Monomials are exponent tuples over the flat variable list (blocks
concatenated).  Multidegrees are integer tuples of length r.  The single
global monomial order is graded reverse lexicographic on the flat list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb, prod

DEFAULT_PRIME = 32003
# Exponents are bounded so that monomial keys stay small; inputs above the cap
# are rejected rather than silently accepted.
MAX_EXPONENT = 2**15


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


def inverse(a: int, p: int) -> int:
    """Inverse of a modulo the prime p (Fermat)."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of zero in GF(%d)" % p)
    return pow(a, p - 2, p)


def symmetric(c: int, p: int) -> int:
    """Representative of c mod p in (-p/2, p/2]."""
    c %= p
    return c - p if c > p // 2 else c


@dataclass(frozen=True)
class Ring:
    """The Z^r-graded ring of a product of projective spaces."""

    n: tuple[int, ...]
    p: int = DEFAULT_PRIME
    blocks: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)
    var_block: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = tuple(self.n)
        if not n:
            raise ValueError("n must be nonempty")
        if any(not isinstance(ni, int) or ni < 0 for ni in n):
            raise ValueError("factor dimensions must be nonnegative integers: %r" % (n,))
        if not is_prime(self.p):
            raise ValueError("characteristic %r is not prime" % (self.p,))
        object.__setattr__(self, "n", n)
        blocks = []
        start = 0
        var_block = []
        for i, ni in enumerate(n):
            blocks.append((start, start + ni + 1))
            var_block.extend([i] * (ni + 1))
            start += ni + 1
        object.__setattr__(self, "blocks", tuple(blocks))
        object.__setattr__(self, "var_block", tuple(var_block))

    @property
    def r(self) -> int:
        return len(self.n)

    @property
    def nvars(self) -> int:
        return len(self.var_block)

    def var_index(self, i: int, j: int) -> int:
        if not 0 <= i < self.r or not 0 <= j <= self.n[i]:
            raise IndexError("no variable x(%d,%d) in ring with n=%r" % (i, j, list(self.n)))
        return self.blocks[i][0] + j

    def var_name(self, index: int) -> str:
        i = self.var_block[index]
        return "x(%d,%d)" % (i, index - self.blocks[i][0])

    def degrees(self) -> list[tuple[int, ...]]:
        """Degrees of the variables in flat order."""
        return [unit(self.r, i) for i in self.var_block]

    def one(self) -> tuple[int, ...]:
        return (0,) * self.nvars

    def zero_degree(self) -> tuple[int, ...]:
        return (0,) * self.r

    def mono_degree(self, mono: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(mono[a:b]) for a, b in self.blocks)

    def variable(self, i: int, j: int) -> Polynomial:
        e = [0] * self.nvars
        e[self.var_index(i, j)] = 1
        return Polynomial(self, {tuple(e): 1})

    def constant(self, c: int) -> Polynomial:
        return Polynomial(self, {self.one(): c})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(self, text)


def make_ring(n, p: int = DEFAULT_PRIME) -> Ring:
    """Cox ring of P^{n_0} x ... x P^{n_{r-1}} over GF(p)."""
    return Ring(tuple(n), p)


def unit(r: int, i: int) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(r))


# --- multidegrees ---------------------------------------------------------

def deg_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def deg_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def deg_max(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def deg_min(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def deg_leq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def total(a) -> int:
    return sum(a)


# --- monomials ------------------------------------------------------------

@lru_cache(maxsize=1 << 20)
def mono_key(mono: tuple[int, ...]):
    """Sort key realizing grevlex: larger key means larger monomial."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def compare_monomials(a, b) -> int:
    """-1, 0 or 1 as a is smaller than, equal to, or larger than b in grevlex."""
    ka, kb = mono_key(tuple(a)), mono_key(tuple(b))
    return (ka > kb) - (ka < kb)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a, b) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _block_monomials(size: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(size), d):
        e = [0] * size
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def monomials_of_multidegree(ring: Ring, d) -> list[tuple[int, ...]]:
    """All monomials of multidegree exactly d, in decreasing grevlex order.

    A degree with a negative coordinate has no monomials; the empty list is
    returned rather than raising.
    """
    d = tuple(d)
    if len(d) != ring.r:
        raise ValueError("multidegree %r has wrong length for r=%d" % (d, ring.r))
    if any(x < 0 for x in d):
        return []
    return _monomials_cached(ring.n, d)


@lru_cache(maxsize=4096)
def _monomials_cached(n, d):
    parts = [_block_monomials(ni + 1, di) for ni, di in zip(n, d)]
    monos = [sum(choice, ()) for choice in product(*parts)]
    monos.sort(key=mono_key, reverse=True)
    return monos


def count_monomials(ring: Ring, d) -> int:
    if any(x < 0 for x in d):
        return 0
    return prod(comb(ni + di, di) for ni, di in zip(ring.n, d))


# --- polynomials ----------------------------------------------------------

class Polynomial:
    """A polynomial over GF(p) stored as {monomial: coefficient}."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: Ring, terms=None):
        self.ring = ring
        p = ring.p
        clean = {}
        if terms:
            for m, c in terms.items():
                c %= p
                if c:
                    m = tuple(m)
                    if len(m) != ring.nvars:
                        raise ValueError("monomial %r has wrong length" % (m,))
                    if any(e < 0 or e > MAX_EXPONENT for e in m):
                        raise ValueError("exponent out of range in %r" % (m,))
                    clean[m] = c
        self._terms = clean

    @property
    def coeffs(self) -> dict:
        """The underlying {monomial: coefficient} map (treat as read-only)."""
        return self._terms

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in decreasing monomial order."""
        return sorted(self._terms.items(), key=lambda t: mono_key(t[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            return None
        m = max(self._terms, key=mono_key)
        return m, self._terms[m]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.mono_degree(m) for m in self._terms}
        return len(degs) <= 1

    def multidegree(self):
        """The common multidegree of all terms; None for the zero polynomial."""
        degs = {self.ring.mono_degree(m) for m in self._terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous: %s" % self)
        return degs.pop()

    def _check(self, other):
        if isinstance(other, int):
            return Polynomial(self.ring, {self.ring.one(): other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError("polynomials live in different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> Polynomial:
        return Polynomial(self.ring, {m: c * a for m, a in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        return format_polynomial(self.ring, self._terms)

    def __repr__(self):
        return "Polynomial(%s)" % self


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g) -> Polynomial:
    return f * g


def poly_scale(f: Polynomial, c: int) -> Polynomial:
    return f.scale(c)


def format_monomial(ring: Ring, mono) -> str:
    parts = []
    for v, e in enumerate(mono):
        if e == 1:
            parts.append(ring.var_name(v))
        elif e > 1:
            parts.append("%s^%d" % (ring.var_name(v), e))
    return "*".join(parts)


def format_polynomial(ring: Ring, terms: dict) -> str:
    """Canonical text: terms in decreasing grevlex, coefficients in (-p/2, p/2]."""
    if not terms:
        return "0"
    out = []
    for m, c in sorted(terms.items(), key=lambda t: mono_key(t[0]), reverse=True):
        c = symmetric(c, ring.p)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        body = format_monomial(ring, m)
        if not body:
            text = str(c)
        elif c == 1:
            text = body
        else:
            text = "%d*%s" % (c, body)
        out.append((sign, text))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, text in out[1:]:
        s += " %s %s" % (sign, text)
    return s


# --- parsing --------------------------------------------------------------

class PolynomialSyntaxError(ValueError):
    """Raised on malformed polynomial text; `column` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__("column %d: %s" % (column, message))
        self.column = column


_TOKEN = re.compile(r"\s*(?:(\d+)|(x\s*\(\s*(\d+)\s*,\s*(\d+)\s*\))|(\^)|(\*)|(\+)|(-))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise PolynomialSyntaxError("unexpected character %r" % text[col - 1], col)
        col = m.start() + len(m.group(0)) - len(m.group(0).lstrip()) + 1
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), col))
        elif m.group(2) is not None:
            tokens.append(("var", (int(m.group(3)), int(m.group(4))), col))
        elif m.group(5):
            tokens.append(("^", None, col))
        elif m.group(6):
            tokens.append(("*", None, col))
        elif m.group(7):
            tokens.append(("+", None, col))
        else:
            tokens.append(("-", None, col))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


def parse_polynomial(ring: Ring, text: str) -> Polynomial:
    """Parse e.g. ``x(0,0)^3*x(1,2) - 2*x(0,1)^4``.

    Grammar: sum of signed terms; a term is a product of integer literals and
    variables ``x(i,j)`` (0-based), each optionally raised with ``^``.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            raise PolynomialSyntaxError("expected %s, found %s" % (kind, tok[0]), tok[2])
        pos += 1
        return tok

    def factor():
        nonlocal pos
        tok = peek()
        if tok[0] == "int":
            pos += 1
            base = ring.constant(tok[1])
        elif tok[0] == "var":
            pos += 1
            i, j = tok[1]
            try:
                base = ring.variable(i, j)
            except IndexError as exc:
                raise PolynomialSyntaxError(str(exc), tok[2]) from None
        else:
            raise PolynomialSyntaxError("expected a number or variable, found %s" % tok[0], tok[2])
        if peek()[0] == "^":
            pos += 1
            e = take("int")
            if e[1] > MAX_EXPONENT:
                raise PolynomialSyntaxError("exponent %d exceeds cap" % e[1], e[2])
            base = base ** e[1]
        return base

    def term():
        nonlocal pos
        value = factor()
        while peek()[0] == "*":
            pos += 1
            value = value * factor()
        return value

    result = ring.zero()
    sign = 1
    if peek()[0] in "+-":
        sign = -1 if peek()[0] == "-" else 1
        pos += 1
    if peek()[0] == "end":
        raise PolynomialSyntaxError("empty polynomial", peek()[2])
    result = result + term().scale(sign)
    while peek()[0] in ("+", "-"):
        sign = -1 if peek()[0] == "-" else 1
        pos += 1
        result = result + term().scale(sign)
    if peek()[0] != "end":
        tok = peek()
        raise PolynomialSyntaxError("unexpected %s" % tok[0], tok[2])
    return result


def irrelevant_ideal(ring: Ring) -> list[Polynomial]:
    """Generators x(0,j_0)*...*x(r-1,j_{r-1}) of the irrelevant ideal.

    Ordered lexicographically by the index tuple (j_0, ..., j_{r-1}).
    """
    gens = []
    for js in product(*[range(ni + 1) for ni in ring.n]):
        e = [0] * ring.nvars
        for i, j in enumerate(js):
            e[ring.var_index(i, j)] = 1
        gens.append(Polynomial(ring, {tuple(e): 1}))
    return gens
