import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multitrunc.groebner import (
    FreeModule,
    GradedHom,
    InhomogeneousError,
    groebner_basis,
    minimal_generators,
    normal_form,
    s_pair_remainders,
    syzygies,
    vec_add,
    vec_times_poly,
)
from multitrunc.ring import irrelevant_ideal, make_ring, monomials_of_multidegree

from conftest import random_module
from oracles import degrees_up_to, free_basis, image_rank

seeds = st.integers(0, 10**6)


def ideal_vectors(polys):
    return [{(m, 0): c for m, c in f.coeffs.items()} for f in polys]


def test_empty_and_linear():
    R = make_ring([1])
    F = FreeModule(R, ((0,),))
    assert groebner_basis(F, []).elements == ()
    x, y = R.variable(0, 0), R.variable(0, 1)
    gb = groebner_basis(F, ideal_vectors([x, y]))
    assert sorted(gb.elements, key=str) == sorted(ideal_vectors([x, y]), key=str)


def test_binomial_pair_gets_s_pair_remainder():
    # (xy - z^2, x^2 - yz) in k[x,y,z]; the S-pair contributes a cubic
    R = make_ring([2])
    F = FreeModule(R, ((0,),))
    f1 = R.parse("x(0,0)*x(0,1) - x(0,2)^2")
    f2 = R.parse("x(0,0)^2 - x(0,1)*x(0,2)")
    gb = groebner_basis(F, ideal_vectors([f1, f2]))
    assert len(gb.elements) == 3
    assert all(not r for r in s_pair_remainders(gb))
    degs = sorted(F.degree(g)[0] for g in gb.elements)
    assert degs == [2, 2, 3]
    # by hand: x*f1 - y*f2 = y^2 z - x z^2, irreducible by the quadratic leads
    cubic = [g for g in gb.elements if F.degree(g) == (3,)][0]
    assert cubic == ideal_vectors([R.parse("x(0,1)^2*x(0,2) - x(0,0)*x(0,2)^2")])[0]


def test_irrelevant_membership():
    R = make_ring([1, 2])
    F = FreeModule(R, ((0, 0),))
    gb = groebner_basis(F, ideal_vectors(irrelevant_ideal(R)))
    v = ideal_vectors([R.variable(0, 0) * R.variable(1, 0)])[0]
    assert normal_form(v, gb) == {}
    assert normal_form({}, gb) == {}
    for g in gb.elements:
        assert normal_form(g, gb) == {}
    assert normal_form(ideal_vectors([R.variable(0, 0) ** 2])[0], gb)


def test_inhomogeneous_rejected():
    R = make_ring([1])
    F = FreeModule(R, ((0,),))
    bad = ideal_vectors([R.parse("x(0,0) + x(0,1)^2")])
    with pytest.raises(InhomogeneousError):
        groebner_basis(F, bad)
    with pytest.raises(InhomogeneousError):
        minimal_generators(F, bad)
    with pytest.raises(ValueError):
        GradedHom(F, FreeModule(R, ((1,),)), bad)


def test_normal_form_ambient_mismatch():
    R = make_ring([1])
    gb = groebner_basis(FreeModule(R, ((0,),)), [])
    with pytest.raises(ValueError):
        normal_form({((1, 0), 3): 1}, gb)


def _span_rank(F, vectors, c):
    R = F.ring
    twists = tuple(F.degree(v) for v in vectors)
    return image_rank(R.n, R.p, F.twists, twists, vectors, c)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_buchberger_fixpoint_and_criteria(seed):
    rng = random.Random(seed)
    phi = random_module(rng).presentation
    F = phi.target
    gb = groebner_basis(F, phi.columns)
    plain = groebner_basis(F, phi.columns, criteria=False)
    assert gb.elements == plain.elements
    assert all(not r for r in s_pair_remainders(gb))
    assert all(F.is_homogeneous(g) for g in gb.elements)
    leads = gb.leads
    assert len(set(leads)) == len(leads)
    # same span as the input, degree by degree
    lo = min(F.twists)
    for c in degrees_up_to(lo, sum(lo) + 4):
        assert _span_rank(F, list(phi.columns), c) == _span_rank(F, list(gb.elements), c)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_membership_soundness(seed):
    rng = random.Random(seed)
    phi = random_module(rng).presentation
    F, R = phi.target, phi.ring
    gb = groebner_basis(F, phi.columns)
    # random combination of the generators in a common degree
    top = tuple(max(x) + 1 for x in zip(*phi.source.twists))
    v = {}
    for col, tw in zip(phi.columns, phi.source.twists):
        for u in monomials_of_multidegree(R, tuple(a - b for a, b in zip(top, tw)))[:3]:
            v = vec_add(v, vec_times_poly(col, {u: rng.randint(1, R.p - 1)}, R.p), R.p)
    assert normal_form(v, gb) == {}
    # adding a standard monomial leaves a nonzero remainder
    leads = gb.leads
    for k, t in enumerate(F.twists):
        for u in monomials_of_multidegree(R, tuple(a - b for a, b in zip(top, t))):
            if not any(p == k and all(x <= y for x, y in zip(m, u)) for m, p in leads):
                w = vec_add(v, {(u, k): 1}, R.p)
                assert normal_form(w, gb) != {}
                return


def test_koszul_syzygy():
    R = make_ring([1])
    x, y = R.variable(0, 0), R.variable(0, 1)
    f = GradedHom.from_matrix(FreeModule(R, ((0,),)), FreeModule(R, ((1,), (1,))), [[x, y]])
    g = syzygies(f)
    assert g.source.twists == ((2,),)
    col = g.columns[0]
    assert col == {((0, 1), 0): R.p - 1, ((1, 0), 1): 1} or col == {((0, 1), 0): 1, ((1, 0), 1): R.p - 1}
    assert f.compose(g).is_zero()


def test_injective_has_no_syzygies():
    R = make_ring([2])
    f = GradedHom.from_matrix(FreeModule(R, ((0,),)), FreeModule(R, ((2,),)), [[R.parse("x(0,0)^2")]])
    assert syzygies(f).source.rank == 0


def test_zero_and_duplicate_columns():
    R = make_ring([1])
    x = R.variable(0, 0)
    f = GradedHom.from_matrix(FreeModule(R, ((0,),)), FreeModule(R, ((1,), (1,), (3,))), [[x, x, R.zero()]])
    g = syzygies(f)
    assert f.compose(g).is_zero()
    assert sorted(g.source.twists) == [(1,), (3,)]


def test_irrelevant_first_syzygies():
    R = make_ring([1, 2])
    B = irrelevant_ideal(R)
    f = GradedHom.from_matrix(FreeModule(R, ((0, 0),)), FreeModule(R, ((1, 1),) * 6), [B])
    g = syzygies(f)
    assert g.source.rank == 9
    assert sorted(g.source.twists) == [(1, 2)] * 6 + [(2, 1)] * 3


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_syzygies_span_kernel(seed):
    rng = random.Random(seed)
    f = random_module(rng).presentation
    g = syzygies(f)
    assert f.compose(g).is_zero()
    R = f.ring
    n, p = R.n, R.p
    lo = tuple(min(t[i] for t in f.source.twists) for i in range(R.r))
    for c in degrees_up_to(lo, 6):
        dim_src = len(free_basis(n, f.source.twists, c))
        ker = dim_src - image_rank(n, p, f.target.twists, f.source.twists, f.columns, c)
        assert ker == image_rank(n, p, g.target.twists, g.source.twists, g.columns, c)


def test_minimal_generators_examples():
    R = make_ring([1])
    F = FreeModule(R, ((0,),))
    x, y = R.variable(0, 0), R.variable(0, 1)
    g = ideal_vectors([x])[0]
    assert minimal_generators(F, [g, ideal_vectors([x * y])[0]]) == [g]
    kept = minimal_generators(F, ideal_vectors([x, y, x + y]))
    assert len(kept) == 2


def test_minimal_generators_of_b_times_m():
    R = make_ring([1, 1])
    F = FreeModule(R, ((0, 0),))
    B = irrelevant_ideal(R)
    m = [R.variable(i, j) for i in range(2) for j in range(2)]
    products = ideal_vectors([b * v for b in B for v in m])
    gens = ideal_vectors(B) + products
    kept = minimal_generators(F, gens)
    assert len(kept) == 4
    assert groebner_basis(F, kept).elements == groebner_basis(F, gens).elements
    # the degree-(2,1)/(1,2) products alone need more generators than B
    assert len(minimal_generators(F, products)) > 4


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_minimal_generators_is_minimal(seed):
    rng = random.Random(seed)
    phi = random_module(rng).presentation
    F = phi.target
    kept = minimal_generators(F, phi.columns)
    assert groebner_basis(F, kept).elements == groebner_basis(F, phi.columns).elements
    for i in range(len(kept)):
        others = kept[:i] + kept[i + 1:]
        assert normal_form(kept[i], groebner_basis(F, others)) != {}
