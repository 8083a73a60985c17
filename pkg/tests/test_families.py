from fractions import Fraction

import pytest

from drgc.errors import NoDescendant, ParamDomain, TooLarge
from drgc.families import (FamilySpec, construct, default_grid, descendant,
                           half_dual_polar_descendant_check, theory_values)
from drgc.graph import cut_stats, intersection_array
from drgc.spectral import dense_spectrum, distinct_values, drg_spectrum


def test_spec_parsing_and_domain():
    spec = FamilySpec.parse("johnson:6,3")
    assert spec.family == "johnson" and spec.params == (6, 3)
    assert str(spec) == "johnson:6,3"
    with pytest.raises(ParamDomain):
        FamilySpec.parse("johnson:3,2")       # n < 2e
    with pytest.raises(ParamDomain):
        FamilySpec.parse("nosuch:1")
    with pytest.raises(ParamDomain):
        FamilySpec.parse("grassmann:6,4,2")   # unsupported field order
    with pytest.raises(ParamDomain):
        FamilySpec.parse("johnson")


def test_too_large():
    with pytest.raises(TooLarge):
        construct(FamilySpec("hamming", (10, 4)))


def test_johnson_52_theta1_from_spectrum():
    g = construct(FamilySpec.parse("johnson:5,2"))
    assert g.n == 10 and g.regular_degree() == 6
    dv = distinct_values(dense_spectrum(g))
    assert abs(dv[1] - 1) < 1e-9            # (e-1)(n-e-1) - 1 = 1


def test_known_arrays():
    assert str(intersection_array(construct(FamilySpec.parse("hamming:3,2")))) \
        == "{3,2,1;1,2,3}"
    assert str(intersection_array(construct(FamilySpec.parse("odd:4")))) \
        == "{4,3,3;1,1,2}"
    assert str(intersection_array(construct(FamilySpec.parse("doubledgrassmann:2,1")))) \
        == "{3,2,2;1,1,3}"     # incidence graph of the Fano plane


def test_gq33_companion_size():
    # incidence bipartite companion of the q=3 symplectic quadrangle
    from drgc.constructions import symplectic_gq_incidence
    g = symplectic_gq_incidence(3)
    assert g.n == 2 * (3 ** 2 + 1) * (3 + 1) == 80


def test_doob_same_array_as_hamming():
    assert intersection_array(construct(FamilySpec.parse("doob:1,0"))) == \
        intersection_array(construct(FamilySpec.parse("hamming:2,4")))
    assert intersection_array(construct(FamilySpec.parse("doob:1,1"))) == \
        intersection_array(construct(FamilySpec.parse("hamming:3,4")))


def test_doubledodd_is_double_of_odd():
    from drgc.graph import bipartite_double
    g = construct(FamilySpec.parse("doubledodd:4"))
    o4 = construct(FamilySpec.parse("odd:4"))
    assert intersection_array(g) == intersection_array(bipartite_double(o4))


@pytest.mark.parametrize("spec", default_grid(), ids=str)
def test_grid_theory_values_match_spectrum(spec):
    tv = theory_values(spec)
    g = construct(spec)
    assert g.n == tv.v and g.regular_degree() == tv.k
    ia = intersection_array(g)
    sp = drg_spectrum(ia)
    assert abs(sp.theta1 - float(tv.theta1)) < 1e-9
    assert 0 < float(tv.lambda1) <= 1 + 1e-12


@pytest.mark.parametrize("spec", default_grid(), ids=str)
def test_grid_descendants(spec):
    tv = theory_values(spec)
    g = construct(spec)
    S = descendant(spec)
    assert 2 * len(S) <= g.n
    st = cut_stats(g, S)
    kprime = Fraction(st.inside, st.size)
    assert kprime >= tv.theta1.as_fraction()     # exact rational comparison


def test_hermitian_descendant_exact_equality():
    spec = FamilySpec.parse("hermitianforms:2,2")
    g = construct(spec)
    S = descendant(spec)
    st = cut_stats(g, S)
    assert Fraction(st.inside, st.size) == theory_values(spec).theta1.as_fraction()


def test_descendant_examples():
    # triples containing a fixed element induce the one-smaller Johnson graph
    spec = FamilySpec.parse("johnson:6,3")
    S = descendant(spec)
    assert len(S) == 10
    g = construct(spec)
    from drgc.graph import induced_subgraph
    sub, _ = induced_subgraph(g, S)
    assert intersection_array(sub) == \
        intersection_array(construct(FamilySpec.parse("johnson:5,2")))
    # strings starting 0 in the 3-cube induce a 4-cycle
    spec = FamilySpec.parse("hamming:3,2")
    sub, _ = induced_subgraph(construct(spec), descendant(spec))
    assert sub.n == 4 and sub.regular_degree() == 2


def test_doubled_grassmann_has_no_descendant():
    with pytest.raises(NoDescendant):
        descendant(FamilySpec.parse("doubledgrassmann:2,2"))
    with pytest.raises(NoDescendant):
        descendant(FamilySpec.parse("halfdualpolar:2,4"))


def test_half_dual_polar_is_parameters_only():
    with pytest.raises(ParamDomain):
        construct(FamilySpec.parse("halfdualpolar:2,4"))
    tv = theory_values(FamilySpec.parse("halfdualpolar:2,4"))
    assert tv.k > float(tv.theta1) > 0
    for q in (2, 3):
        for n in (4, 5, 6):
            ok, trace = half_dual_polar_descendant_check(q, n)
            assert ok, trace


def test_doubled_grassmann_theta1_irrational():
    tv = theory_values(FamilySpec.parse("doubledgrassmann:2,2"))
    assert tv.theta1.triple() == (0, 3, 2)      # sqrt(2) * [2 1]_2
    g = construct(FamilySpec.parse("doubledgrassmann:2,2"))
    assert g.n == 310 == tv.v
    sp = drg_spectrum(intersection_array(g))
    assert abs(sp.theta1 - float(tv.theta1)) < 1e-9


def test_theory_values_cheap_without_construction():
    tv = theory_values(FamilySpec.parse("grassmann:3,8,4"))
    assert tv.v > 10 ** 6        # far beyond any construction cap
    assert tv.theta1.is_rational


def test_folded_cube_theta1():
    for n in (4, 5, 6, 7, 8):
        tv = theory_values(FamilySpec(("foldedcube"), (n,)))
        assert tv.theta1 == n - 4


def test_halved_cube_theta1():
    for n in (4, 5, 6, 7, 8):
        tv = theory_values(FamilySpec("halvedcube", (n,)))
        assert tv.theta1 == Fraction((n - 2) ** 2 - n, 2)
