from fractions import Fraction

import pytest

from hopfforge.errors import InsufficientData, InvalidParameter
from hopfforge.freealg import NcPoly
from hopfforge.growth import (
    ball_growth, gk_estimate, span_dimension_sequence, verify_hopf_subalgebra,
)
from hopfforge.liealg import sl2, two_dim_subalgebra
from hopfforge.parsing import parse_element
from hopfforge.presets import build

from oracles import e_family_dims, heisenberg_ball


def V(H, texts):
    return [parse_element(s, H) for s in ["1"] + texts]


def lie_vector(vec):
    p = NcPoly()
    for i, c in enumerate(vec):
        p = p + NcPoly.word((i + 1,), c)
    return p


def test_quantum_plane_dims():
    H = build("A:b=1,xi=2")
    D = span_dimension_sequence(H, V(H, ["g", "g^-1", "y"]), 10)
    assert D.dims == [(n + 1) ** 2 for n in range(1, 11)]
    assert gk_estimate(span_dimension_sequence(H, V(H, ["g", "g^-1", "y"]), 16)).degree == 2


def test_jordan_plane_uses_linear_combinations():
    H = build("C:m=2")
    D = span_dimension_sequence(H, V(H, ["g", "g^-1", "y"]), 8)
    assert D.dims == [(n + 1) ** 2 for n in range(1, 9)]


def test_lattice_dims_span_and_ball():
    H = build("Zn:n=2")
    expected = [2 * n * n + 2 * n + 1 for n in range(1, 11)]
    assert span_dimension_sequence(H, V(H, ["x", "x^-1", "y", "y^-1"]), 10).dims == expected
    assert ball_growth(H, 10).dims == expected


def test_free_pointed_is_superpolynomial():
    H = build("F:t=1")
    D = span_dimension_sequence(H, V(H, ["x", "x^-1", "y"]), 10)
    assert all(Fraction(D.dims[n], D.dims[n - 1]) >= 2 for n in range(4, 10))
    est = gk_estimate(D)
    assert est.superpolynomial and est.degree is None
    assert est.to_json()["superpolynomial"] is True


def test_e_family_dims_match_oracle():
    for n, N in ((0, 6), (1, 5)):
        H = build(f"E:n={n}")
        gens = [f"x{i}{s}" for i in range(n + 1) for s in ("", "^-1")] + ["y"]
        assert span_dimension_sequence(H, V(H, gens), N).dims == e_family_dims(n, N)


def test_gk_additivity_small():
    degrees = []
    for n in (0, 1):
        H = build(f"E:n={n}")
        gens = [f"x{i}{s}" for i in range(n + 1) for s in ("", "^-1")] + ["y"]
        degrees.append(gk_estimate(span_dimension_sequence(H, V(H, gens), 16)).degree)
    assert degrees == [1, 2]


def test_heisenberg_ball_matches_group_law_oracle():
    H = build("heis")
    assert ball_growth(H, 9, ["x", "y"]).dims == heisenberg_ball(9)
    assert span_dimension_sequence(H, V(H, ["x", "x^-1", "y", "y^-1"]), 7).dims == heisenberg_ball(7)


def test_finite_quotient_invariance():
    G = build("zxz2")
    Z = build("Zn:n=1")
    assert ball_growth(G, 12).dims == [4 * n for n in range(1, 13)]
    assert span_dimension_sequence(G, V(G, ["x", "x^-1", "u"]), 8).dims == ball_growth(G, 8).dims
    assert gk_estimate(ball_growth(G, 12)).degree == gk_estimate(ball_growth(Z, 12)).degree == 1


@pytest.mark.parametrize("sel,gens", [("A:b=1,xi=-1", ["g", "g^-1", "y"]), ("E:n=1", ["x0", "x1", "y"]),
                                      ("env:sl2", ["h", "e", "f"]), ("F:t=2", ["x", "y"])])
def test_submultiplicative_and_monotone(sel, gens):
    H = build(sel)
    d = span_dimension_sequence(H, V(H, gens), 6).dims
    assert d == sorted(d)
    for m in range(1, 4):
        for n in range(1, 7 - m):
            assert d[m + n - 1] <= d[m - 1] * d[n - 1]


def test_estimator_input_checks():
    with pytest.raises(InsufficientData):
        gk_estimate([1, 2, 3, 4, 5, 6, 7])
    H = build("F:t=1")
    with pytest.raises(InvalidParameter):
        span_dimension_sequence(H, [parse_element("x", H)], 4)
    with pytest.raises(InvalidParameter):
        ball_growth(H, 4)


def test_dimension_cap_truncates():
    H = build("F:t=1")
    D = span_dimension_sequence(H, V(H, ["x", "x^-1", "y"]), 10, cap=100)
    assert D.truncated and D.dims == [4, 11, 28, 69]
    assert D.csv().splitlines()[:2] == ["n,dim", "1,4"]


def test_subalgebra_closure_examples():
    L = sl2()
    u, v = two_dim_subalgebra(L)
    U = build("env:sl2")
    rep = verify_hopf_subalgebra(U, [lie_vector(u), lie_vector(v)], 4)
    assert rep.ok and rep.generators_closed
    H = build("heis")
    rep = verify_hopf_subalgebra(H, [parse_element(s, H) for s in ("x", "x^-1", "z", "z^-1")], 6)
    assert rep.ok and rep.dims == [2 * n * n + 2 * n + 1 for n in range(1, 7)]
    E = build("E:n=1")
    rep = verify_hopf_subalgebra(E, [parse_element(s, E) for s in ("x0", "x0^-1", "y")], 4)
    assert rep.ok


def test_subalgebra_closure_detects_failure():
    E = build("E:n=1")
    rep = verify_hopf_subalgebra(E, [parse_element("x1 + y", E)], 2)
    assert not rep.ok and {v.check for v in rep.violations} == {"coproduct"}
    assert not rep.generators_closed
