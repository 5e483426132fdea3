import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfforge.errors import InvalidParameter, NoWitness, ResidualDegreeTooHigh
from hopfforge.freealg import NcPoly
from hopfforge.growth import verify_hopf_subalgebra
from hopfforge.liealg import (
    abelian, charpoly, heisenberg_lie, is_closed_pair, jacobi_check, load_lie, lower_central_series,
    make_lie, sl2, solvable2, two_dim_subalgebra,
)
from hopfforge.presets import enveloping
from hopfforge.scalars import QuadExt


def test_jacobi_examples():
    assert jacobi_check(sl2()) == []
    assert jacobi_check(heisenberg_lie()) == []
    broken = make_lie(["h", "e", "f"], {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [0, 1, 0]})
    assert jacobi_check(broken)
    with pytest.raises(InvalidParameter):
        enveloping(broken)


def test_lower_central_series_examples():
    assert lower_central_series(heisenberg_lie()) == [3, 1, 0]
    assert lower_central_series(sl2()) == [3, 3]
    assert lower_central_series(abelian(2)) == [2, 0]


def test_two_dim_examples():
    L = sl2()
    u, v = two_dim_subalgebra(L)
    assert (u, v) == (L.basis_vector(0), L.basis_vector(1))
    assert L.bracket(u, v) == [0, 2, 0]
    H = heisenberg_lie()
    assert two_dim_subalgebra(H) == (H.basis_vector(2), H.basis_vector(0))
    S = solvable2()
    assert two_dim_subalgebra(S) == (S.basis_vector(0), S.basis_vector(1))


def test_quadratic_eigenvalue():
    so3 = make_lie(["a", "b", "c"], {(0, 1): [0, 0, 1], (1, 2): [1, 0, 0], (2, 0): [0, 1, 0]})
    u, v = two_dim_subalgebra(so3)
    assert any(isinstance(c, QuadExt) for c in v)
    assert is_closed_pair(so3, u, v)


def test_out_of_reach_eigenvalues():
    # x acts on an abelian ideal through the companion matrix of s^3 - 2
    L = make_lie(["x", "a", "b", "c"], {(0, 1): [0, 0, 1, 0], (0, 2): [0, 0, 0, 1], (0, 3): [0, 2, 0, 0]})
    assert jacobi_check(L) == []
    with pytest.raises(ResidualDegreeTooHigh):
        two_dim_subalgebra(L)


def test_charpoly():
    # ad h on sl2 has eigenvalues 0, 2, -2
    L = sl2()
    from hopfforge.liealg import ad_matrix

    assert charpoly(ad_matrix(L, L.basis_vector(0))) == [0, -4, 0, 1]


def _change_basis(L, rng):
    """Structure constants of L in a random integer basis (still a Lie algebra)."""
    d = L.dim
    while True:
        P = [[Fraction(rng.randint(-2, 2)) for _ in range(d)] for _ in range(d)]
        from hopfforge.liealg import span_basis

        if len(span_basis(P)) == d:
            break
    # new basis vectors b_i = row i of P; solve [b_i, b_j] in the new basis
    from hopfforge.linalg import kernel

    brackets = {}
    for i in range(d):
        for j in range(i + 1, d):
            target = L.bracket(P[i], P[j])
            cols = [{k: P[r][k] for k in range(d) if P[r][k]} for r in range(d)]
            cols.append({k: -c for k, c in enumerate(target) if c})
            rel = kernel(cols)[0]
            scale = rel[d]
            brackets[(i, j)] = [rel.get(r, 0) / scale for r in range(d)]
    return make_lie([f"b{i}" for i in range(d)], brackets)


@given(seed=st.integers(0, 10_000), which=st.sampled_from(["sl2", "heis", "aff1", "ab3"]))
def test_two_dim_output_is_closed(seed, which):
    base = {"sl2": sl2, "heis": heisenberg_lie, "aff1": solvable2, "ab3": lambda: abelian(3)}[which]()
    L = _change_basis(base, random.Random(seed))
    assert jacobi_check(L) == []
    dims = lower_central_series(L)
    assert all(a > b for a, b in zip(dims, dims[1:-1]))
    try:
        u, v = two_dim_subalgebra(L)
    except NoWitness:
        return
    assert is_closed_pair(L, u, v)


def test_enveloping_of_subalgebra_is_hopf_subalgebra():
    L = sl2()
    u, v = two_dim_subalgebra(L)
    U = enveloping(L)
    gens = [sum((NcPoly.word((i + 1,), c) for i, c in enumerate(vec) if c), NcPoly()) for vec in (u, v)]
    assert verify_hopf_subalgebra(U, gens, 4).ok


def test_load_lie_json(tmp_path):
    path = tmp_path / "heis.json"
    path.write_text(json.dumps({"dim": 3, "names": ["p", "q", "c"], "brackets": [[0, 1, [0, 0, 1]]]}))
    L = load_lie(str(path))
    assert L.names == ["p", "q", "c"] and lower_central_series(L) == [3, 1, 0]
    assert load_lie("sl2").label == "sl2"
