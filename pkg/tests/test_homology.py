import random

import pytest

from posetderiv import (
    DimensionError,
    Poset,
    RATIONALS,
    boundary_matrix,
    classify,
    consistency_matrix,
    enumerate_posets,
    euler_characteristic,
    full_order_complex,
    homology,
    order_complex,
    prime_field,
    rank_over,
    shape_stats,
)
from posetderiv import fixtures as fx

from oracles import random_poset_covers


def all_posets_up_to(n):
    for k in range(1, n + 1):
        yield from enumerate_posets(k)


# -- order complex -------------------------------------------------------


def test_complex_antichain():
    K = order_complex(fx.antichain(3), 2)
    assert [len(s) for s in K.simplices_by_dim] == [3, 0, 0]


def test_complex_rp2(rp2):
    K = order_complex(rp2, 2)
    assert [len(s) for s in K.simplices_by_dim] == [13, 36, 24]


def test_complex_chain3():
    K = order_complex(fx.chain(3), 2)
    assert [len(s) for s in K.simplices_by_dim] == [3, 3, 1]


def test_complex_chains_increase_in_poset_order():
    K = order_complex(fx.chain(3), 2)
    assert K.simplices_by_dim[2] == ((0, 1, 2),)
    assert K.simplices_by_dim[1] == ((0, 1), (0, 2), (1, 2))


# -- boundary matrices ------------------------------------------------------


def test_boundary_single_edge():
    P = Poset(["x", "y"], [("x", "y")])
    d1 = boundary_matrix(order_complex(P, 1), 1)
    assert d1.to_rows() == [[-1], [1]]


def test_boundary_composition_vanishes(rp2):
    K = order_complex(rp2, 2)
    d1, d2 = boundary_matrix(K, 1), boundary_matrix(K, 2)
    assert (d1.rows, d1.cols) == (13, 36)
    assert (d2.rows, d2.cols) == (36, 24)
    assert all(v == 0 for v in d1.mul(d2).entries)


def test_boundary_composition_random():
    rng = random.Random(13)
    for _ in range(25):
        elements, covers = random_poset_covers(rng, 8)
        P = Poset(elements, covers)
        K = full_order_complex(P)
        for d in range(2, K.max_dim + 1):
            lower = boundary_matrix(K, d - 1)
            upper = boundary_matrix(K, d)
            assert all(v == 0 for v in lower.mul(upper).entries)


def test_boundary_dimension_guard():
    K = order_complex(fx.chain(2), 1)
    with pytest.raises(DimensionError):
        boundary_matrix(K, 0)
    with pytest.raises(DimensionError):
        boundary_matrix(K, 2)


# -- homology -----------------------------------------------------------


def test_homology_crown2():
    h = homology(fx.crown(2), 1)
    assert (h.betti, h.torsion) == (1, ())


def test_homology_rp2(rp2):
    h = homology(rp2, 1)
    assert (h.betti, h.torsion) == (0, (2,))


def test_homology_chain3():
    h = homology(fx.chain(3), 1)
    assert (h.betti, h.torsion) == (0, ())


def test_betti0_counts_components():
    for P in [fx.antichain(4), fx.chain(3), fx.crown(2), fx.rp2(), fx.s5()]:
        assert homology(P, 0).betti == shape_stats(P).component_count
    rng = random.Random(3)
    for _ in range(20):
        elements, covers = random_poset_covers(rng, 7)
        P = Poset(elements, covers)
        h0 = homology(P, 0)
        assert h0.betti == shape_stats(P).component_count
        assert h0.torsion == ()


def test_homology_isomorphism_invariant(rp2):
    rng = random.Random(8)
    names = list(rp2.elements)
    perm = names[:]
    rng.shuffle(perm)
    rename = dict(zip(names, perm))
    Q = Poset(
        [rename[e] for e in rp2.elements],
        [(rename[a], rename[b]) for a, b in rp2.covers],
    )
    assert homology(Q, 1) == homology(rp2, 1)


def test_graph_complexes_have_no_torsion():
    # posets of height <= 2 have one-dimensional order complexes
    for P in all_posets_up_to(6):
        if shape_stats(P).height <= 2:
            assert homology(P, 1).torsion == ()


# -- euler characteristic --------------------------------------------------


def test_euler_point():
    assert euler_characteristic(full_order_complex(fx.chain(1))) == 1


def test_euler_rp2(rp2):
    assert euler_characteristic(full_order_complex(rp2)) == 13 - 36 + 24 == 1


def test_euler_crown2():
    assert euler_characteristic(full_order_complex(fx.crown(2))) == 0


def test_euler_s5(s5):
    assert euler_characteristic(full_order_complex(s5)) == 0


# -- classification ----------------------------------------------------------


def test_classify_rp2(rp2):
    v = classify(rp2)
    assert not v.soluble and not v.defective_uct and not v.conclusive_torsion_free


def test_classify_crown3():
    v = classify(fx.crown(3))
    assert v.defective_uct and v.conclusive_torsion_free and not v.soluble
    assert v.betti1 == 1


def test_classify_chain5():
    assert classify(fx.chain(5)).soluble


def test_classify_booleans_are_consistent():
    for P in all_posets_up_to(5):
        v = classify(P)
        if v.soluble:
            assert v.conclusive_torsion_free and not v.defective_uct


# -- cross-module dimension identity -----------------------------------------


def test_rank_homology_identity_small():
    fields = (RATIONALS, prime_field(2), prime_field(3))
    for P in all_posets_up_to(5):
        st = shape_stats(P)
        v = classify(P)
        m = consistency_matrix(P).matrix
        for k in fields:
            der = st.edge_count - rank_over(m, k)
            lhs = der - (st.vertex_count - st.component_count)
            p = k.n
            rhs = v.betti1 + (
                0 if p is None else sum(1 for t in v.torsion1 if t % p == 0)
            )
            assert lhs == rhs
