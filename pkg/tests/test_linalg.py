import random
from fractions import Fraction

import pytest

from posetderiv import (
    INTEGERS,
    IntegerMatrix,
    RATIONALS,
    Ring,
    UnsupportedRingError,
    InputError,
    kernel_basis,
    mod_ring,
    prime_field,
    rank_over,
    ring_from_string,
    smith_normal_form,
    solve_linear,
)

from oracles import bareiss_rank, det_int, minor_gcd_divisors, modp_rank, random_integer_matrix


def snf_invariants_hold(mat):
    """S = U*A*V, unimodular transforms, positive divisors in a chain."""
    a = IntegerMatrix.from_rows(mat, cols=len(mat[0]) if mat else 0)
    dec = smith_normal_form(a)
    if dec.u.mul(a).mul(dec.v) != dec.s:
        return False
    if det_int(dec.u.to_rows()) not in (1, -1):
        return False
    if det_int(dec.v.to_rows()) not in (1, -1):
        return False
    divisors = dec.divisors
    if any(d < 1 for d in divisors):
        return False
    for d1, d2 in zip(divisors, divisors[1:]):
        if d2 % d1:
            return False
    # diagonal shape: divisors then zeros
    for i in range(dec.s.rows):
        for j in range(dec.s.cols):
            expect = divisors[i] if i == j and i < len(divisors) else 0
            if dec.s.entry(i, j) != expect:
                return False
    return True


def run_snf_trials(count, seed, max_dim=6, bound=9):
    rng = random.Random(seed)
    failures = []
    for t in range(count):
        mat = random_integer_matrix(rng, max_dim, bound)
        if not snf_invariants_hold(mat):
            failures.append(mat)
            continue
        a = IntegerMatrix.from_rows(mat, cols=len(mat[0]) if mat else 0)
        if rank_over(a, RATIONALS) != bareiss_rank(mat):
            failures.append(mat)
    return failures


# -- smith normal form ---------------------------------------------------


def test_snf_identity():
    dec = smith_normal_form(IntegerMatrix.identity(3))
    assert dec.divisors == (1, 1, 1)


def test_snf_2x2_example():
    mat = [[2, 4], [2, 2]]
    dec = smith_normal_form(IntegerMatrix.from_rows(mat))
    assert dec.divisors == (2, 2)
    assert minor_gcd_divisors(mat) == [2, 2]


def test_snf_zero_matrix():
    dec = smith_normal_form(IntegerMatrix.zeros(2, 3))
    assert dec.divisors == ()
    assert dec.u == IntegerMatrix.identity(2)
    assert dec.v == IntegerMatrix.identity(3)


def test_snf_empty_matrices():
    for rows, cols in ((0, 0), (0, 3), (3, 0)):
        dec = smith_normal_form(IntegerMatrix.zeros(rows, cols))
        assert dec.divisors == ()


def test_snf_divisors_match_minor_gcds():
    rng = random.Random(42)
    for _ in range(60):
        mat = random_integer_matrix(rng, 4, 6)
        a = IntegerMatrix.from_rows(mat, cols=len(mat[0]) if mat else 0)
        assert list(smith_normal_form(a).divisors) == minor_gcd_divisors(mat)


def test_snf_random_reconstruction():
    assert run_snf_trials(200, seed=2024) == []


# -- rank ------------------------------------------------------------------


def test_rank_examples():
    two = IntegerMatrix.from_rows([[2]])
    assert rank_over(two, RATIONALS) == 1
    assert rank_over(two, prime_field(2)) == 0
    assert rank_over(IntegerMatrix.zeros(3, 2), RATIONALS) == 0
    assert rank_over(IntegerMatrix.zeros(3, 2), prime_field(5)) == 0


def test_rank_agreement_with_elimination():
    rng = random.Random(77)
    for _ in range(80):
        mat = random_integer_matrix(rng, 6, 9)
        a = IntegerMatrix.from_rows(mat, cols=len(mat[0]) if mat else 0)
        assert rank_over(a, RATIONALS) == bareiss_rank(mat)
        for p in (2, 3, 5):
            assert rank_over(a, prime_field(p)) == modp_rank(mat, p)


def test_rank_unsupported_rings():
    a = IntegerMatrix.identity(2)
    with pytest.raises(UnsupportedRingError):
        rank_over(a, mod_ring(4))
    with pytest.raises(UnsupportedRingError):
        rank_over(a, INTEGERS)
    # a prime modulus is a field, so rank is defined
    assert rank_over(a, mod_ring(3)) == 2


# -- solving -----------------------------------------------------------------


def test_solve_examples():
    one = IntegerMatrix.from_rows([[1]])
    two = IntegerMatrix.from_rows([[2]])
    assert solve_linear(one, [5], mod_ring(2)) == [1]
    assert solve_linear(two, [1], mod_ring(2)) is None
    assert solve_linear(two, [1], RATIONALS) == [Fraction(1, 2)]


def test_solve_integers_and_composite():
    two = IntegerMatrix.from_rows([[2]])
    assert solve_linear(two, [6], INTEGERS) == [3]
    assert solve_linear(two, [3], INTEGERS) is None
    x = solve_linear(two, [2], mod_ring(4))
    assert x is not None and (2 * x[0]) % 4 == 2
    assert solve_linear(two, [1], mod_ring(4)) is None


def test_solve_soundness_random():
    rng = random.Random(314)
    solved = 0
    unsolved = 0
    for _ in range(150):
        mat = random_integer_matrix(rng, 5, 6)
        if not mat or not mat[0]:
            continue
        a = IntegerMatrix.from_rows(mat)
        b = [rng.randint(-9, 9) for _ in range(a.rows)]
        for k in (RATIONALS, prime_field(2), prime_field(5), mod_ring(6), INTEGERS):
            x = solve_linear(a, b, k)
            if x is not None:
                solved += 1
                residual = a.mul_vector(x)
                assert all(k.is_zero(k.sub(r, t)) for r, t in zip(residual, b))
            else:
                unsolved += 1
                if k.tag == "prime_field":
                    p = k.n
                    aug = [row + [v] for row, v in zip(mat, b)]
                    assert modp_rank(aug, p) > modp_rank(mat, p)
                elif k.tag == "rationals":
                    aug = [row + [v] for row, v in zip(mat, b)]
                    assert bareiss_rank(aug) > bareiss_rank(mat)
    assert solved and unsolved


# -- kernels ---------------------------------------------------------------


def test_kernel_examples():
    assert kernel_basis(IntegerMatrix.identity(2), RATIONALS) == []
    assert kernel_basis(IntegerMatrix.from_rows([[2]]), prime_field(2)) == [[1]]


def test_kernel_size_and_membership():
    rng = random.Random(55)
    for _ in range(60):
        mat = random_integer_matrix(rng, 5, 7)
        a = IntegerMatrix.from_rows(mat, cols=len(mat[0]) if mat else 0)
        for k in (RATIONALS, prime_field(2), prime_field(3)):
            basis = kernel_basis(a, k)
            assert len(basis) == a.cols - rank_over(a, k)
            for vec in basis:
                assert all(k.is_zero(v) for v in a.mul_vector(vec))
                assert any(not k.is_zero(v) for v in vec)


# -- rings -------------------------------------------------------------------


def test_ring_strings():
    assert ring_from_string("q") == RATIONALS
    assert ring_from_string("gf:7") == prime_field(7)
    assert ring_from_string("mod:6") == mod_ring(6)
    assert prime_field(7).label() == "gf:7"
    with pytest.raises(InputError):
        ring_from_string("zz")
    with pytest.raises(InputError):
        ring_from_string("gf:x")


def test_ring_validation():
    with pytest.raises(UnsupportedRingError):
        prime_field(6)
    with pytest.raises(UnsupportedRingError):
        mod_ring(1)
    with pytest.raises(ValueError):
        Ring("weird")


def test_ring_arithmetic():
    m = mod_ring(5)
    assert m.add(3, 4) == 2
    assert m.sub(1, 3) == 3
    assert m.neg(2) == 3
    assert RATIONALS.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert m.is_zero(10)


def test_matrix_debug_dump():
    a = IntegerMatrix.from_rows([[1, -2], [0, 30]])
    assert a.dump() == "1 -2\n0 30"
