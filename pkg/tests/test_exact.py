"""Exact-core tests: golden values from hand oracles, then the module's
stated invariants on random inputs."""

import random

import pytest

from distortion.exact import (
    IntMatrix,
    IntPoly,
    IntVector,
    char_poly,
    cyclotomic,
    cyclotomic_part,
    euler_phi,
    format_poly,
    is_partially_hyperbolic,
    mat_mul,
    mat_pow,
    matrix_from_json,
    matrix_to_json,
    poly_from_json,
    poly_to_json,
    quotient_module,
    smith_normal_form,
    solve_exact,
)
from helpers_oracle import max_root_modulus, random_unimodular

FIB = IntMatrix.from_rows([[2, 1], [1, 1]])


# --- multiplication and powers -------------------------------------------------

def test_mat_mul_identity():
    I2 = IntMatrix.identity(2)
    assert mat_mul(I2, I2).entries == I2.entries


def test_mat_mul_hand_values():
    assert mat_mul(FIB, FIB).entries == ((5, 3), (3, 2))
    A = IntMatrix.from_rows([[1, -1], [0, 1]])
    B = IntMatrix.from_rows([[1, 0], [-1, 1]])
    assert mat_mul(A, B).entries == ((2, -1), (-1, 1))


def test_mat_mul_shape_mismatch():
    with pytest.raises(ValueError):
        mat_mul(IntMatrix.identity(2), IntMatrix.identity(3))


def test_mat_pow():
    assert mat_pow(FIB, 0).is_identity()
    assert mat_pow(FIB, 3).entries == ((13, 8), (8, 5))
    shear = IntMatrix.from_rows([[1, 1], [0, 1]])
    assert mat_pow(shear, 5).entries == ((1, 5), (0, 1))
    # repeated-multiplication oracle
    acc = IntMatrix.identity(2)
    for _ in range(7):
        acc = mat_mul(acc, FIB)
    assert mat_pow(FIB, 7).entries == acc.entries


def test_mat_pow_negative():
    assert mat_mul(mat_pow(FIB, -2), mat_pow(FIB, 2)).is_identity()
    with pytest.raises(ValueError):
        mat_pow(IntMatrix.from_rows([[2, 0], [0, 1]]), -1)


def test_solve_exact_integrality():
    X = solve_exact(FIB, IntMatrix.identity(2))
    assert mat_mul(FIB, X).is_identity()
    assert solve_exact(IntMatrix.from_rows([[2, 0], [0, 2]]), IntMatrix.identity(2)) is None


# --- characteristic polynomials ------------------------------------------------

def test_char_poly_golden():
    assert char_poly(IntMatrix.identity(2)).coeffs == (1, -2, 1)
    assert char_poly(FIB).coeffs == (1, -3, 1)          # trace 3, det 1
    assert char_poly(IntMatrix.from_rows([[0, 1], [-1, 0]])).coeffs == (1, 0, 1)


def test_cayley_hamilton_on_random_matrices():
    rnd = random.Random(11)
    for _ in range(60):
        n = rnd.randint(1, 6)
        A = IntMatrix.from_rows([[rnd.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        p = char_poly(A)
        assert p.is_monic() and p.degree == n
        assert p.eval_matrix(A).is_zero()


# --- Smith normal form ----------------------------------------------------------

def test_snf_golden():
    assert smith_normal_form(IntMatrix.identity(3)).D.is_identity()
    assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])).diagonal() == (1, 6)
    assert smith_normal_form(IntMatrix.zero(2, 2)).D.is_zero()


def test_snf_random_invariants():
    rnd = random.Random(5)
    for _ in range(200):
        r, c = rnd.randint(1, 6), rnd.randint(1, 6)
        A = IntMatrix.from_rows([[rnd.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        res = smith_normal_form(A)
        assert mat_mul(mat_mul(res.U, A), res.V).entries == res.D.entries
        assert abs(res.U.det()) == 1
        assert abs(res.V.det()) == 1
        diag = res.diagonal()
        assert all(d >= 0 for d in diag)
        nonzero = [d for d in diag if d]
        assert diag[:len(nonzero)] == tuple(nonzero), "zeros must trail"
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        # off-diagonal must vanish
        for i, row in enumerate(res.D.entries):
            for j, x in enumerate(row):
                assert x == 0 or i == j


def test_snf_deterministic():
    A = IntMatrix.from_rows([[4, 6, 2], [2, 8, 4]])
    first = smith_normal_form(A)
    second = smith_normal_form(A)
    assert first.U.entries == second.U.entries
    assert first.V.entries == second.V.entries


# --- quotient modules -----------------------------------------------------------

def test_quotient_golden():
    q = quotient_module(3, IntMatrix.from_columns([(1, 0, 0)], 3))
    assert q.free_rank == 2 and q.torsion == ()
    q = quotient_module(2, IntMatrix.from_columns([(2, 0)], 2))
    assert q.free_rank == 1 and q.torsion == (2,)
    q = quotient_module(5, IntMatrix(tuple(() for _ in range(5)), 0))
    assert q.free_rank == 5 and q.torsion == ()


def test_quotient_projection_section():
    rnd = random.Random(3)
    for _ in range(50):
        n = rnd.randint(1, 6)
        k = rnd.randint(0, n)
        rel = IntMatrix.from_columns(
            [tuple(rnd.randint(-4, 4) for _ in range(n)) for _ in range(k)], n
        )
        q = quotient_module(n, rel)
        assert mat_mul(q.projection, q.section).is_identity()
        # relation generators have trivial free part
        for j in range(rel.cols):
            assert q.free_coords(rel.column(j)).is_zero()
            assert q.contains(rel.column(j))


def test_quotient_contains_divisibility():
    q = quotient_module(2, IntMatrix.from_columns([(2, 0)], 2))
    assert q.contains(IntVector((4, 0)))
    assert not q.contains(IntVector((1, 0)))
    assert not q.contains(IntVector((0, 3)))


# --- cyclotomic machinery -------------------------------------------------------

def test_cyclotomic_golden():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(2).coeffs == (1, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)


def test_cyclotomic_divides_x_d_minus_one():
    for d in range(1, 51):
        phi = cyclotomic(d)
        assert phi.degree == euler_phi(d)
        assert phi.divides(IntPoly.x_power_minus_one(d))


def test_cyclotomic_part_golden():
    q, r = cyclotomic_part(IntPoly((1, -2, 1)))            # (x-1)^2
    assert q.coeffs == (1, -2, 1) and r.is_one()
    q, r = cyclotomic_part(IntPoly((1, -3, 1)))
    assert q.is_one() and r.coeffs == (1, -3, 1)
    prod = IntPoly((1, -3, 1)) * IntPoly((-1, 1))
    q, r = cyclotomic_part(prod)
    assert q.coeffs == (-1, 1) and r.coeffs == (1, -3, 1)


def test_cyclotomic_part_properties():
    rnd = random.Random(9)
    for _ in range(40):
        M = random_unimodular(rnd, rnd.randint(2, 5), rnd.randint(0, 8))
        p = char_poly(M)
        q, r = cyclotomic_part(p)
        assert (q * r).coeffs == p.coeffs
        # r has no remaining cyclotomic factor
        for d in range(1, 2 * max(1, r.degree) ** 2 + 1):
            if euler_phi(d) <= r.degree:
                assert not cyclotomic(d).divides(r)


def test_cyclotomic_part_rejects_zero_root():
    with pytest.raises(ValueError):
        cyclotomic_part(IntPoly((0, 1)))


# --- partial hyperbolicity ------------------------------------------------------

def test_phyp_golden():
    assert not is_partially_hyperbolic(IntMatrix.identity(5))
    assert is_partially_hyperbolic(FIB)
    perm = IntMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert not is_partially_hyperbolic(perm)
    perm4 = IntMatrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert not is_partially_hyperbolic(perm4)


def test_phyp_rejects_non_unimodular():
    with pytest.raises(ValueError):
        is_partially_hyperbolic(IntMatrix.from_rows([[2, 0], [0, 1]]))


def test_phyp_agrees_with_float_oracle_sample():
    rnd = random.Random(17)
    for _ in range(120):
        M = random_unimodular(rnd, rnd.randint(2, 6), rnd.randint(0, 10))
        exact = is_partially_hyperbolic(M)
        numeric = max_root_modulus(char_poly(M).coeffs) > 1 + 1e-6
        assert exact == numeric, M.entries


# --- serialization ---------------------------------------------------------------

def test_matrix_json_roundtrip():
    obj = matrix_to_json(FIB)
    assert obj == {"rows": 2, "cols": 2, "entries": [["2", "1"], ["1", "1"]]}
    assert matrix_from_json(obj).entries == FIB.entries
    assert matrix_from_json([[2, 1], [1, 1]]).entries == FIB.entries


def test_poly_json_and_formatting():
    p = IntPoly((1, -3, 1))
    assert poly_to_json(p) == {"coeffs": ["1", "-3", "1"]}
    assert poly_from_json(poly_to_json(p)).coeffs == p.coeffs
    assert format_poly(p) == "x^2-3x+1"
    assert format_poly(IntPoly((1,))) == "1"
    assert format_poly(IntPoly(())) == "0"
