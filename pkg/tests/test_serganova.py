import random

import pytest

from verlinde_gl.enumeration import monotone_tuples, residue_representatives
from verlinde_gl.errors import ValidationError
from verlinde_gl.serganova import (
    check_oddroot_lemma,
    is_linear_extension,
    odd_root_order,
    random_odd_root_order,
    serganova_hat,
    sh_nonzero,
    sum_odd_roots,
)


def test_odd_root_order_examples():
    assert odd_root_order(1, 1) == ((1, 1),)
    assert odd_root_order(2, 2) == ((2, 1), (1, 1), (2, 2), (1, 2))
    assert odd_root_order(2, 1) == ((2, 1), (1, 1))


def test_order_is_linear_extension():
    for m in range(1, 5):
        for n in range(1, 5):
            assert is_linear_extension(odd_root_order(m, n), m, n)
    assert not is_linear_extension(((1, 1), (2, 1)), 2, 1)


def test_oddroot_lemma_all_small_shapes():
    for m in range(1, 7):
        for n in range(1, 7):
            assert check_oddroot_lemma(m, n)


def test_serganova_hat_examples():
    assert serganova_hat((0,), (0,), 5) == ((0,), (0,))
    assert serganova_hat((1,), (0,), 5) == ((0,), (1,))
    # Conservation pins the final value; see the acceptance goldens.
    assert serganova_hat((18, 18, 15, 12, 12), (-13, -13, -17, -18), 11) == (
        (15, 15, 11, 10, 8),
        (-9, -9, -12, -15),
    )
    with pytest.raises(ValidationError):
        serganova_hat((0, 1), (0,), 5)


def test_sh_nonzero_examples():
    assert sh_nonzero((1,), (0,), 5)
    assert not sh_nonzero((0,), (0,), 5)


def test_hat_equals_full_subtraction_iff_sh_nonzero():
    for p in (5, 7):
        for m, n in ((1, 1), (1, 2), (2, 1), (2, 2)):
            full = sum_odd_roots(m, n)
            for mu in monotone_tuples(m, -p, p):
                for nu in monotone_tuples(n, -p, p):
                    want = (
                        tuple(x - full[0][i] for i, x in enumerate(mu)),
                        tuple(x - full[1][j] for j, x in enumerate(nu)),
                    )
                    assert sh_nonzero(mu, nu, p) == (serganova_hat(mu, nu, p) == want)


def test_order_independence_random():
    rng = random.Random(7)
    for p in (5, 7):
        for m, n in ((2, 2), (3, 2), (2, 3)):
            for mu in residue_representatives(m, p)[:: max(1, p)]:
                for nu in residue_representatives(n, p)[:: max(1, p * 2)]:
                    ref = serganova_hat(mu, nu, p)
                    for _ in range(3):
                        order = random_odd_root_order(m, n, rng)
                        assert serganova_hat(mu, nu, p, order) == ref


def test_degree_conservation():
    for p in (5, 7):
        for mu in monotone_tuples(2, -4, 4):
            for nu in monotone_tuples(2, -4, 4):
                hmu, hnu = serganova_hat(mu, nu, p)
                assert sum(hmu) + sum(hnu) == sum(mu) + sum(nu)
