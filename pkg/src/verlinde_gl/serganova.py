"""Serganova's algorithm for classical GL(m|n) weights in characteristic p.

Weights here are pairs of nonincreasing integer vectors with no alcove
bound.  The positive odd roots eps_i - delta_j are processed in a linear
extension of the order (eps_i - delta_j precedes eps_a - delta_b when i >= a
and j <= b); at each step the root is subtracted iff the running weight
pairs with it to a nonzero residue mod p.  The terminal weight is the lowest
block-equivariant weight of the simple head of the Kac module.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .errors import ValidationError
from .fusion import check_prime

OddRoot = tuple[int, int]  # (i, j), both 1-indexed


def _check_monotone(mu: tuple[int, ...], nu: tuple[int, ...]) -> None:
    if not mu or not nu:
        raise ValidationError("both blocks must be nonempty")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValidationError(f"mu={mu} is not nonincreasing")
    if any(nu[j] < nu[j + 1] for j in range(len(nu) - 1)):
        raise ValidationError(f"nu={nu} is not nonincreasing")


def root_leq(r1: OddRoot, r2: OddRoot) -> bool:
    """r1 precedes r2 when their difference is a sum of positive roots."""
    return r1[0] >= r2[0] and r1[1] <= r2[1]


@lru_cache(maxsize=None)
def odd_root_order(m: int, n: int) -> tuple[OddRoot, ...]:
    """Canonical linear extension: j ascending, i descending."""
    if m < 1 or n < 1:
        raise ValidationError("block sizes must be positive")
    return tuple((i, j) for j in range(1, n + 1) for i in range(m, 0, -1))


def is_linear_extension(order: tuple[OddRoot, ...], m: int, n: int) -> bool:
    """Whether root_leq(order[i], order[j]) forces i <= j."""
    if sorted(order) != sorted(odd_root_order(m, n)):
        return False
    pos = {root: k for k, root in enumerate(order)}
    return all(
        pos[r1] <= pos[r2]
        for r1 in order
        for r2 in order
        if root_leq(r1, r2)
    )


def random_odd_root_order(m: int, n: int, rng: random.Random) -> tuple[OddRoot, ...]:
    """A random linear extension of the odd-root order."""
    remaining = set(odd_root_order(m, n))
    out: list[OddRoot] = []
    while remaining:
        minimal = [r for r in remaining if all(not root_leq(o, r) for o in remaining if o != r)]
        pick = rng.choice(sorted(minimal))
        out.append(pick)
        remaining.remove(pick)
    order = tuple(out)
    assert is_linear_extension(order, m, n)
    return order


def _pair_root(mu: tuple[int, ...], nu: tuple[int, ...], root: OddRoot) -> int:
    """<(mu|nu), eps_i - delta_j> under the signed form: mu_i + nu_j."""
    i, j = root
    return mu[i - 1] + nu[j - 1]


def rho_pair_root(m: int, n: int, root: OddRoot) -> int:
    """<rho, eps_i - delta_j> = m - i - j + 1, always an integer."""
    i, j = root
    two = (m - n - (2 * i - 1)) + (n + m - (2 * j - 1))
    assert two % 2 == 0
    return two // 2


def check_oddroot_lemma(m: int, n: int) -> bool:
    """Partial sums of the root order pair with the next root as -<rho, root>."""
    order = odd_root_order(m, n)
    for k in range(len(order)):
        i_k, j_k = order[k]
        lhs = 0
        for i, j in order[:k]:
            if i == i_k:
                lhs += 1
            if j == j_k:
                lhs -= 1
        if lhs != -rho_pair_root(m, n, order[k]):
            return False
    return True


def serganova_hat(
    mu: tuple[int, ...],
    nu: tuple[int, ...],
    p: int,
    order: tuple[OddRoot, ...] | None = None,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Terminal weight of the root-subtraction recursion."""
    check_prime(p)
    _check_monotone(mu, nu)
    m, n = len(mu), len(nu)
    if order is None:
        order = odd_root_order(m, n)
    cur_mu, cur_nu = list(mu), list(nu)
    for i, j in order:
        if (cur_mu[i - 1] + cur_nu[j - 1]) % p != 0:
            cur_mu[i - 1] -= 1
            cur_nu[j - 1] += 1
    return tuple(cur_mu), tuple(cur_nu)


def sh_nonzero(mu: tuple[int, ...], nu: tuple[int, ...], p: int) -> bool:
    """Degree-mn Shapovalov scalar nonzero: <lam + rho, root> != 0 mod p for all roots."""
    check_prime(p)
    _check_monotone(mu, nu)
    m, n = len(mu), len(nu)
    return all(
        (_pair_root(mu, nu, root) + rho_pair_root(m, n, root)) % p != 0
        for root in odd_root_order(m, n)
    )


def sum_odd_roots(m: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sum of all positive odd roots, split into blocks: (n,..,n | -m,..,-m)."""
    return (n,) * m, (-m,) * n
