"""Fusion combinatorics of the semisimple Verlinde category Ver_p.

Simple objects are indexed 1..p-1 (the object with index n has categorical
dimension n).  Only the label-level data is modeled: fusion multiplicities,
parity (membership in the even subcategory) and duality, all of which are
determined by the truncated Clebsch-Gordan rule

    L_i (x) L_j  =  (+)_{k=1}^{min(i, j, p-i, p-j)}  L_{|i-j| + 2k - 1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError


def is_prime(p: int) -> bool:
    """Deterministic primality by trial division (inputs are desk-scale)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    """Validate the characteristic: an odd prime >= 5."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValidationError(f"p must be an integer, got {p!r}")
    if p < 5:
        raise ValidationError(f"p must be at least 5, got {p}")
    if not is_prime(p):
        raise ValidationError(f"p must be prime, got {p}")
    return p


@dataclass(frozen=True)
class PrimeP:
    """The characteristic p, validated once at construction."""

    p: int

    def __post_init__(self) -> None:
        check_prime(self.p)


def _as_p(p: PrimeP | int) -> int:
    return p.p if isinstance(p, PrimeP) else check_prime(p)


def check_simple_index(n: int, p: int) -> int:
    """Validate a simple-object index: 1 <= n <= p-1."""
    if not 1 <= n <= p - 1:
        raise ValidationError(f"simple-object index {n} out of range 1..{p - 1}")
    return n


def fuse_simples(i: int, j: int, p: PrimeP | int) -> list[int]:
    """Indices of the simple summands of L_i (x) L_j, sorted ascending.

    The rule never produces multiplicities above one, so a sorted list of
    distinct indices is a faithful multiset.
    """
    pp = _as_p(p)
    check_simple_index(i, pp)
    check_simple_index(j, pp)
    top = min(i, j, pp - i, pp - j)
    out = [abs(i - j) + 2 * k - 1 for k in range(1, top + 1)]
    assert len(set(out)) == len(out)
    assert all(1 <= n <= pp - 1 for n in out)
    return out


def is_even_object(n: int, p: PrimeP | int) -> bool:
    """Whether L_n lies in the even subcategory (odd categorical dimension)."""
    check_simple_index(n, _as_p(p))
    return n % 2 == 1


def dual_simple_index(n: int, p: PrimeP | int) -> int:
    """Index of the dual object.  Every L_n is self-dual."""
    check_simple_index(n, _as_p(p))
    return n
