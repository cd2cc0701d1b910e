"""Weight arithmetic for GL(L_m | L_n), the two-block super convention.

A super weight (mu | nu) is a pair of admissible weights for GL_m and GL_n
with m + n < p, treated as a vector in Z^(m+n) when convenient.  The first m
coordinates pair positively under the bilinear form, the last n negatively.

Residue data: the ladders mu_i - i + 1 = a_i + p*s_i and
-m - nu_j + j = b_j + p*r_j (0 <= a_i, b_j < p) carry everything the
diagram calculus needs; s = sum(s_i) and r = sum(r_j) are the label
exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .alcove import is_admissible
from .errors import ValidationError
from .fusion import check_prime


@dataclass(frozen=True)
class SuperShape:
    """Block sizes (m, n) and the characteristic, with m + n < p."""

    m: int
    n: int
    p: int

    def __post_init__(self) -> None:
        check_prime(self.p)
        if self.m < 1 or self.n < 1:
            raise ValidationError(f"block sizes must be positive: ({self.m}, {self.n})")
        if self.m + self.n >= self.p:
            raise ValidationError(
                f"need m + n < p, got m={self.m}, n={self.n}, p={self.p}"
            )


@dataclass(frozen=True)
class SuperWeight:
    """A pair (mu | nu) of admissible weights labeling a simple/Kac/projective."""

    shape: SuperShape
    mu: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", tuple(self.mu))
        object.__setattr__(self, "nu", tuple(self.nu))
        sh = self.shape
        if not is_admissible(self.mu, sh.m, sh.p):
            raise ValidationError(f"mu={self.mu} not admissible for rank {sh.m}, p={sh.p}")
        if not is_admissible(self.nu, sh.n, sh.p):
            raise ValidationError(f"nu={self.nu} not admissible for rank {sh.n}, p={sh.p}")

    @property
    def vector(self) -> tuple[int, ...]:
        return self.mu + self.nu

    @property
    def degree(self) -> int:
        return sum(self.mu) + sum(self.nu)


def super_weight(p: int, mu: tuple[int, ...] | list[int], nu: tuple[int, ...] | list[int]) -> SuperWeight:
    """Convenience constructor inferring the shape from the part lengths."""
    return SuperWeight(SuperShape(len(mu), len(nu), p), tuple(mu), tuple(nu))


@dataclass(frozen=True)
class ResidueData:
    """Ladders, residues and label exponents of a super weight."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    s_parts: tuple[int, ...]
    r_parts: tuple[int, ...]
    s: int
    r: int


class Casimir(NamedTuple):
    value: int
    residue: int


def rho2(shape: SuperShape) -> tuple[int, ...]:
    """Twice the super half-sum: even positive roots minus odd positive roots."""
    m, n = shape.m, shape.n
    eps = tuple(m - n - (2 * i - 1) for i in range(1, m + 1))
    dlt = tuple(n + m - (2 * j - 1) for j in range(1, n + 1))
    return eps + dlt


def beta(shape: SuperShape) -> tuple[int, ...]:
    """Sum of all odd positive roots: (n,..,n | -m,..,-m)."""
    return (shape.n,) * shape.m + (-shape.m,) * shape.n


def form(u: tuple[int, ...], v: tuple[int, ...], shape: SuperShape) -> int:
    """Signed inner product: +1 on the first m coordinates, -1 on the last n."""
    k = shape.m + shape.n
    if len(u) != k or len(v) != k:
        raise ValidationError(f"vectors must have length {k}")
    plus = sum(u[i] * v[i] for i in range(shape.m))
    minus = sum(u[shape.m + j] * v[shape.m + j] for j in range(shape.n))
    return plus - minus


def odd_roots(shape: SuperShape) -> list[tuple[int, ...]]:
    """The mn vectors eps_i - delta_j, ordered by (i, j)."""
    m, n = shape.m, shape.n
    out = []
    for i in range(m):
        for j in range(n):
            v = [0] * (m + n)
            v[i] = 1
            v[m + j] = -1
            out.append(tuple(v))
    return out


def residue_data(lam: SuperWeight) -> ResidueData:
    """Residue ladders of (mu | nu); residues are distinct within each block."""
    sh = lam.shape
    p = sh.p
    a, s_parts = [], []
    for i, x in enumerate(lam.mu, start=1):
        c = x - i + 1
        ai = c % p
        a.append(ai)
        s_parts.append((c - ai) // p)
    b, r_parts = [], []
    for j, y in enumerate(lam.nu, start=1):
        c = -sh.m - y + j
        bj = c % p
        b.append(bj)
        r_parts.append((c - bj) // p)
    assert len(set(a)) == sh.m and len(set(b)) == sh.n
    return ResidueData(tuple(a), tuple(b), tuple(s_parts), tuple(r_parts), sum(s_parts), sum(r_parts))


def _pairing_with_root(lam: SuperWeight, i: int, j: int) -> int:
    """<lam + rho, eps_i - delta_j> computed in integers via 2*rho (1-indexed)."""
    sh = lam.shape
    two = tuple(2 * x for x in lam.vector)
    r2 = rho2(sh)
    vec = tuple(two[k] + r2[k] for k in range(sh.m + sh.n))
    root = [0] * (sh.m + sh.n)
    root[i - 1] = 1
    root[sh.m + j - 1] = -1
    val = form(vec, tuple(root), sh)
    assert val % 2 == 0
    return val // 2


def atypicality(lam: SuperWeight) -> int:
    """Number of odd roots pairing to zero mod p; equals the residue collisions.

    Computed both from the residue ladders and from the bilinear form, with
    the two routes asserted equal.
    """
    sh = lam.shape
    rd = residue_data(lam)
    by_residues = sum(1 for ai in rd.a for bj in rd.b if ai == bj)
    by_form = sum(
        1
        for i in range(1, sh.m + 1)
        for j in range(1, sh.n + 1)
        if _pairing_with_root(lam, i, j) % sh.p == 0
    )
    assert by_residues == by_form
    return by_residues


def is_typical(lam: SuperWeight) -> bool:
    """Atypicality zero; equivalently the Kac module with this label is simple."""
    return atypicality(lam) == 0


kac_irreducible = is_typical


def casimir_scalar(lam: SuperWeight) -> Casimir:
    """Casimir eigenvalue <lam + 2*rho, lam> on the Kac module, with residue."""
    sh = lam.shape
    r2 = rho2(sh)
    vec = tuple(lam.vector[k] + r2[k] for k in range(sh.m + sh.n))
    value = form(vec, lam.vector, sh)
    return Casimir(value, value % sh.p)


def casimir_unsuper(mu: tuple[int, ...], pi: tuple[int, ...], p: int) -> int:
    """Casimir on the two-block label (mu, pi) before the super convention.

    Standard scalar product <(mu, pi) + 2*rho^(m + p - n), (mu, pi)> in
    Z^(m + p - n); congruent mod p to the super Casimir of (mu | D(pi)).
    """
    check_prime(p)
    if not is_admissible(tuple(mu), len(mu), p):
        raise ValidationError(f"mu={tuple(mu)} not admissible for rank {len(mu)}, p={p}")
    if not is_admissible(tuple(pi), len(pi), p):
        raise ValidationError(f"pi={tuple(pi)} not admissible for rank {len(pi)}, p={p}")
    vec = tuple(mu) + tuple(pi)
    k = len(vec)
    r2 = tuple(k - (2 * i - 1) for i in range(1, k + 1))
    return sum((vec[i] + r2[i]) * vec[i] for i in range(k))


def dominance_leq(alpha: SuperWeight, lam: SuperWeight) -> bool:
    """alpha <= lam: equal total degree and |alpha_mu| <= |lam_mu|."""
    if alpha.shape != lam.shape:
        raise ValidationError("dominance needs equal shapes")
    return alpha.degree == lam.degree and sum(alpha.mu) <= sum(lam.mu)
