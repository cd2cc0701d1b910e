"""Simple-object combinatorics of the Verlinde category of GL_n.

Simples are labeled by admissible weights: nonincreasing integer vectors
lambda of length n with lambda_1 - lambda_n <= p - n (the fundamental
alcove).  This module implements box addition/removal by content residue,
tensoring with the vector object V, the invertible objects det / chi / psi,
level-rank duality between ranks n and p-n, and the dictionary sending a
simple to a wedge of residue basis vectors with a loop exponent.

Convention used throughout: the content ladder of lambda is the vector
c_i = lambda_i + 1 - i, which is strictly decreasing with total spread < p
for admissible lambda.  Writing c_i = a_i + p*s_i with 0 <= a_i < p gives
pairwise distinct residues a_i and the loop exponent s = sum(s_i).

Note on symmetric powers: S^k V vanishes for k = p - n + 1 (its dimension is
divisible by p), so chi = S^(p-n) V is the top nonzero symmetric power; no
symmetric-power operation is exposed beyond the chi construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .fusion import check_prime


def is_admissible(entries: tuple[int, ...] | list[int], n: int, p: int) -> bool:
    """Whether a length-n vector is nonincreasing with spread at most p-n."""
    if len(entries) != n:
        raise ValidationError(f"expected {n} entries, got {len(entries)}")
    if n < 1 or n > p - 1:
        raise ValidationError(f"rank {n} out of range 1..{p - 1}")
    if any(entries[i] < entries[i + 1] for i in range(n - 1)):
        return False
    return entries[0] - entries[-1] <= p - n


@dataclass(frozen=True)
class GLWeight:
    """An admissible highest weight for GL_n in characteristic p."""

    entries: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        check_prime(self.p)
        object.__setattr__(self, "entries", tuple(self.entries))
        if not is_admissible(self.entries, len(self.entries), self.p):
            raise ValidationError(
                f"{self.entries} is not admissible for rank {len(self.entries)}, p={self.p}"
            )

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def degree(self) -> int:
        return sum(self.entries)


@dataclass(frozen=True)
class WedgeVector:
    """Residues a_1..a_n (in weight order) and the loop exponent s."""

    residues: tuple[int, ...]
    loop_exponent: int
    p: int

    def __post_init__(self) -> None:
        if len(set(self.residues)) != len(self.residues):
            raise ValidationError(f"wedge residues must be distinct: {self.residues}")


@dataclass(frozen=True)
class InvertibleTriple:
    """The invertible objects det, chi and the degree-one generator psi."""

    det_weight: GLWeight
    chi_weight: GLWeight
    a: int
    b: int
    psi_weight: GLWeight


def _contents(entries: tuple[int, ...]) -> list[int]:
    return [entries[i] + 1 - (i + 1) for i in range(len(entries))]


def add_box(lam: GLWeight, c: int) -> GLWeight | None:
    """The admissible lam + e_i whose added box has content c mod p, if any.

    Uniqueness of the index i holds for every admissible weight; an empty
    result (alcove wall) is a value, not an error.
    """
    p, n = lam.p, lam.n
    c %= p
    hits = []
    for i, ci in enumerate(_contents(lam.entries)):
        if ci % p != c:
            continue
        cand = list(lam.entries)
        cand[i] += 1
        if is_admissible(tuple(cand), n, p):
            hits.append(tuple(cand))
    assert len(hits) <= 1, f"content {c} addable at several places in {lam.entries}"
    return GLWeight(hits[0], p) if hits else None


def remove_box(lam: GLWeight, c: int) -> GLWeight | None:
    """The admissible mu with add_box(mu, c) == lam, if any."""
    p, n = lam.p, lam.n
    c %= p
    hits = []
    for i in range(n):
        # Removed box of lam - e_i has content lam_i - (i+1) mod p.
        if (lam.entries[i] - (i + 1)) % p != c:
            continue
        cand = list(lam.entries)
        cand[i] -= 1
        if is_admissible(tuple(cand), n, p):
            hits.append(tuple(cand))
    assert len(hits) <= 1
    if not hits:
        return None
    mu = GLWeight(hits[0], p)
    back = add_box(mu, c)
    assert back is not None and back.entries == lam.entries
    return mu


def tensor_with_V(lam: GLWeight) -> list[GLWeight]:
    """Summands of V_lam (x) V: all admissible lam + e_i, in index order."""
    out = []
    for i in range(lam.n):
        cand = list(lam.entries)
        cand[i] += 1
        if is_admissible(tuple(cand), lam.n, lam.p):
            out.append(GLWeight(tuple(cand), lam.p))
    assert 1 <= len(out) <= lam.n
    return out


def phi_wedge(lam: GLWeight) -> WedgeVector:
    """Wedge-basis image of a simple: residues of the content ladder plus s."""
    p = lam.p
    residues = []
    s = 0
    for c in _contents(lam.entries):
        a = c % p
        residues.append(a)
        s += (c - a) // p
    return WedgeVector(tuple(residues), s, p)


def wedge_to_weight(residues: frozenset[int] | set[int], s: int, p: int) -> GLWeight:
    """Inverse of phi_wedge from the residue set and loop exponent.

    With s = n*q + k (0 <= k < n) the k smallest residues, sorted descending,
    head the ladder with offset p*(q+1); the rest follow with offset p*q.
    """
    n = len(residues)
    if n < 1 or n > p - 1:
        raise ValidationError(f"residue set size {n} out of range 1..{p - 1}")
    if any(not 0 <= a < p for a in residues):
        raise ValidationError(f"residues must lie in 0..{p - 1}: {sorted(residues)}")
    q, k = divmod(s, n)
    desc = sorted(residues, reverse=True)
    ladder = [desc[n - k + i] if i < k else desc[i - k] for i in range(n)]
    entries = tuple(
        ladder[i] - 1 + (i + 1) + p * (q + 1 if i < k else q) for i in range(n)
    )
    return GLWeight(entries, p)


def chi_rotate(lam: GLWeight, k: int) -> GLWeight:
    """Tensor k times with the invertible chi = S^{p-n}V (k < 0: with its dual).

    One forward step is the rotation lam -> (lam_n + p - n, lam_1, ..,
    lam_{n-1}); n steps add p-n to every entry, matching chi^n = det^{p-n}.
    """
    p, n = lam.p, lam.n
    entries = list(lam.entries)
    for _ in range(k if k > 0 else 0):
        entries = [entries[-1] + (p - n)] + entries[:-1]
    for _ in range(-k if k < 0 else 0):
        entries = entries[1:] + [entries[0] - (p - n)]
    return GLWeight(tuple(entries), p)


def det_power(n: int, p: int, a: int) -> GLWeight:
    """Weight of det^a: the constant vector (a, .., a)."""
    check_prime(p)
    if not 1 <= n <= p - 1:
        raise ValidationError(f"rank {n} out of range 1..{p - 1}")
    return GLWeight((a,) * n, p)


def psi_data(n: int, p: int) -> InvertibleTriple:
    """det, chi and the unique degree-one invertible psi = det^a (x) chi^b.

    (a, b) is the unique solution of a*n + b*(p-n) = 1 with 0 <= b < n,
    which exists since n and p-n are coprime.
    """
    check_prime(p)
    if not 1 <= n <= p - 1:
        raise ValidationError(f"rank {n} out of range 1..{p - 1}")
    det_w = det_power(n, p, 1)
    chi_w = GLWeight(((p - n),) + (0,) * (n - 1), p)
    b = next(b for b in range(n) if (1 - b * (p - n)) % n == 0)
    a = (1 - b * (p - n)) // n
    assert a * n + b * (p - n) == 1
    psi_w = chi_rotate(det_power(n, p, a), b)
    assert psi_w.degree == 1
    return InvertibleTriple(det_w, chi_w, a, b, psi_w)


def transpose_partition(parts: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    """Conjugate partition (nonnegative nonincreasing input, zeros allowed)."""
    if any(x < 0 for x in parts):
        raise ValidationError(f"partition entries must be nonnegative: {parts}")
    width = parts[0] if parts else 0
    return tuple(sum(1 for x in parts if x > j) for j in range(width))


def level_rank_D(lam: GLWeight) -> tuple[GLWeight, int]:
    """Level-rank image of a rank-n simple: a rank p-n weight and a parity.

    Shift to the polynomial weight mu = lam - lam_n*(1,..,1), transpose,
    read the transpose as a rank p-n weight and twist back by chi^{lam_n}.
    The parity is deg(lam) mod 2 (the super-twist bookkeeping).
    """
    p, n = lam.p, lam.n
    base = lam.entries[-1]
    mu = tuple(x - base for x in lam.entries)
    mt = transpose_partition(mu)
    assert len(mt) <= p - n
    image = GLWeight(mt + (0,) * (p - n - len(mt)), p)
    return chi_rotate(image, base), lam.degree % 2


def level_rank_D_inverse(kappa: GLWeight) -> tuple[GLWeight, int]:
    """Preimage under level-rank duality, realized at the complementary rank."""
    lam, parity = level_rank_D(kappa)
    back, _ = level_rank_D(lam)
    assert back.entries == kappa.entries
    return lam, parity


def level_rank_degree_zero(lam: GLWeight) -> GLWeight:
    """Independent degree-zero oracle: transpose the positive/negative parts.

    A degree-zero weight is the pair (alpha, beta) of its positive parts and
    negated-reversed negative parts; the image is the weight assembled from
    (alpha^t, beta^t) at rank p-n.
    """
    if lam.degree != 0:
        raise ValidationError("degree-zero oracle needs a degree-zero weight")
    p, n = lam.p, lam.n
    alpha = tuple(x for x in lam.entries if x > 0)
    beta = tuple(-x for x in reversed(lam.entries) if x < 0)
    at, bt = transpose_partition(alpha), transpose_partition(beta)
    rank = p - n
    assert len(at) + len(bt) <= rank
    entries = at + (0,) * (rank - len(at) - len(bt)) + tuple(-x for x in reversed(bt))
    return GLWeight(entries, p)
