"""Relabeling of simple GL(X)-modules between Borel subgroups.

X decomposes into simple summands X_1, .., X_k with types (dimensions) read
off a shape; the canonical arrangement lists types nondecreasing.  A
permutation w places summand i at position w(i) and thereby picks a Borel;
borel_translate converts a w-highest-weight label into the standard one.

Permutations of equal-type summands act by plain entry permutation.  An
adjacent swap of distinct types (m, r), m < r, is an odd reflection: the
two affected parts are bridged into a super label (mu | nu) of
GL(L_m | L_n), n = p - r, through level-rank duality on the rank-r part,
and converted with the lowest-weight machinery of the caps module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alcove import GLWeight, level_rank_D, level_rank_D_inverse
from .caps import sigma_to_standard, standard_to_sigma
from .errors import ContractError, ValidationError
from .fusion import check_prime
from .superweights import SuperShape, SuperWeight

# A Borel choice: w[i] is the 0-indexed position of summand i.
BorelPermutation = tuple[int, ...]


@dataclass(frozen=True)
class GLXShape:
    """Summand types of X = X_1 + .. + X_k, each in 1..p-1."""

    p: int
    types: tuple[int, ...]

    def __post_init__(self) -> None:
        check_prime(self.p)
        if not self.types:
            raise ValidationError("shape needs at least one summand")
        if any(not 1 <= t <= self.p - 1 for t in self.types):
            raise ValidationError(f"types must lie in 1..{self.p - 1}: {self.types}")

    @property
    def k(self) -> int:
        return len(self.types)

    @property
    def is_canonical(self) -> bool:
        return all(self.types[i] <= self.types[i + 1] for i in range(self.k - 1))

    def blocks(self) -> list[range]:
        """Maximal runs of equal type, as index ranges."""
        out = []
        start = 0
        for i in range(1, self.k + 1):
            if i == self.k or self.types[i] != self.types[start]:
                out.append(range(start, i))
                start = i
        return out


@dataclass(frozen=True)
class TupleWeight:
    """One admissible part per summand, part i of rank types[i]."""

    shape: GLXShape
    parts: tuple[GLWeight, ...]

    def __post_init__(self) -> None:
        if len(self.parts) != self.shape.k:
            raise ValidationError(f"expected {self.shape.k} parts, got {len(self.parts)}")
        for i, part in enumerate(self.parts):
            if part.p != self.shape.p:
                raise ValidationError("part characteristic differs from the shape")
            if part.n != self.shape.types[i]:
                raise ValidationError(
                    f"part {i} has rank {part.n}, summand type is {self.shape.types[i]}"
                )

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(part.degree for part in self.parts)


def check_permutation(w: tuple[int, ...], k: int) -> tuple[int, ...]:
    """w[i] is the (0-indexed) position of summand i; must be a bijection."""
    if sorted(w) != list(range(k)):
        raise ValidationError(f"{w} is not a permutation of 0..{k - 1}")
    return tuple(w)


def _inverse(w: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, pos in enumerate(w):
        inv[pos] = i
    return tuple(inv)


def is_w_dominant(vec: tuple[int, ...], w: tuple[int, ...]) -> bool:
    """Whether a character is nonincreasing when read in position order."""
    inv = _inverse(check_permutation(w, len(vec)))
    read = [vec[inv[q]] for q in range(len(vec))]
    return all(read[q] >= read[q + 1] for q in range(len(read) - 1))


def w_dominance_leq(mu: TupleWeight, lam: TupleWeight, w: tuple[int, ...]) -> bool:
    """mu <=_w lam: the difference of degree characters is w-dominant."""
    if mu.shape != lam.shape:
        raise ValidationError("tuple weights must share a shape")
    diff = tuple(a - b for a, b in zip(lam.degrees, mu.degrees))
    return is_w_dominant(diff, w)


def w_integrable(lam: TupleWeight, w: tuple[int, ...]) -> bool:
    """Within every isotypic block, degrees read in w-position order are nonincreasing."""
    if not lam.shape.is_canonical:
        raise ValidationError("integrability lives on the canonical arrangement")
    check_permutation(w, lam.shape.k)
    for block in lam.shape.blocks():
        members = sorted(block, key=lambda i: w[i])
        degs = [lam.parts[i].degree for i in members]
        if any(degs[q] < degs[q + 1] for q in range(len(degs) - 1)):
            return False
    return True


def conjugate_relabel(lam: TupleWeight, w: tuple[int, ...]) -> TupleWeight:
    """Standard label for a block-preserving w: position q gets part w^-1(q)."""
    shape = lam.shape
    w = check_permutation(w, shape.k)
    if any(shape.types[i] != shape.types[w[i]] for i in range(shape.k)):
        raise ContractError("w moves a summand across isotypic blocks")
    if not w_integrable(lam, w):
        raise ContractError("weight is not w-integrable")
    inv = _inverse(w)
    return TupleWeight(shape, tuple(lam.parts[inv[q]] for q in range(shape.k)))


def _pair_to_super(small: GLWeight, big: GLWeight) -> SuperWeight:
    """Bridge a (rank m, rank r) pair, m < r, to the GL(L_m | L_n) label."""
    p = small.p
    m, r = small.n, big.n
    nu, _parity = level_rank_D(big)
    return SuperWeight(SuperShape(m, p - r, p), small.entries, nu.entries)


def _super_to_pair(lam: SuperWeight) -> tuple[GLWeight, GLWeight]:
    """Inverse bridge: (mu | nu) back to (rank m, rank p-n) parts."""
    p = lam.shape.p
    big, _parity = level_rank_D_inverse(GLWeight(lam.nu, p))
    return GLWeight(lam.mu, p), big


def odd_reflect_pair(
    small: GLWeight, big: GLWeight, direction: str
) -> tuple[GLWeight, GLWeight]:
    """Relabel a two-summand simple across the odd reflection.

    Inputs and outputs are in summand convention (small-type part first).
    direction 'to_sigma': the input labels the standard order (small type
    first); the output labels the swapped Borel.  direction 'to_standard':
    the inverse.
    """
    if small.p != big.p:
        raise ValidationError("parts must share the characteristic")
    if small.n >= big.n:
        raise ValidationError("odd reflection needs distinct types, small first")
    if direction == "to_sigma":
        image = standard_to_sigma(_pair_to_super(small, big))
    elif direction == "to_standard":
        image = sigma_to_standard(_pair_to_super(small, big))
    else:
        raise ValidationError(f"direction must be 'to_sigma' or 'to_standard', got {direction!r}")
    return _super_to_pair(image)


def _swap_adjacent(
    entries: list[tuple[int, GLWeight]], q: int, shape: GLXShape
) -> None:
    """Swap the summands at positions q, q+1, relabeling the two parts."""
    (i, x), (j, y) = entries[q], entries[q + 1]
    ti, tj = shape.types[i], shape.types[j]
    if ti == tj:
        entries[q], entries[q + 1] = (j, x), (i, y)
    elif ti > tj:
        # Current order is the sigma order of the pair (small type tj last).
        small, big = odd_reflect_pair(y, x, "to_standard")
        entries[q], entries[q + 1] = (j, small), (i, big)
    else:
        small, big = odd_reflect_pair(x, y, "to_sigma")
        entries[q], entries[q + 1] = (j, big), (i, small)


def borel_translate(
    lam: TupleWeight, w: tuple[int, ...], *, rightmost_first: bool = False
) -> TupleWeight:
    """Standard-Borel label of the simple with w-highest weight lam.

    Sorts the w-arrangement back to canonical by adjacent swaps; equal-type
    swaps exchange entries, unequal-type swaps apply the odd reflection.
    rightmost_first picks a different reduced factorization of w (used by the
    well-definedness probe); the result should not depend on it.
    """
    shape = lam.shape
    if not shape.is_canonical:
        raise ValidationError("borel_translate expects the canonical arrangement")
    w = check_permutation(w, shape.k)
    if not w_integrable(lam, w):
        raise ContractError("weight is not w-integrable")
    inv = _inverse(w)
    entries = [(inv[q], lam.parts[inv[q]]) for q in range(shape.k)]
    while True:
        inversions = [
            q for q in range(shape.k - 1) if entries[q][0] > entries[q + 1][0]
        ]
        if not inversions:
            break
        _swap_adjacent(entries, inversions[-1] if rightmost_first else inversions[0], shape)
    assert [i for i, _ in entries] == list(range(shape.k))
    return TupleWeight(shape, tuple(part for _, part in entries))
