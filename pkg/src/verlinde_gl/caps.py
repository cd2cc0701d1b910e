"""Cap diagrams and everything they compute: standard filtrations of
projectives, Kac composition factors, highest/lowest weights and the
relabeling between the two Borel orders of a two-block group.

Each cross is the source of exactly one cap, drawn clockwise to an empty
vertex.  The matching is produced by the walk: from an unmatched cross move
clockwise; an unmatched cross restarts the source, the first unmatched
circle closes the cap.  Caps are nested or disjoint, and no free circle sits
strictly inside a cap.

Swapping the cross of cap j with the circle at its tail is the involution
tau_j; it multiplies the label by t1^(-1) t2 exactly when the cap passes the
boundary between vertices p-1 and 0 (source > tail numerically).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import NamedTuple

from .diagrams import (
    CROSS,
    EMPTY,
    LEFT,
    RIGHT,
    WeightDiagram,
    decode,
    encode,
    mul_label,
    replace_symbols,
)
from .errors import ContractError
from .superweights import SuperWeight, beta
from .translation import act_on_sum, apply_functor


class Cap(NamedTuple):
    source: int
    tail: int


@dataclass(frozen=True)
class CapDiagram:
    """Caps in swap order (inner first) plus the circles left free."""

    base: WeightDiagram
    caps: tuple[Cap, ...]
    free_circles: frozenset[int]

    def cap_label_twist(self, j: int) -> tuple[int, int]:
        """(t1, t2) exponents gained by swapping along cap j."""
        cap = self.caps[j]
        return (-1, 1) if cap.source > cap.tail else (0, 0)


def _cw_interval(p: int, start: int, stop: int) -> list[int]:
    """Vertices strictly between start and stop, walking clockwise."""
    out = []
    k = (start + 1) % p
    while k != stop:
        out.append(k)
        k = (k + 1) % p
    return out


def cap_diagram(d: WeightDiagram) -> CapDiagram:
    """The unique cap matching of a diagram, with well-formedness asserted."""
    p = d.p
    matched_cross: dict[int, int] = {}
    used_circles: set[int] = set()
    unmatched = [k for k in range(p) if d.symbols[k] == CROSS]
    while unmatched:
        source = unmatched[0]
        k = source
        while True:
            k = (k + 1) % p
            sym = d.symbols[k]
            if sym == CROSS and k in unmatched:
                source = k
            elif sym == EMPTY and k not in used_circles:
                break
        matched_cross[source] = k
        used_circles.add(k)
        unmatched.remove(source)
    free = frozenset(
        k for k in range(p) if d.symbols[k] == EMPTY and k not in used_circles
    )
    caps = [Cap(s, z) for s, z in matched_cross.items()]
    # Swap order: a cap strictly inside another is strictly shorter, so
    # ascending clockwise length lists inner caps first.
    caps.sort(key=lambda c: (len(_cw_interval(p, c.source, c.tail)), c.source))
    out = CapDiagram(d, tuple(caps), free)
    _assert_well_formed(out)
    return out


def _assert_well_formed(cd: CapDiagram) -> None:
    d, p = cd.base, cd.base.p
    sources = {c.source for c in cd.caps}
    assert sources == {k for k in range(p) if d.symbols[k] == CROSS}
    assert all(d.symbols[c.tail] == EMPTY for c in cd.caps)
    spans = {
        c: {c.source, c.tail} | set(_cw_interval(p, c.source, c.tail)) for c in cd.caps
    }
    for c in cd.caps:
        inside = set(_cw_interval(p, c.source, c.tail))
        assert not (inside & cd.free_circles), f"free circle under cap {c}"
        for other in cd.caps:
            if other == c:
                continue
            a, b = spans[c], spans[other]
            assert a <= b or b <= a or not (a & b), f"caps {c} and {other} cross"


def is_inner(cd: CapDiagram, j: int) -> bool:
    """Whether no other cap is nested beneath cap j."""
    p = cd.base.p
    cap = cd.caps[j]
    inside = set(_cw_interval(p, cap.source, cap.tail))
    return not any(other.source in inside for other in cd.caps if other != cap)


def render_caps(cd: CapDiagram) -> str:
    """Fixed text form: 'caps: 9->0(inner), 6->1 free: 3,5'."""
    parts = [
        f"{c.source}->{c.tail}" + ("(inner)" if is_inner(cd, j) else "")
        for j, c in enumerate(cd.caps)
    ]
    text = "caps: " + (", ".join(parts) if parts else "none")
    return text + " free: " + ",".join(map(str, sorted(cd.free_circles)))


def _swap_subset(cd: CapDiagram, indices: tuple[int, ...]) -> WeightDiagram:
    d = cd.base
    moves: dict[int, str] = {}
    t1 = t2 = 0
    for j in indices:
        cap = cd.caps[j]
        moves[cap.source] = EMPTY
        moves[cap.tail] = CROSS
        dt1, dt2 = cd.cap_label_twist(j)
        t1 += dt1
        t2 += dt2
    return mul_label(replace_symbols(d, moves), t1=t1, t2=t2)


def p_set(lam: SuperWeight) -> set[SuperWeight]:
    """All 2^(cross count) weights reached by swapping subsets of caps."""
    cd = cap_diagram(encode(lam))
    out = set()
    r = len(cd.caps)
    for size in range(r + 1):
        for indices in combinations(range(r), size):
            out.add(decode(_swap_subset(cd, indices)))
    assert len(out) == 2**r
    return out


def projective_filtration(lam: SuperWeight) -> dict[SuperWeight, int]:
    """Standard-filtration multiplicities of the projective cover: 1 on p_set."""
    return {alpha: 1 for alpha in p_set(lam)}


def kac_composition(alpha: SuperWeight) -> set[SuperWeight]:
    """Labels lam with alpha in p_set(lam): the composition factors of K(alpha).

    Bounded inversion: move subsets of crosses of alpha's diagram backwards to
    empty vertices; a candidate survives when its own cap diagram sends each
    moved cross exactly back, which is then double-checked through p_set.
    """
    d = encode(alpha)
    p = d.p
    crosses = [k for k in range(p) if d.symbols[k] == CROSS]
    circles = [k for k in range(p) if d.symbols[k] == EMPTY]
    out = {alpha}
    cap_cache: dict[str, dict[int, int]] = {}
    for size in range(1, len(crosses) + 1):
        for moved in combinations(crosses, size):
            for targets in permutations(circles, size):
                wraps = sum(1 for z, u in zip(moved, targets) if u > z)
                cand = replace_symbols(
                    d,
                    {z: EMPTY for z in moved} | {u: CROSS for u in targets},
                )
                cand = mul_label(cand, t1=wraps, t2=-wraps)
                matched = cap_cache.get(cand.symbols)
                if matched is None:
                    matched = {c.source: c.tail for c in cap_diagram(cand).caps}
                    cap_cache[cand.symbols] = matched
                if all(matched.get(u) == z for z, u in zip(moved, targets)):
                    lam = decode(cand)
                    assert alpha in p_set(lam)
                    out.add(lam)
    return out


def hat(lam: SuperWeight) -> SuperWeight:
    """Image of all cap swaps: the highest weight of the projective cover."""
    cd = cap_diagram(encode(lam))
    return decode(_swap_subset(cd, tuple(range(len(cd.caps)))))


def lowest_weight(lam: SuperWeight) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lowest torus weight of the simple: hat(lam) - beta, as raw coordinates."""
    h = hat(lam)
    b = beta(lam.shape)
    m = lam.shape.m
    mu = tuple(h.mu[i] - b[i] for i in range(m))
    nu = tuple(h.nu[j] - b[m + j] for j in range(lam.shape.n))
    return mu, nu


def dual_simple(lam: SuperWeight) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Coordinates beta - hat(lam) labeling the dual simple.

    The raw vector is nondecreasing per block; its dominant representative
    (each block sorted descending) is the admissible label.
    """
    h = hat(lam)
    b = beta(lam.shape)
    m = lam.shape.m
    mu = tuple(b[i] - h.mu[i] for i in range(m))
    nu = tuple(b[m + j] - h.nu[j] for j in range(lam.shape.n))
    return mu, nu


def dual_simple_label(lam: SuperWeight) -> SuperWeight:
    """Admissible label of the dual: dominant representative of dual_simple."""
    mu, nu = dual_simple(lam)
    return SuperWeight(lam.shape, tuple(sorted(mu, reverse=True)), tuple(sorted(nu, reverse=True)))


def projective_word(lam: SuperWeight) -> tuple[SuperWeight, tuple[tuple[str, int], ...]]:
    """A typical base and translation steps rebuilding the projective cover.

    Returns (base, word) with word = ((kind, residue), ...) applied left to
    right, so that the classes of word[-1](..(word[0](K(base)))) sum over the
    standard filtration of P(lam).  Peels one inner cap per round: shuffle
    the cross next to its tail, merge it there, recurse, then append the
    adjoint steps in reverse.
    """
    word_rev: list[tuple[str, int]] = []
    d = encode(lam)
    while d.cross_count > 0:
        cd = cap_diagram(d)
        cap = cd.caps[0]
        p = d.p
        between = _cw_interval(p, cap.source, cap.tail)
        # Move the cross clockwise past each arrow; F hops '<', E hops '>'.
        steps_fwd = []
        cur = d
        pos = cap.source
        for v in between:
            arrow = cur.symbols[v]
            assert arrow in (LEFT, RIGHT), "inner cap spans arrows only"
            kind = "F" if arrow == LEFT else "E"
            (cur,) = apply_functor(kind, pos, cur).terms
            steps_fwd.append((kind, pos))
            pos = v
        # Merge (x o) -> (< >), dropping one cross.
        merged = apply_functor("F", pos, cur)
        assert len(merged) == 1
        nxt = merged.terms[0]
        assert nxt.cross_count == d.cross_count - 1
        # Rebuild: E at the merge vertex, then the adjoint shuffles in reverse.
        rebuild = [("E", pos)] + [("E" if k == "F" else "F", v) for k, v in reversed(steps_fwd)]
        word_rev = rebuild + word_rev
        d = nxt
    base = decode(d)
    return base, tuple(word_rev)


def replay_word(
    base: SuperWeight, word: tuple[tuple[str, int], ...]
) -> dict[SuperWeight, int]:
    """Apply a translation word to the Kac class of base, linearly."""
    classes: dict[WeightDiagram, int] = {encode(base): 1}
    for kind, i in word:
        classes = act_on_sum(kind, i, classes)
    return {decode(d): k for d, k in classes.items()}


def standard_to_sigma(lam: SuperWeight) -> SuperWeight:
    """Opposite-Borel highest-weight label of the same simple: hat - beta."""
    mu, nu = lowest_weight(lam)
    return SuperWeight(lam.shape, mu, nu)


def _mirror_cap_diagram(d: WeightDiagram) -> CapDiagram:
    """Cap matching of the reflected circle: walk counterclockwise."""
    p = d.p
    matched: dict[int, int] = {}
    used: set[int] = set()
    unmatched = [k for k in range(p) if d.symbols[k] == CROSS]
    while unmatched:
        source = unmatched[0]
        k = source
        while True:
            k = (k - 1) % p
            sym = d.symbols[k]
            if sym == CROSS and k in unmatched:
                source = k
            elif sym == EMPTY and k not in used:
                break
        matched[source] = k
        used.add(k)
        unmatched.remove(source)
    free = frozenset(k for k in range(p) if d.symbols[k] == EMPTY and k not in used)
    caps = [Cap(s, z) for s, z in matched.items()]
    caps.sort(key=lambda c: (len(_cw_interval(p, c.tail, c.source)), c.source))
    return CapDiagram(d, tuple(caps), free)


def sigma_to_standard(kappa: SuperWeight) -> SuperWeight:
    """Inverse of standard_to_sigma via the mirrored cap construction.

    The hat image is kappa + beta; each of its crosses is pulled back
    counterclockwise to its mirrored tail, undoing the label twists, and the
    roundtrip is verified.
    """
    b = beta(kappa.shape)
    m = kappa.shape.m
    h = SuperWeight(
        kappa.shape,
        tuple(kappa.mu[i] + b[i] for i in range(m)),
        tuple(kappa.nu[j] + b[m + j] for j in range(kappa.shape.n)),
    )
    d = encode(h)
    cd = _mirror_cap_diagram(d)
    moves: dict[int, str] = {}
    t1 = t2 = 0
    for cap in cd.caps:
        moves[cap.source] = EMPTY
        moves[cap.tail] = CROSS
        if cap.tail > cap.source:
            # Undoing a forward swap that crossed the p-1/0 boundary.
            t1 += 1
            t2 -= 1
    lam = decode(mul_label(replace_symbols(d, moves), t1=t1, t2=t2))
    if standard_to_sigma(lam) != kappa:
        raise ContractError(f"no standard-Borel preimage found for {kappa}")
    return lam
