"""Translation functors on weight diagrams and the loop-module oracle.

F_i and E_i act only on vertices i and i+1 (mod p): F_i moves arrows one
step in the direction they face, E_i against it.  Arrows are fermionic (two
arrows of one kind never share a vertex), and every move across the boundary
between vertices p-1 and 0 twists the label:

    '>' moved p-1 -> 0 gains t1^(-1);  '>' moved 0 -> p-1 gains t1.
    '<' moved p-1 -> 0 gains t2;       '<' moved 0 -> p-1 gains t2^(-1).

The same operators act on the tensor product of a wedge of residue vectors
(the mu block, label t1) and a dual wedge (the nu block, label t2).  Both
realizations are implemented independently; phi_equivariance_check compares
them term by term, labels included.
"""

from __future__ import annotations

from dataclasses import dataclass

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
from .errors import ContractError, ValidationError
from .superweights import SuperWeight, dominance_leq, residue_data

# Rewrite tables: (x, y) -> list of (new_x, new_y, dt1, dt2) with the label
# twist active only at i = p-1 (dt* are multiplied by that indicator).
_F_TABLE = {
    (RIGHT, EMPTY): [(EMPTY, RIGHT, -1, 0)],
    (EMPTY, LEFT): [(LEFT, EMPTY, 0, -1)],
    (RIGHT, LEFT): [(EMPTY, CROSS, -1, 0), (CROSS, EMPTY, 0, -1)],
    (CROSS, LEFT): [(LEFT, CROSS, -1, 0)],
    (RIGHT, CROSS): [(CROSS, RIGHT, 0, -1)],
    (CROSS, EMPTY): [(LEFT, RIGHT, -1, 0)],
    (EMPTY, CROSS): [(LEFT, RIGHT, 0, -1)],
}
_E_TABLE = {
    (LEFT, EMPTY): [(EMPTY, LEFT, 0, 1)],
    (EMPTY, RIGHT): [(RIGHT, EMPTY, 1, 0)],
    (LEFT, RIGHT): [(CROSS, EMPTY, 1, 0), (EMPTY, CROSS, 0, 1)],
    (CROSS, RIGHT): [(RIGHT, CROSS, 0, 1)],
    (LEFT, CROSS): [(CROSS, LEFT, 1, 0)],
    (CROSS, EMPTY): [(RIGHT, LEFT, 0, 1)],
    (EMPTY, CROSS): [(RIGHT, LEFT, 1, 0)],
}


@dataclass(frozen=True)
class DiagramSum:
    """Zero, one or two diagrams; two-term sums are ordered smaller-first."""

    terms: tuple[WeightDiagram, ...]

    def __post_init__(self) -> None:
        if len(self.terms) > 2:
            raise ValidationError("translation output has at most two terms")
        if len(self.terms) == 2:
            a, b = self.terms
            assert a.cross_count == b.cross_count
            assert dominance_leq(decode(a), decode(b))

    def __len__(self) -> int:
        return len(self.terms)


def _apply_table(table: dict, i: int, d: WeightDiagram) -> list[WeightDiagram]:
    p = d.p
    if not 0 <= i < p:
        raise ValidationError(f"residue {i} out of range 0..{p - 1}")
    j = (i + 1) % p
    eps = 1 if i == p - 1 else 0
    out = []
    for new_x, new_y, dt1, dt2 in table.get((d.symbols[i], d.symbols[j]), []):
        term = replace_symbols(d, {i: new_x, j: new_y})
        out.append(mul_label(term, t1=dt1 * eps, t2=dt2 * eps))
    return out


def _ordered(terms: list[WeightDiagram]) -> DiagramSum:
    if len(terms) == 2 and not dominance_leq(decode(terms[0]), decode(terms[1])):
        terms = [terms[1], terms[0]]
    return DiagramSum(tuple(terms))


def apply_F(i: int, d: WeightDiagram) -> DiagramSum:
    """F_i on a diagram: arrows at (i, i+1) step with their facing."""
    return _ordered(_apply_table(_F_TABLE, i, d))


def apply_E(i: int, d: WeightDiagram) -> DiagramSum:
    """E_i on a diagram: arrows at (i, i+1) step against their facing."""
    return _ordered(_apply_table(_E_TABLE, i, d))


def apply_functor(kind: str, i: int, d: WeightDiagram) -> DiagramSum:
    if kind == "F":
        return apply_F(i, d)
    if kind == "E":
        return apply_E(i, d)
    raise ValidationError(f"kind must be 'F' or 'E', got {kind!r}")


@dataclass(frozen=True)
class KacExtension:
    """Effect of a translation functor on a Kac class.

    One term: T K(lam) = K(quotient), sub is None.  Two terms: a short exact
    sequence 0 -> K(sub) -> T K(lam) -> K(quotient) -> 0 with
    quotient < sub in the degree dominance order.
    """

    quotient: SuperWeight
    sub: SuperWeight | None

    @property
    def terms(self) -> tuple[SuperWeight, ...]:
        return (self.quotient,) if self.sub is None else (self.quotient, self.sub)


def translate_kac(kind: str, i: int, lam: SuperWeight) -> KacExtension | None:
    """Kac-module image under F_i/E_i; None when the functor kills the class."""
    ds = apply_functor(kind, i, encode(lam))
    if len(ds) == 0:
        return None
    if len(ds) == 1:
        return KacExtension(decode(ds.terms[0]), None)
    lo, hi = decode(ds.terms[0]), decode(ds.terms[1])
    assert dominance_leq(lo, hi) and not dominance_leq(hi, lo)
    return KacExtension(lo, hi)


def translate_simple(kind: str, i: int, lam: SuperWeight) -> SuperWeight:
    """Candidate label of T L(lam) when the cross count does not increase.

    Caveat: the functor may send L(lam) to zero instead of L(result); the
    diagram calculus does not decide which, so the caller gets the unique
    candidate.  Raises ContractError outside the single-term regime.
    """
    d = encode(lam)
    ds = apply_functor(kind, i, d)
    if len(ds) == 0:
        raise ContractError("functor kills the diagram; no candidate simple")
    if len(ds) == 2 or ds.terms[0].cross_count > d.cross_count:
        raise ContractError("cross count increases; simple translation undefined")
    return decode(ds.terms[0])


def translate_projective(kind: str, i: int, lam: SuperWeight) -> SuperWeight:
    """Label of the indecomposable T P(lam) when the cross count does not drop.

    Two-term outputs pick the dominance-smaller weight.
    """
    d = encode(lam)
    ds = apply_functor(kind, i, d)
    if len(ds) == 0:
        raise ContractError("functor kills the diagram; no projective image")
    if ds.terms[0].cross_count < d.cross_count:
        raise ContractError("cross count drops; projective translation undefined")
    return decode(ds.terms[0])


@dataclass(frozen=True)
class LoopVector:
    """Basis tensor (wedge over a) t1^(-s) (x) (dual wedge over b) t2^r.

    Residues are stored in the weight order of residue_data; every super
    weight maps to coefficient +1, reordering signs being absorbed by
    convention.
    """

    p: int
    a: tuple[int, ...]
    s: int
    b: tuple[int, ...]
    r: int
    coeff: int = 1

    def __post_init__(self) -> None:
        if len(set(self.a)) != len(self.a) or len(set(self.b)) != len(self.b):
            raise ValidationError("wedge residues must be distinct within a factor")


def loop_vector(lam: SuperWeight) -> LoopVector:
    """The basis vector assigned to a super weight."""
    rd = residue_data(lam)
    return LoopVector(lam.shape.p, rd.a, rd.s, rd.b, rd.r)


def loop_f(c: int, v: LoopVector) -> list[LoopVector]:
    """Chevalley lowering at residue c: raise a c-residue in either factor.

    Wedge factor: a_i = c becomes c+1 (t1 twist at the affine wall).  Dual
    factor: b_j = c+1 becomes c (t2 twist).  Occupied targets vanish.
    """
    p = v.p
    if not 0 <= c < p:
        raise ValidationError(f"residue {c} out of range 0..{p - 1}")
    up, down = c, (c + 1) % p
    out = []
    if up in v.a and down not in v.a:
        a = tuple(down if x == up else x for x in v.a)
        out.append(LoopVector(p, a, v.s + (1 if c == p - 1 else 0), v.b, v.r, v.coeff))
    if down in v.b and up not in v.b:
        b = tuple(up if x == down else x for x in v.b)
        out.append(LoopVector(p, v.a, v.s, b, v.r - (1 if c == p - 1 else 0), v.coeff))
    return out


def loop_e(c: int, v: LoopVector) -> list[LoopVector]:
    """Chevalley raising at residue c, adjoint to loop_f."""
    p = v.p
    if not 0 <= c < p:
        raise ValidationError(f"residue {c} out of range 0..{p - 1}")
    up, down = c, (c + 1) % p
    out = []
    if down in v.a and up not in v.a:
        a = tuple(up if x == down else x for x in v.a)
        out.append(LoopVector(p, a, v.s - (1 if c == p - 1 else 0), v.b, v.r, v.coeff))
    if up in v.b and down not in v.b:
        b = tuple(down if x == up else x for x in v.b)
        out.append(LoopVector(p, v.a, v.s, b, v.r + (1 if c == p - 1 else 0), v.coeff))
    return out


def _loop_term_to_diagram(v: LoopVector) -> WeightDiagram:
    """Assemble the diagram carrying the same residue sets and label."""
    syms = []
    aset, bset = set(v.a), set(v.b)
    for k in range(v.p):
        ha, hb = k in aset, k in bset
        syms.append(CROSS if ha and hb else RIGHT if ha else LEFT if hb else EMPTY)
    return WeightDiagram(v.p, "".join(syms), v.s, v.r)


def phi_equivariance_check(lam: SuperWeight, c: int) -> bool:
    """Diagram action equals loop action at residue c, labels included.

    Both F and E are compared; terms are matched as decoded super weights.
    """
    d = encode(lam)
    v = loop_vector(lam)
    for kind, diag_terms, loop_terms in (
        ("F", apply_F(c, d).terms, loop_f(c, v)),
        ("E", apply_E(c, d).terms, loop_e(c, v)),
    ):
        del kind
        if any(t.coeff != 1 for t in loop_terms):
            return False
        lhs = sorted((t.symbols, t.s, t.r) for t in diag_terms)
        rhs_d = [_loop_term_to_diagram(t) for t in loop_terms]
        rhs = sorted((t.symbols, t.s, t.r) for t in rhs_d)
        if lhs != rhs:
            return False
        if sorted(map(decode, diag_terms), key=lambda w: w.vector) != sorted(
            map(decode, rhs_d), key=lambda w: w.vector
        ):
            return False
    return True


def act_on_sum(kind: str, i: int, classes: dict[WeightDiagram, int]) -> dict[WeightDiagram, int]:
    """Linear extension of F_i/E_i to integer combinations of diagrams."""
    out: dict[WeightDiagram, int] = {}
    for d, mult in classes.items():
        for term in apply_functor(kind, i, d).terms:
            out[term] = out.get(term, 0) + mult
    return {d: k for d, k in out.items() if k != 0}


def commutator_ef(a: int, b: int, d: WeightDiagram) -> dict[WeightDiagram, int]:
    """[e_a, f_b] applied to a basis diagram, as an exact formal sum."""
    out: dict[WeightDiagram, int] = {}
    for sign, first, second in ((1, ("F", b), ("E", a)), (-1, ("E", a), ("F", b))):
        mid = act_on_sum(first[0], first[1], {d: 1})
        for term, mult in act_on_sum(second[0], second[1], mid).items():
            out[term] = out.get(term, 0) + sign * mult
    return {t: k for t, k in out.items() if k != 0}


def commutator_same(kind: str, a: int, b: int, d: WeightDiagram) -> dict[WeightDiagram, int]:
    """[x_a, x_b] for x in {e, f} applied to a basis diagram."""
    out: dict[WeightDiagram, int] = {}
    for sign, first, second in ((1, b, a), (-1, a, b)):
        mid = act_on_sum(kind, first, {d: 1})
        for term, mult in act_on_sum(kind, second, mid).items():
            out[term] = out.get(term, 0) + sign * mult
    return {t: k for t, k in out.items() if k != 0}
