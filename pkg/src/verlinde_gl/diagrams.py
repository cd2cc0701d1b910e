"""Circular weight diagrams: the codec between super weights and symbol circles.

A diagram places one of four symbols on each of the p vertices of a circle
(numbered 0..p-1 clockwise) and carries a label t1^(-s) t2^(r):

    'o'  empty vertex
    '>'  clockwise arrow   (a residue of the mu-ladder only)
    '<'  counterclockwise arrow  (a residue of the nu-ladder only)
    'x'  both ladders hit the vertex (a cross)

Crosses count the atypicality.  The canonical storage always starts at
vertex 0; cutting at another vertex is a view used for rendering.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ValidationError
from .fusion import check_prime
from .superweights import SuperShape, SuperWeight, residue_data

EMPTY, LEFT, RIGHT, CROSS = "o", "<", ">", "x"
_SYMBOLS = frozenset((EMPTY, LEFT, RIGHT, CROSS))


@dataclass(frozen=True)
class WeightDiagram:
    """Symbols at vertices 0..p-1 plus the label exponents (s, r)."""

    p: int
    symbols: str
    s: int
    r: int

    def __post_init__(self) -> None:
        check_prime(self.p)
        if len(self.symbols) != self.p:
            raise ValidationError(f"need {self.p} symbols, got {len(self.symbols)}")
        bad = set(self.symbols) - _SYMBOLS
        if bad:
            raise ValidationError(f"unknown symbols {sorted(bad)}")
        if self.m < 1 or self.n < 1 or self.m + self.n >= self.p:
            raise ValidationError(
                f"symbol counts m={self.m}, n={self.n} invalid for p={self.p}"
            )

    @property
    def m(self) -> int:
        return self.symbols.count(RIGHT) + self.symbols.count(CROSS)

    @property
    def n(self) -> int:
        return self.symbols.count(LEFT) + self.symbols.count(CROSS)

    @property
    def cross_count(self) -> int:
        return self.symbols.count(CROSS)

    def label(self) -> tuple[int, int]:
        """Exponents (e1, e2) of the label monomial t1^e1 t2^e2."""
        return (-self.s, self.r)


class CutDiagram(NamedTuple):
    """Linearized view: symbols read clockwise from the cut vertex."""

    symbols: str
    cut: int
    e1: int
    e2: int


def _encode_raw(mu: tuple[int, ...], nu: tuple[int, ...], m: int, n: int, p: int) -> tuple[str, int, int]:
    """Codec hot path on plain tuples; see superweights.residue_data."""
    a_mask = 0
    s = 0
    for i in range(m):
        c = mu[i] - i
        ai = c % p
        a_mask |= 1 << ai
        s += (c - ai) // p
    b_mask = 0
    r = 0
    for j in range(n):
        c = -m - nu[j] + j + 1
        bj = c % p
        b_mask |= 1 << bj
        r += (c - bj) // p
    syms = []
    for k in range(p):
        hit_a = a_mask >> k & 1
        hit_b = b_mask >> k & 1
        syms.append(CROSS if hit_a and hit_b else RIGHT if hit_a else LEFT if hit_b else EMPTY)
    return "".join(syms), s, r


def _decode_mu_part(a_desc: list[int], s: int, p: int) -> tuple[int, ...]:
    """First block from its residue set (sorted descending) and exponent s.

    With s = m*q + k the k smallest residues, descending, head the ladder
    with offset p*(q+1); the remaining residues follow with offset p*q.
    """
    m = len(a_desc)
    q, k0 = divmod(s, m)
    mu = []
    for i in range(1, m + 1):
        ai = a_desc[m - k0 + i - 1] if i <= k0 else a_desc[i - k0 - 1]
        si = q + 1 if i <= k0 else q
        mu.append(i - 1 + ai + p * si)
    return tuple(mu)


def _decode_nu_part(b_asc: list[int], r: int, m: int, p: int) -> tuple[int, ...]:
    """Second block from its residue set (sorted ascending), exponent r and m."""
    n = len(b_asc)
    rq, l0 = divmod(r, n)
    nu = []
    for j in range(1, n + 1):
        bj = b_asc[l0 + j - 1] if j <= n - l0 else b_asc[j + l0 - n - 1]
        rj = rq + 1 if j > n - l0 else rq
        nu.append(-m + j - (bj + p * rj))
    return tuple(nu)


def _decode_raw(symbols: str, s: int, r: int, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Recover (mu, nu) from symbols and label exponents."""
    a_set = [k for k in range(p) if symbols[k] in (RIGHT, CROSS)]
    b_set = [k for k in range(p) if symbols[k] in (LEFT, CROSS)]
    mu = _decode_mu_part(sorted(a_set, reverse=True), s, p)
    nu = _decode_nu_part(sorted(b_set), r, len(a_set), p)
    return mu, nu


def encode(lam: SuperWeight) -> WeightDiagram:
    """Diagram of a super weight: crosses at shared residues, label from (s, r)."""
    sh = lam.shape
    symbols, s, r = _encode_raw(lam.mu, lam.nu, sh.m, sh.n, sh.p)
    d = WeightDiagram(sh.p, symbols, s, r)
    rd = residue_data(lam)
    assert (d.s, d.r) == (rd.s, rd.r)
    return d


def decode(d: WeightDiagram, m: int | None = None, n: int | None = None) -> SuperWeight:
    """The unique super weight encoding to d.

    If m or n are supplied they are checked against the symbol counts.
    """
    if m is not None and d.m != m:
        raise ValidationError(f"diagram carries m={d.m} right-arrows, expected {m}")
    if n is not None and d.n != n:
        raise ValidationError(f"diagram carries n={d.n} left-arrows, expected {n}")
    mu, nu = _decode_raw(d.symbols, d.s, d.r, d.p)
    return SuperWeight(SuperShape(d.m, d.n, d.p), mu, nu)


def mul_label(d: WeightDiagram, t1: int = 0, t2: int = 0) -> WeightDiagram:
    """Multiply the label by t1^t1 t2^t2 (label is t1^(-s) t2^r)."""
    return WeightDiagram(d.p, d.symbols, d.s - t1, d.r + t2)


def replace_symbols(d: WeightDiagram, assignments: dict[int, str]) -> WeightDiagram:
    """Diagram with the symbols at the given vertices replaced."""
    syms = list(d.symbols)
    for k, sym in assignments.items():
        syms[k % d.p] = sym
    return WeightDiagram(d.p, "".join(syms), d.s, d.r)


def cut(d: WeightDiagram, k: int) -> CutDiagram:
    """Read the circle clockwise starting at vertex k."""
    if not 0 <= k < d.p:
        raise ValidationError(f"cut vertex {k} out of range 0..{d.p - 1}")
    e1, e2 = d.label()
    return CutDiagram(d.symbols[k:] + d.symbols[:k], k, e1, e2)


def render_ascii(d: WeightDiagram, k: int = 0) -> str:
    """Fixed single-line text form, e.g. 'o<ox>>x<oo> @3 t1^-3 t2^2'."""
    c = cut(d, k)
    return f"{c.symbols} @{c.cut} t1^{c.e1} t2^{c.e2}"


def permute(sigma: dict[int, int], d: WeightDiagram) -> WeightDiagram:
    """Relocate symbols by (sigma f)(k) = f(sigma(k)); the label is untouched."""
    p = d.p
    if sorted(sigma) != list(range(p)) or sorted(sigma.values()) != list(range(p)):
        raise ValidationError("sigma must be a bijection of 0..p-1")
    syms = "".join(d.symbols[sigma[k]] for k in range(p))
    return WeightDiagram(p, syms, d.s, d.r)


def to_json(d: WeightDiagram) -> str:
    """Canonical JSON form {p, symbols, s, r} with symbols as one-char strings."""
    return json.dumps(
        {"p": d.p, "symbols": list(d.symbols), "s": d.s, "r": d.r},
        sort_keys=True,
        separators=(",", ":"),
    )


def from_json(text: str) -> WeightDiagram:
    try:
        obj = json.loads(text)
        return WeightDiagram(int(obj["p"]), "".join(obj["symbols"]), int(obj["s"]), int(obj["r"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"malformed diagram JSON: {exc}") from exc
