"""Weight-window enumeration shared by the test suites and the CLI selfcheck.

Windows are inclusive integer intervals [lo, hi] applied entrywise.  The
default window for a characteristic p is [-p, p], covering every residue
pattern a width-2p window can produce.
"""

from __future__ import annotations

from typing import Iterator

from .fusion import check_prime


def default_window(p: int) -> tuple[int, int]:
    return (-p, p)


def admissible_tuples(rank: int, p: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """All nonincreasing tuples in [lo, hi]^rank with spread at most p - rank."""
    check_prime(p)
    spread = p - rank
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int]) -> None:
        if len(prefix) == rank:
            out.append(tuple(prefix))
            return
        upper = prefix[-1] if prefix else hi
        lower = max(lo, (prefix[0] - spread) if prefix else lo)
        for x in range(upper, lower - 1, -1):
            prefix.append(x)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def monotone_tuples(rank: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """All nonincreasing tuples in [lo, hi]^rank (no spread bound)."""
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int]) -> None:
        if len(prefix) == rank:
            out.append(tuple(prefix))
            return
        upper = prefix[-1] if prefix else hi
        for x in range(upper, lo - 1, -1):
            prefix.append(x)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def super_shapes(p: int, max_m: int | None = None, max_n: int | None = None) -> list[tuple[int, int]]:
    """All (m, n) with m, n >= 1 and m + n < p, within optional caps."""
    check_prime(p)
    out = []
    for m in range(1, p - 1):
        if max_m is not None and m > max_m:
            break
        for n in range(1, p - m):
            if max_n is not None and n > max_n:
                break
            out.append((m, n))
    return out


def super_suite(
    p: int, window: tuple[int, int] | None = None, shapes: list[tuple[int, int]] | None = None
) -> Iterator[tuple[int, int, tuple[int, ...], tuple[int, ...]]]:
    """Yield (m, n, mu, nu) over all shapes and windowed admissible pairs."""
    lo, hi = window if window is not None else default_window(p)
    for m, n in shapes if shapes is not None else super_shapes(p):
        mus = admissible_tuples(m, p, lo, hi)
        nus = admissible_tuples(n, p, lo, hi)
        for mu in mus:
            for nu in nus:
                yield m, n, mu, nu


def residue_representatives(rank: int, p: int) -> list[tuple[int, ...]]:
    """One monotone representative per residue tuple in [0, p)^rank.

    Entrywise residues determine the whole Serganova/Shapovalov dynamics;
    the representative keeps each entry in (prev - p, prev].
    """
    check_prime(p)
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], residues: list[int]) -> None:
        if len(residues) == rank:
            out.append(tuple(prefix))
            return
        for c in range(p):
            if prefix:
                x = prefix[-1] - ((prefix[-1] - c) % p)
            else:
                x = c
            prefix.append(x)
            residues.append(c)
            extend(prefix, residues)
            prefix.pop()
            residues.pop()

    extend([], [])
    assert len(out) == p**rank
    return out
