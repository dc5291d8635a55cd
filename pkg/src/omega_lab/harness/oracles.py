"""Brute-force ground truth over raw (unnormalized) descriptions.

Nothing here touches canonical forms or the closed-form algorithms; each
function just unfolds a definition pointwise.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def raw_member(raw, n: int) -> bool:
    prefix, start, period, pattern = raw
    if n < start:
        return n in prefix
    return (n - start) % period in pattern


def raw_eval(raw, n: int) -> int:
    table, period, incr, base = raw
    s = len(table)
    if n < s:
        return table[n]
    return base[(n - s) % period] + incr * ((n - s) // period)


def decisive_window(*raws) -> int:
    """``2 * (max start + lcm of periods) + 64`` for raw EP sets."""
    return 2 * (max(r[1] for r in raws) + lcm(*(r[2] for r in raws))) + 64


def set_window(member, lo: int, hi: int) -> list[int]:
    return [n for n in range(lo, hi) if member(n)]


def compression(member, h, n: int) -> bool:
    return any(member(k) for k in range(h(n), h(n + 1)))


def tail_is_full(member, lo: int, period: int) -> bool:
    """All of ``[lo, lo+period)`` satisfy ``member``; with ``lo`` past every start
    and ``period`` a true period this decides cofiniteness."""
    return all(member(n) for n in range(lo, lo + period))


def slope(raw) -> Fraction:
    return Fraction(raw[2], raw[1])


def eventually_le(f, g, raw_f, raw_g) -> bool:
    """Slope comparison, then one aligned block far out."""
    sf, sg = slope(raw_f), slope(raw_g)
    if sf != sg:
        return sf < sg
    L = lcm(raw_f[1], raw_g[1])
    far = 10 ** 6 * L
    return all(f(n) <= g(n) for n in range(far, far + L))


def max_gap(member, lo: int, period: int) -> int:
    """Longest run of non-members (plus one) in a periodic window, scanning two periods."""
    hits = [n for n in range(lo, lo + 3 * period) if member(n)]
    return max(b - a for a, b in zip(hits, hits[1:]))
