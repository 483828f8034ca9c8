"""Admissibility of construction orders q = 2k - 1.

The character construction needs q to be an odd prime power with
q = 1 (mod 4), i.e. k odd.  Odd k where 2k - 1 is not an odd prime power
are labeled OPEN: no construction of this kind applies and existence of the
corresponding plane tuples is unsettled.  Even k (q = 3 mod 4) is excluded
outright because the matrix cannot be symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass


def factor_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, alpha) with n = p**alpha, else None."""
    if n < 2:
        return None
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            alpha = 0
            while m % f == 0:
                m //= f
                alpha += 1
            return (f, alpha) if m == 1 else None
        f += 1 if f == 2 else 2
    return (n, 1)


@dataclass(frozen=True)
class OrderInfo:
    k: int
    q: int
    status: str  # "admissible" | "open" | "excluded"
    p: int | None = None
    alpha: int | None = None
    reason: str = ""


def classify_order(k: int) -> OrderInfo:
    """Classify k: admissible (construction applies), open, or excluded."""
    q = 2 * k - 1
    if k < 3:
        return OrderInfo(k, q, "excluded", reason="k < 3")
    if k % 2 == 0:
        return OrderInfo(k, q, "excluded", reason="2k != 2 (mod 4)")
    pa = factor_prime_power(q)
    if pa is None:
        return OrderInfo(k, q, "open", reason="2k-1 not an odd prime power")
    p, alpha = pa
    return OrderInfo(k, q, "admissible", p=p, alpha=alpha)


def admissible_orders(max_q: int) -> list[OrderInfo]:
    """All admissible orders with q <= max_q, ascending."""
    out = []
    k = 3
    while 2 * k - 1 <= max_q:
        info = classify_order(k)
        if info.status == "admissible":
            out.append(info)
        k += 2
    return out
