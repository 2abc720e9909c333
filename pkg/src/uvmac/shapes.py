"""Partitions, compositions and the normalisation Omega_lambda(q, t)."""

from __future__ import annotations

from collections import Counter
from math import factorial, prod

from .exactalg import ONE, RatFunc

Composition = tuple
Partition = tuple


def parse_parts(text: str) -> tuple:
    """Parse ``"4,3,3,1"`` into a tuple of non-negative integers."""
    try:
        parts = tuple(int(p) for p in text.replace(" ", "").split(",") if p != "")
    except ValueError as exc:
        raise ValueError(f"malformed partition/composition {text!r}") from exc
    if not parts or any(p < 0 for p in parts):
        raise ValueError(f"malformed partition/composition {text!r}")
    return parts


def pad(parts: tuple, n: int) -> tuple:
    """Pad with zeros (or check trailing zeros can be dropped) to length n."""
    parts = tuple(parts)
    if len(parts) > n:
        if any(parts[n:]):
            raise ValueError(f"{parts} has more than {n} non-zero parts")
        return parts[:n]
    return parts + (0,) * (n - len(parts))


def is_partition(parts: tuple) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(p >= 0 for p in parts)


def sort_to_partition(mu: Composition) -> Partition:
    return tuple(sorted(mu, reverse=True))


def rank(mu: Composition) -> int:
    return max(mu, default=0)


def multiplicity(mu: Composition, i: int) -> int:
    if i < 1:
        raise ValueError("multiplicity index must be >= 1")
    return sum(1 for p in mu if p == i)


def multiplicities(mu: Composition) -> tuple:
    """(m_1, ..., m_r) for r = max(mu)."""
    c = Counter(mu)
    return tuple(c[i] for i in range(1, rank(mu) + 1))


def orbit(lam: Partition) -> list:
    """Distinct rearrangements of lam, in lexicographic order."""
    # next-permutation walk over the sorted multiset
    a = sorted(lam)
    out = [tuple(a)]
    n = len(a)
    while True:
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1 :] = reversed(a[i + 1 :])
        out.append(tuple(a))


def orbit_size(lam: Partition) -> int:
    return factorial(len(lam)) // prod(factorial(m) for m in Counter(lam).values())


def conjugate(lam: Partition) -> Partition:
    r = rank(lam)
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, r + 1))


def omega(lam: Partition) -> RatFunc:
    """prod_{1<=i<j<=r} (1 - q^{j-i} t^{lam'_i - lam'_j})."""
    conj = conjugate(lam)
    r = len(conj)
    q, t = RatFunc.gen("q"), RatFunc.gen("t")
    out = ONE
    for i in range(r):
        for j in range(i + 1, r):
            out = out * (1 - q ** (j - i) * t ** (conj[i] - conj[j]))
    return out


def partitions_of(d: int, max_len: int | None = None, max_part: int | None = None) -> list:
    """Partitions of d in reverse-lexicographic order (largest first)."""
    out = []

    def rec(rem, cap, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for p in range(min(rem, cap), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(d, d if max_part is None else max_part, [])
    return out


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (same size assumed)."""
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def strip(lam: Partition) -> Partition:
    return tuple(p for p in lam if p)
