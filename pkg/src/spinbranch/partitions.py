"""Characteristic data, restricted p-strict partitions and their node contents.

Rows and columns are 1-indexed.  A characteristic ``p`` is either 0 or an odd
prime; for ``p = 0`` the residue alphabet is all of Z>=0 and "restricted
p-strict" means strict.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % d for d in range(2, math.isqrt(m) + 1))


@dataclass(frozen=True)
class Char:
    """The characteristic ``p`` of the ground field (0 or an odd prime)."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"characteristic must be an int, got {self.p!r}")
        if self.p != 0 and (self.p == 2 or not _is_prime(self.p)):
            raise ValueError(f"characteristic must be 0 or an odd prime, got {self.p}")

    @property
    def ell(self) -> int | float:
        """``(p-1)/2`` for ``p > 0``, ``math.inf`` for ``p = 0``."""
        return (self.p - 1) // 2 if self.p else math.inf

    def divides(self, m: int) -> bool:
        # p = 0 divides nothing; kappa and the label formulas rely on this
        return self.p > 0 and m % self.p == 0

    def residues(self, lam: "Partition | None" = None) -> range:
        """Residues that can carry an addable or removable node of ``lam``.

        For ``p > 0`` this is all of ``{0, ..., ell}``.  For ``p = 0`` only
        contents of columns ``1 .. lam_1 + 1`` can occur.
        """
        if self.p:
            return range(self.ell + 1)
        width = lam[0] if lam else 0
        return range(width + 1)

    def __str__(self):
        return f"p={self.p}"


class Partition(tuple):
    """An immutable partition, stored as a non-increasing tuple of positive parts."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated form, e.g. ``"16,11,10,10,9,5,1"``; ``""`` is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return sum(self)

    def part(self, r: int) -> int:
        """Length of row ``r`` (1-indexed); 0 beyond the last row."""
        return self[r - 1] if 1 <= r <= len(self) else 0

    def nodes(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self, start=1):
            for s in range(1, length + 1):
                yield (r, s)

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


EMPTY = Partition()


def content_of_column(c: Char, s: int) -> int:
    """Residue of column ``s`` under the repeating pattern 0,1,..,ell,..,1,0."""
    if s < 1:
        raise ValueError(f"columns are 1-indexed, got {s}")
    if c.p == 0:
        return s - 1
    r = (s - 1) % c.p
    return min(r, c.p - 1 - r)


def _p_strict_parts(p: int, parts) -> bool:
    for a, b in zip(parts, parts[1:]):
        if a == b and (p == 0 or a % p):
            return False
    return True


def _restricted_parts(p: int, parts) -> bool:
    if not _p_strict_parts(p, parts):
        return False
    if p == 0:
        return True
    padded = tuple(parts) + (0,)
    for a, b in zip(padded, padded[1:]):
        if a % p == 0:
            if a - b >= p:
                return False
        elif a - b > p:
            return False
    return True


def is_p_strict(c: Char, lam: Partition) -> bool:
    """Every repeated part is divisible by ``p`` (all parts distinct when ``p = 0``)."""
    return _p_strict_parts(c.p, lam)


def is_restricted(c: Char, lam: Partition) -> bool:
    """``lam`` is p-strict with ``lam_r - lam_{r+1} < p`` when ``p | lam_r`` and ``<= p`` otherwise."""
    return _restricted_parts(c.p, lam)


def p_prime_height(c: Char, lam: Partition) -> int:
    if c.p == 0:
        return len(lam)
    return sum(1 for x in lam if x % c.p)


def sigma(m: int) -> int:
    return m % 2


def a_parity(c: Char, lam: Partition) -> int:
    """Type of ``D^lam``: 0 for type M, 1 for type Q."""
    return sigma(lam.n - p_prime_height(c, lam))


def block_content(c: Char, lam: Partition) -> dict[int, int]:
    """Number of nodes of each residue, as a sparse map with sorted keys."""
    counts: dict[int, int] = {}
    for length in lam:
        for s in range(1, length + 1):
            i = content_of_column(c, s)
            counts[i] = counts.get(i, 0) + 1
    return dict(sorted(counts.items()))


def enumerate_rpp(c: Char, n: int) -> list[Partition]:
    """All restricted p-strict partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_enumerate_rpp(c.p, n))


@lru_cache(maxsize=None)
def _enumerate_rpp(p: int, n: int) -> tuple[Partition, ...]:
    out: list[Partition] = []
    parts: list[int] = []

    def last_ok(x: int) -> bool:
        # the final part is compared against lam_{h+1} = 0
        if p == 0:
            return True
        return x < p if x % p == 0 else x <= p

    def descend(remaining: int, prev: int):
        if remaining == 0:
            if not parts or last_ok(parts[-1]):
                out.append(Partition(parts))
            return
        hi = min(prev, remaining)
        if p == 0:
            hi = min(hi, prev - 1)
            lo = 1
        else:
            if hi == prev and prev % p:
                hi = prev - 1
            lo = max(1, prev - (p - 1 if prev % p == 0 else p))
        for x in range(hi, lo - 1, -1):
            parts.append(x)
            descend(remaining - x, x)
            parts.pop()

    if n == 0:
        return (EMPTY,)
    for first in range(n, 0, -1):
        parts.append(first)
        descend(n - first, first)
        parts.pop()
    return tuple(out)
