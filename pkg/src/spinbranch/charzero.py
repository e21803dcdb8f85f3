"""Exact spin dimensions in characteristic zero and the desk-scale check of
the dimension classification there."""
from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

from .labels import f_bound, fstar_bound
from .partitions import Char, Partition, a_parity, enumerate_rpp
from .report import VerifyReport

CHAR0 = Char(0)

# smallest dimensions of large irreducible supermodules in degrees 12 and 13
KNOWN_MINIMA: dict[tuple[int, int], int] = {
    (0, 13): 3456, (3, 13): 3456, (5, 13): 2240, (7, 13): 3456,
    (11, 13): 1664, (13, 13): 2816,
    (0, 12): 1408, (3, 12): 640, (5, 12): 1344, (11, 12): 1408, (13, 12): 1408,
}


def known_minimum(p: int, n: int) -> int | None:
    """Table lookup; primes above ``n`` behave like characteristic zero."""
    if (p, n) in KNOWN_MINIMA:
        return KNOWN_MINIMA[(p, n)]
    if p > n:
        return KNOWN_MINIMA.get((0, n))
    return None


def _check_strict(lam) -> Partition:
    lam = Partition(lam)
    if any(x == y for x, y in zip(lam, lam[1:])):
        raise ValueError(f"{lam} has a repeated part")
    return lam


def schur_dim(lam) -> int:
    """Degree of the irreducible spin character labelled by a strict partition."""
    lam = _check_strict(lam)
    n, h = lam.n, len(lam)
    value = Fraction(2 ** ((n - h) // 2) * factorial(n), prod(factorial(x) for x in lam))
    for r, x in enumerate(lam):
        for y in lam[r + 1:]:
            value *= Fraction(x - y, x + y)
    assert value.denominator == 1, f"non-integral degree for {lam}"
    return int(value)


def super_dim(lam) -> int:
    """Dimension of the irreducible supermodule: twice ``schur_dim`` for type Q."""
    lam = _check_strict(lam)
    return 2 ** a_parity(CHAR0, lam) * schur_dim(lam)


def large_partitions(n: int) -> list[Partition]:
    small = {Partition((n,)), Partition((n - 1, 1))}
    return [lam for lam in enumerate_rpp(CHAR0, n) if lam not in small]


def min_large_dim(n: int) -> tuple[int, Partition]:
    """Smallest large supermodule dimension in degree ``n`` with a witness."""
    if n < 5:
        raise ValueError("n must be at least 5")
    return min(((super_dim(lam), lam) for lam in large_partitions(n)),
               key=lambda t: (t[0], tuple(t[1])))


def main_theorem_check_char0(n_lo: int, n_hi: int) -> VerifyReport:
    """Large supermodules reach ``f(n)``, and type Q ones reach ``f*(n)``."""
    if not 12 <= n_lo <= n_hi:
        raise ValueError("need 12 <= n_lo <= n_hi")
    report = VerifyReport("MainThm_char0", {"p": 0, "n": [n_lo, n_hi]})
    for n in range(n_lo, n_hi + 1):
        f, fs = f_bound(CHAR0, n), fstar_bound(CHAR0, n)
        for lam in large_partitions(n):
            report.checked += 1
            dim = super_dim(lam)
            if dim < f:
                report.counterexamples.append((0, str(lam), f"dim {dim} < f({n}) = {f}"))
            elif a_parity(CHAR0, lam) == 1 and dim < fs:
                report.counterexamples.append((0, str(lam), f"type Q dim {dim} < f*({n}) = {fs}"))
    return report


__all__ = [
    "KNOWN_MINIMA", "known_minimum", "schur_dim", "super_dim", "large_partitions",
    "min_large_dim", "main_theorem_check_char0",
]
