"""Closed-form labels of the basic, second basic and neighbouring modules,
together with the dimension formulas of the two smallest spin supermodules.

Throughout ``n = a*p + b`` with ``0 < b <= p``.  Characteristic 0 behaves
like an infinitely large prime: every label uses its ``n < p`` branch and
``kappa`` vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .partitions import Char, Partition, _restricted_parts, a_parity


def _split(c: Char, n: int) -> tuple[int, int]:
    a = (n - 1) // c.p
    return a, n - a * c.p


def _rows(*blocks) -> tuple[int, ...] | None:
    """Concatenate ints and ``(value, multiplicity)`` pairs; None on a negative multiplicity."""
    out: list[int] = []
    for blk in blocks:
        if isinstance(blk, tuple):
            value, mult = blk
            if mult < 0:
                return None
            out.extend([value] * mult)
        else:
            out.append(blk)
    return tuple(out)


def _valid(c: Char, parts) -> Partition | None:
    if parts is None:
        return None
    if any(x <= 0 for x in parts) or any(x < y for x, y in zip(parts, parts[1:])):
        return None
    if not _restricted_parts(c.p, parts):
        return None
    return Partition(parts)


def _below_p(c: Char, n: int) -> bool:
    return c.p == 0 or n < c.p


def alpha_label(c: Char, n: int) -> Partition:
    """Label of the basic module."""
    if n < 1:
        raise ValueError("n must be positive")
    if c.p == 0:
        return Partition((n,))
    a, b = _split(c, n)
    p = c.p
    if b != p:
        return Partition(_rows((p, a), b))
    return Partition(_rows((p, a), p - 1, 1))


def _beta_parts(c: Char, n: int):
    if _below_p(c, n):
        return (n - 1, 1)
    p = c.p
    a, b = _split(c, n)
    if n == p:
        return (p - 2, 2)
    if n == p + 1:
        return (p - 2, 2, 1)
    if b != 1:
        return _rows(p + 1, (p, a - 1), b - 1)
    return _rows(p + 1, (p, a - 2), p - 1, 1)


def beta_label(c: Char, n: int) -> Partition:
    """Label of the second basic module; defined for ``n >= 4``."""
    if n < 4:
        raise ValueError(f"the second basic label needs n >= 4, got {n}")
    lam = _valid(c, _beta_parts(c, n))
    if lam is None:
        raise ValueError(f"no second basic label for {c}, n={n}")
    return lam


def beta_or_none(c: Char, n: int) -> Partition | None:
    if n < 4:
        return None
    return _valid(c, _beta_parts(c, n))


def gamma_label(c: Char, n: int) -> Partition | None:
    """Label of the third basic module, or None where it is not defined."""
    if n < 1:
        return None
    if c.p == 0:
        return _valid(c, (n - 2, 2))
    p = c.p
    if n % p in (0, 3 % p):
        return None
    a, b = _split(c, n)
    if n < p or n == p + 1:
        parts = (n - 2, 2)
    elif n == p + 2:
        parts = (p - 1, 2, 1)
    elif n < p + 2:
        return None
    elif b == 1:
        parts = _rows(p + 2, (p, a - 2), p - 1)
    elif b == 2:
        parts = _rows(p + 2, (p, a - 2), p - 1, 1)
    elif b not in (3, p):
        parts = _rows(p + 2, (p, a - 1), b - 2)
    else:
        return None
    return _valid(c, parts)


def _delta_candidates(c: Char, n: int) -> list:
    if c.p == 0:
        return [(n - 3, 3), (n - 3, 2, 1)]
    p = c.p
    a, b = _split(c, n)
    if p == 3:
        return [_rows(5, (3, a - 1), 1)] if a >= 2 and b == 3 else []
    if n % p in (1, 4):
        return []
    if n <= p:
        return [(n - 3, 3), (n - 3, 2, 1)]
    if n == p + 2:
        return [(p - 1, 3)]
    if n == p + 3:
        return [(p - 1, 3, 1), (p, 2, 1)]
    if n == p + 5 and n > 10:
        return [(p + 2, 2, 1)]
    if a == 1 and 5 < b < p:
        return [(p + 3, b - 3), (p + 2, b - 3, 1)]
    if n == 2 * p:
        return [(p + 2, p - 3, 1), (p + 2, p - 2)]
    if a >= 2:
        if b == 2:
            return [_rows(p + 3, (p, a - 2), p - 1)]
        if b == 3:
            return [_rows(p + 2, (p, a - 1), 1), _rows(p + 3, (p, a - 2), p - 1, 1)]
        if b == 5 and b < p:
            return [_rows(p + 2, p + 1, (p, a - 2), 2)]
        if 5 < b < p:
            return [_rows(p + 3, (p, a - 1), b - 3), _rows(p + 2, p + 1, (p, a - 2), b - 3)]
        if b == p:
            return [_rows(p + 2, (p, a - 1), p - 2), _rows(p + 2, p + 1, (p, a - 2), p - 3)]
    return []


def delta_labels(c: Char, n: int) -> tuple[Partition, ...] | None:
    """The one or two candidate labels of the fourth family, or None."""
    if n < 1:
        return None
    out: list[Partition] = []
    for parts in _delta_candidates(c, n):
        lam = _valid(c, parts)
        if lam is not None and lam not in out:
            out.append(lam)
    return tuple(out) or None


def delta_coverage(c: Char, n_lo: int, n_hi: int) -> list[int]:
    """Degrees in the defining domain (p > 3, n not 1 or 4 mod p) without a delta label."""
    if c.p in (0, 3):
        return []
    return [n for n in range(n_lo, n_hi + 1)
            if n % c.p not in (1, 4) and delta_labels(c, n) is None]


def labels(c: Char, n: int) -> dict[str, tuple[Partition, ...]]:
    """All labels of degree ``n`` keyed by family name; absent families are omitted."""
    out: dict[str, tuple[Partition, ...]] = {"alpha": (alpha_label(c, n),)}
    beta = beta_or_none(c, n)
    if beta is not None:
        out["beta"] = (beta,)
    gamma = gamma_label(c, n)
    if gamma is not None:
        out["gamma"] = (gamma,)
    delta = delta_labels(c, n)
    if delta:
        out["delta"] = delta
    return out


def kappa(c: Char, n: int) -> int:
    return 1 if c.divides(n) else 0


def a_n(c: Char, n: int) -> int:
    """Dimension of the basic supermodule."""
    return 2 ** ((n - kappa(c, n)) // 2)


def b_n(c: Char, n: int) -> int:
    """Dimension of the second basic supermodule."""
    k0, k1 = kappa(c, n), kappa(c, n - 1)
    return 2 ** ((n - 1 - k1) // 2) * (n - 2 - k0 - 2 * k1)


def f_bound(c: Char, n: int) -> int:
    return 2 * b_n(c, n)


def fstar_bound(c: Char, n: int) -> int:
    """``4 b_n / 2^a(beta_n)``."""
    q, r = divmod(4 * b_n(c, n), 2 ** a_parity(c, beta_label(c, n)))
    assert r == 0
    return q


def fstar_closed(c: Char, n: int) -> int:
    k0, k1 = kappa(c, n), kappa(c, n - 1)
    return 2 ** ((n + 2 - k1) // 2) * (n - 2 - k0 - 2 * k1)


def basic_type(c: Char, n: int) -> str:
    odd = n % 2 == 1
    return "M" if (odd and not c.divides(n)) or (not odd and c.divides(n)) else "Q"


def second_basic_type(c: Char, n: int) -> str:
    odd = n % 2 == 1
    return "M" if (odd and c.divides(n - 1)) or (not odd and not c.divides(n - 1)) else "Q"


@dataclass(frozen=True)
class DimRecord:
    n: int
    kappa_n: int
    a_n: int
    b_n: int
    f_n: int
    fstar_n: int
    basic_type: str
    second_basic_type: str

    def to_dict(self) -> dict:
        # every value as a decimal string so that consumers never truncate
        return {k: str(v) for k, v in self.__dict__.items()}


def dims(c: Char, n: int) -> DimRecord:
    if n < 5:
        raise ValueError(f"dimension formulas are tabulated for n >= 5, got {n}")
    return DimRecord(
        n=n,
        kappa_n=kappa(c, n),
        a_n=a_n(c, n),
        b_n=b_n(c, n),
        f_n=f_bound(c, n),
        fstar_n=fstar_bound(c, n),
        basic_type=basic_type(c, n),
        second_basic_type=second_basic_type(c, n),
    )


def bound1_holds(c: Char, n: int) -> bool:
    """Whether ``f*(n) <= 24 f(n-6)``."""
    return fstar_bound(c, n) <= 24 * f_bound(c, n - 6)


__all__ = [
    "alpha_label", "beta_label", "beta_or_none", "gamma_label", "delta_labels",
    "delta_coverage", "labels", "kappa", "a_n", "b_n", "f_bound", "fstar_bound",
    "fstar_closed", "basic_type", "second_basic_type", "DimRecord", "dims",
    "bound1_holds",
]
