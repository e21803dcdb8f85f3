"""Certified lower bounds for restrictions of irreducible spin supermodules.

``guaranteed_restriction`` returns a multiset of labels that is contained in
the restriction of ``D^lam`` to one degree lower.  Within a residue the rules
all bound the same summand ``e_i D^lam`` and are combined by taking maxima;
distinct residues give distinct summands and are added.
"""
from __future__ import annotations

import contextlib
from dataclasses import dataclass, field
from functools import lru_cache

from .crystal import MINUS, _e_tilde, _reduced, _signature, _with_row, epsilon
from .labels import a_n, alpha_label, b_n, beta_or_none
from .partitions import Char, Partition, _restricted_parts, a_parity, content_of_column

_RULES = {"lowest_node": True}


@dataclass
class FactorBound:
    """Lower bounds on composition multiplicities, all at one degree."""

    level: int
    factors: dict[Partition, int] = field(default_factory=dict)

    def __getitem__(self, lam) -> int:
        return self.factors.get(Partition(lam), 0)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def items(self):
        return self.factors.items()

    def total(self) -> int:
        return sum(self.factors.values())

    def contains(self, claim: dict) -> bool:
        """True when every claimed multiplicity is certified."""
        return all(self[mu] >= m for mu, m in claim.items())

    def shortfall(self, claim: dict) -> dict:
        return {Partition(mu): (m, self[mu]) for mu, m in claim.items() if self[mu] < m}

    def to_dict(self) -> dict[str, str]:
        return {str(mu): str(m) for mu, m in self.factors.items()}

    def __str__(self):
        if not self.factors:
            return "0"
        return " + ".join(f"{m}*({mu})" for mu, m in self.factors.items())



def _lowest_node(p: int, lam: tuple):
    """Lowest removable node whose removal stays restricted, with the result."""
    for r in range(len(lam), 0, -1):
        out = _with_row(lam, r, lam[r - 1] - 1)
        if out is not None and _restricted_parts(p, out):
            return r, lam[r - 1], out
    return None


@lru_cache(maxsize=None)
def _restriction(p: int, lam: tuple, lowest_rule: bool) -> tuple:
    c = Char(p)
    if not lam:
        return ()
    q = a_parity(c, Partition(lam))
    per_residue: dict[int, dict[tuple, int]] = {}
    for i in c.residues(lam):
        eps = epsilon(c, lam, i)
        if not eps:
            continue
        bound = per_residue.setdefault(i, {})
        good = _e_tilde(p, lam, i)
        bound[tuple(good)] = eps
        normals = [e for e in _reduced(p, lam, i) if e.sign == MINUS and e.kind == "R1"]
        for e in normals[:-1]:
            out = _with_row(lam, e.node.row, e.node.col - 1)
            if out is not None and _restricted_parts(p, out):
                bound[out] = max(bound.get(out, 0), 1)
    if lowest_rule:
        found = _lowest_node(p, lam)
        if found is not None:
            r, col, out = found
            i = content_of_column(c, col)
            m = sum(1 for e in _signature(p, lam, i) if e.sign == MINUS and e.node.row > r)
            bound = per_residue.setdefault(i, {})
            bound[out] = max(bound.get(out, 0), m + 1)
    acc: dict[tuple, int] = {}
    for i, bound in per_residue.items():
        coeff = 2 if (q == 1 and i != 0) else 1
        for mu, mult in bound.items():
            acc[mu] = acc.get(mu, 0) + coeff * mult
    return tuple(sorted(acc.items(), reverse=True))


def guaranteed_restriction(c: Char, lam: Partition) -> FactorBound:
    """Certified composition factors of the restriction of ``D^lam`` to degree n-1."""
    n = sum(lam)
    items = _restriction(c.p, tuple(lam), _RULES["lowest_node"])
    return FactorBound(max(n - 1, 0), {Partition(mu): m for mu, m in items})


@lru_cache(maxsize=None)
def _depth(p: int, lam: tuple, j: int, lowest_rule: bool) -> tuple:
    if j == 0:
        return ((lam, 1),)
    acc: dict[tuple, int] = {}
    for mu, m in _restriction(p, lam, lowest_rule):
        for tau, k in _depth(p, mu, j - 1, lowest_rule):
            acc[tau] = acc.get(tau, 0) + m * k
    return tuple(sorted(acc.items(), reverse=True))


def guaranteed_depth(c: Char, lam: Partition, j: int) -> FactorBound:
    """Certified composition factors of the restriction to degree n-j."""
    n = sum(lam)
    if not 0 <= j <= n:
        raise ValueError(f"depth {j} out of range for degree {n}")
    items = _depth(c.p, tuple(lam), j, _RULES["lowest_node"])
    return FactorBound(n - j, {Partition(mu): m for mu, m in items})


def small_labels(c: Char, m: int) -> set[Partition]:
    """Labels of the basic and second basic modules of degree ``m``."""
    if m < 1:
        return {Partition()}
    out = {alpha_label(c, m)}
    beta = beta_or_none(c, m)
    if beta is not None:
        out.add(beta)
    return out


def d_lower(c: Char, lam: Partition, j: int) -> int:
    """Lower bound for the number of non-basic, non-second-basic factors at depth ``j``."""
    n = sum(lam)
    if j < 1 or n - j < 1:
        raise ValueError(f"need 1 <= j < n, got j={j}, n={n}")
    skip = small_labels(c, n - j)
    return sum(m for mu, m in guaranteed_depth(c, lam, j).items() if mu not in skip)


@dataclass(frozen=True)
class JsClass:
    residue: int | None = None

    @property
    def is_js(self) -> bool:
        return self.residue is not None

    def __str__(self):
        return f"JS({self.residue})" if self.is_js else "not JS"


def eps_map(c: Char, lam: Partition) -> dict[int, int]:
    """Nonzero entries of the epsilon vector."""
    out = {}
    for i in c.residues(lam):
        e = epsilon(c, lam, i)
        if e:
            out[i] = e
    return out


def js_class(c: Char, lam: Partition) -> JsClass:
    eps = eps_map(c, lam)
    if len(eps) == 1:
        (i, e), = eps.items()
        if e == 1:
            return JsClass(i)
    return JsClass()


def in_js(c: Char, lam: Partition | None, i: int | None = None) -> bool:
    if lam is None:
        return False
    cls = js_class(c, lam)
    return cls.is_js and (i is None or cls.residue == i)


def matching_cases(c: Char, lam: Partition) -> list[str]:
    """Every case tag whose conditions hold for a JS partition ``lam``."""
    cls = js_class(c, lam)
    if not cls.is_js:
        raise ValueError(f"{lam} is not a JS partition")
    i = cls.residue
    mu = _e_tilde(c.p, tuple(lam), i)
    eps = eps_map(c, mu)
    ell = c.ell

    def only(allowed) -> bool:
        return all(j in allowed for j in eps)

    tags = []
    if i == 0 and in_js(c, mu, 1):
        tags.append("i")
    if i == ell and eps.get(ell - 1, 0) >= 2 and only({ell - 1}):
        tags.append("ii")
    if i == 1 and eps.get(0, 0) >= 2 and only({0}):
        tags.append("iii")
    if (c.p == 0 or c.p > 3) and i not in (0, ell):
        if (eps.get(i - 1, 0) >= 1 and eps.get(i + 1, 0) == 1 and only({i - 1, i + 1})
                and (i == 1 or eps.get(i - 1, 0) == 1)):
            tags.append("iv")
    return tags


def four_cases(c: Char, lam: Partition) -> str | None:
    """Case tag of a non-basic JS partition; None when no case applies.

    For p = 3 the second and third cases describe the same situation and
    the tag ``"ii"`` is returned.
    """
    if lam == alpha_label(c, sum(lam)):
        raise ValueError("the basic label is excluded")
    tags = matching_cases(c, lam)
    return tags[0] if tags else None


@lru_cache(maxsize=None)
def _dim_lb(p: int, lam: tuple, lowest_rule: bool) -> int:
    c = Char(p)
    n = sum(lam)
    if lam == tuple(alpha_label(c, n)):
        return a_n(c, n)
    beta = beta_or_none(c, n)
    if beta is not None and lam == tuple(beta):
        return b_n(c, n)
    return sum(m * _dim_lb(p, mu, lowest_rule) for mu, m in _restriction(p, lam, lowest_rule))


def dim_lower_bound(c: Char, lam: Partition) -> int:
    """Lower bound for ``dim D^lam`` by recursive restriction down to the two basic families."""
    if not lam:
        raise ValueError("degree must be positive")
    return _dim_lb(c.p, tuple(lam), _RULES["lowest_node"])


def clear_caches() -> None:
    _restriction.cache_clear()
    _depth.cache_clear()
    _dim_lb.cache_clear()


@contextlib.contextmanager
def without_lowest_node_rule():
    """Temporarily disable the lowest-removable-node multiplicity rule (for mutation tests)."""
    saved = _RULES["lowest_node"]
    _RULES["lowest_node"] = False
    clear_caches()
    try:
        yield
    finally:
        _RULES["lowest_node"] = saved
        clear_caches()


__all__ = [
    "FactorBound", "guaranteed_restriction", "guaranteed_depth", "small_labels",
    "d_lower", "JsClass", "eps_map", "js_class", "in_js", "matching_cases",
    "four_cases", "dim_lower_bound", "clear_caches", "without_lowest_node_rule",
]
