"""Signature rule and crystal operators on restricted p-strict partitions.

The nodes of a signature are read along the rim from bottom left to top
right, i.e. sorted by (row descending, column ascending).  Removable nodes
carry ``-``, addable nodes ``+``; the reduced signature cancels adjacent
``+-`` pairs until the word has the shape ``-...-+...+``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .partitions import (
    EMPTY,
    Char,
    Partition,
    _p_strict_parts,
    _restricted_parts,
    content_of_column,
    enumerate_rpp,
)
from .report import VerifyReport

PLUS = "+"
MINUS = "-"


class Node(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class SignedNode:
    node: Node
    sign: str
    kind: str  # one of R1, R2, A1, A2

    def __post_init__(self):
        if (self.sign == MINUS) != (self.kind in ("R1", "R2")):
            raise ValueError(f"sign {self.sign} inconsistent with kind {self.kind}")


@dataclass(frozen=True)
class Signature:
    residue: int
    entries: tuple[SignedNode, ...]

    @property
    def signs(self) -> str:
        return ",".join(e.sign for e in self.entries)

    @property
    def nodes(self) -> list[Node]:
        return [e.node for e in self.entries]

    def count(self, sign: str) -> int:
        return sum(1 for e in self.entries if e.sign == sign)


def _with_row(parts: tuple, r: int, length: int) -> tuple | None:
    """Replace row ``r`` (1-indexed, may be one past the end) by ``length``.

    Returns None when the result is not a partition.
    """
    rows = list(parts)
    if r == len(rows) + 1:
        rows.append(0)
    rows[r - 1] = length
    while rows and rows[-1] == 0:
        rows.pop()
    if any(a < b for a, b in zip(rows, rows[1:])) or any(x < 0 for x in rows):
        return None
    return tuple(rows)


def _ok(p: int, parts) -> bool:
    return parts is not None and _p_strict_parts(p, parts)


@lru_cache(maxsize=None)
def _signature(p: int, lam: tuple, i: int) -> tuple[SignedNode, ...]:
    c = Char(p)
    entries: list[SignedNode] = []
    h = len(lam)
    for r in range(1, h + 2):
        length = lam[r - 1] if r <= h else 0
        if length:
            # R1: the last node of the row
            if content_of_column(c, length) == i and _ok(p, _with_row(lam, r, length - 1)):
                entries.append(SignedNode(Node(r, length), MINUS, "R1"))
            # R2: the last two nodes of the row, both of content 0
            if (i == 0 and length >= 2
                    and content_of_column(c, length - 1) == 0
                    and content_of_column(c, length) == 0
                    and _ok(p, _with_row(lam, r, length - 1))
                    and _ok(p, _with_row(lam, r, length - 2))):
                entries.append(SignedNode(Node(r, length - 1), MINUS, "R2"))
        # A1: the first node past the end of the row
        if content_of_column(c, length + 1) == i and _ok(p, _with_row(lam, r, length + 1)):
            entries.append(SignedNode(Node(r, length + 1), PLUS, "A1"))
        # A2: the second node past the end of the row, both of content 0
        if (i == 0
                and content_of_column(c, length + 1) == 0
                and content_of_column(c, length + 2) == 0
                and _ok(p, _with_row(lam, r, length + 1))
                and _ok(p, _with_row(lam, r, length + 2))):
            entries.append(SignedNode(Node(r, length + 2), PLUS, "A2"))
    entries.sort(key=lambda e: (-e.node.row, e.node.col))
    return tuple(entries)


def signature(c: Char, lam: Partition, i: int) -> Signature:
    """The i-signature of ``lam``: i-removable nodes as ``-``, i-addable nodes as ``+``."""
    return Signature(i, _signature(c.p, tuple(lam), i))


@lru_cache(maxsize=None)
def _reduced(p: int, lam: tuple, i: int) -> tuple[SignedNode, ...]:
    stack: list[SignedNode] = []
    for e in _signature(p, lam, i):
        if e.sign == MINUS and stack and stack[-1].sign == PLUS:
            stack.pop()
        else:
            stack.append(e)
    return tuple(stack)


def reduced_signature(c: Char, lam: Partition, i: int) -> Signature:
    return Signature(i, _reduced(c.p, tuple(lam), i))


def epsilon(c: Char, lam: Partition, i: int) -> int:
    """Number of i-normal nodes of ``lam``."""
    return sum(1 for e in _reduced(c.p, tuple(lam), i) if e.sign == MINUS)


def phi(c: Char, lam: Partition, i: int) -> int:
    """Number of i-conormal nodes of ``lam``."""
    return sum(1 for e in _reduced(c.p, tuple(lam), i) if e.sign == PLUS)


def eps_vector(c: Char, lam: Partition) -> list[int]:
    return [epsilon(c, lam, i) for i in c.residues(lam)]


def normal_nodes(c: Char, lam: Partition, i: int) -> list[SignedNode]:
    return [e for e in _reduced(c.p, tuple(lam), i) if e.sign == MINUS]


def good_node(c: Char, lam: Partition, i: int) -> SignedNode | None:
    normals = normal_nodes(c, lam, i)
    return normals[-1] if normals else None


def cogood_node(c: Char, lam: Partition, i: int) -> SignedNode | None:
    for e in _reduced(c.p, tuple(lam), i):
        if e.sign == PLUS:
            return e
    return None


@lru_cache(maxsize=None)
def _e_tilde(p: int, lam: tuple, i: int) -> Partition | None:
    normals = [e for e in _reduced(p, lam, i) if e.sign == MINUS]
    if not normals:
        return None
    good = normals[-1]
    # the right partner of an R2 node is R1 and follows it, so an R2 node is never good
    assert good.kind == "R1", f"good node {good} of {lam} is not R1"
    out = _with_row(lam, good.node.row, good.node.col - 1)
    assert out is not None and _restricted_parts(p, out), f"e~_{i}{lam} left RP_p"
    return Partition(out)


def e_tilde(c: Char, lam: Partition, i: int) -> Partition | None:
    """Remove the i-good node; None when ``lam`` has no i-normal node."""
    return _e_tilde(c.p, tuple(lam), i)


def f_tilde(c: Char, lam: Partition, i: int) -> Partition | None:
    """Add the i-cogood node (leftmost surviving ``+``).

    Returns None when no ``+`` survives or the result is not restricted.
    """
    cogood = cogood_node(c, lam, i)
    if cogood is None:
        return None
    assert cogood.kind == "A1", f"cogood node {cogood} of {tuple(lam)} is not A1"
    out = _with_row(tuple(lam), cogood.node.row, cogood.node.col)
    if out is None or not _restricted_parts(c.p, out):
        return None
    return Partition(out)


def cartan(c: Char, i: int, j: int) -> int:
    """Entry a_ij of the Cartan matrix of type A_{p-1}^(2) (B_infinity when p = 0)."""
    ell = c.ell
    for k in (i, j):
        if k < 0 or k > ell:
            raise ValueError(f"residue {k} out of range for {c}")
    if i == j:
        return 2
    if abs(i - j) > 1:
        return 0
    if ell == 1:
        return -4 if (i, j) == (0, 1) else -1
    if (i, j) == (0, 1):
        return -2
    if ell != float("inf") and (i, j) == (ell - 1, ell):
        return -2
    return -1


@dataclass
class CrystalGraph:
    """The I-coloured graph on RP_p(0..nmax) with edges ``(e~_i mu, i, mu)``."""

    char: Char
    nmax: int
    levels: list[list[Partition]] = field(default_factory=list)
    edges: list[tuple[Partition, int, Partition]] = field(default_factory=list)

    @property
    def vertices(self) -> list[Partition]:
        return [lam for level in self.levels for lam in level]

    def level_sizes(self) -> list[int]:
        return [len(level) for level in self.levels]

    def parent_edges(self, mu: Partition) -> list[tuple[Partition, int, Partition]]:
        return [e for e in self.edges if e[2] == mu]

    def to_dot(self) -> str:
        index = {lam: k for k, lam in enumerate(self.vertices)}
        lines = [f'digraph "B(Lambda_0) p={self.char.p}" {{', "\trankdir=TB;"]
        for m, level in enumerate(self.levels):
            lines.append(f"\t{{ rank = same; // degree {m}")
            for lam in level:
                label = str(lam) if lam else "()"
                lines.append(f'\t\tv{index[lam]} [label="{label}"];')
            lines.append("\t}")
        for src, i, dst in self.edges:
            lines.append(f'\tv{index[src]} -> v{index[dst]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def crystal_graph(c: Char, nmax: int) -> CrystalGraph:
    graph = CrystalGraph(c, nmax)
    for m in range(nmax + 1):
        level = enumerate_rpp(c, m)
        graph.levels.append(level)
        for mu in level:
            for i in c.residues(mu):
                src = e_tilde(c, mu, i)
                if src is not None:
                    graph.edges.append((src, i, mu))
    return graph


def path_to_empty(c: Char, lam: Partition) -> list[int] | None:
    """Residues of a chain of e~ steps from ``lam`` down to the empty partition."""
    path = []
    while lam:
        for i in c.residues(lam):
            mu = e_tilde(c, lam, i)
            if mu is not None:
                path.append(i)
                lam = mu
                break
        else:
            return None
    return path


def stembridge_violations(c: Char, lam: Partition) -> list[str]:
    """Failures of the two Stembridge axioms at ``lam`` over all residue pairs."""
    out = []
    residues = c.residues(lam)
    eps = {i: epsilon(c, lam, i) for i in residues}
    for i in residues:
        if not eps[i]:
            continue
        mu = e_tilde(c, lam, i)
        for j in residues:
            if j == i:
                continue
            d = epsilon(c, mu, j) - eps[j]
            if not 0 <= d <= -cartan(c, j, i):
                out.append(f"(i) i={i} j={j}: eps_j jumps by {d}, bound {-cartan(c, j, i)}")
            if d == 0 and eps[j] > 0:
                ij = e_tilde(c, e_tilde(c, lam, j), i)
                ji = e_tilde(c, mu, j)
                if ij != ji:
                    out.append(f"(ii) i={i} j={j}: e_i e_j = {ij} but e_j e_i = {ji}")
    return out


def stembridge_check(c: Char, nmax: int, n_min: int = 0) -> VerifyReport:
    report = VerifyReport("TStem", {"p": c.p, "n": [n_min, nmax]})
    for m in range(n_min, nmax + 1):
        for lam in enumerate_rpp(c, m):
            report.checked += 1
            for detail in stembridge_violations(c, lam):
                report.counterexamples.append((c.p, str(lam), detail))
    return report


__all__ = [
    "EMPTY", "Node", "SignedNode", "Signature", "CrystalGraph", "signature",
    "reduced_signature", "epsilon", "phi", "eps_vector", "normal_nodes",
    "good_node", "cogood_node", "e_tilde", "f_tilde", "cartan", "crystal_graph",
    "path_to_empty", "stembridge_violations", "stembridge_check",
]
