"""Registry of exhaustive finite checks of the combinatorial lemmas.

Every check is a function ``check(c, n) -> (checked, failures)`` working on a
single degree; ``verify`` runs it over a range of degrees and assembles a
``VerifyReport``.  Each check encodes the hypotheses of its statement
literally (degree bounds, congruences, excluded labels).

Quantifiers over the two-candidate fourth family are stated per check: a
statement about "the" label of a smaller degree is satisfied by any candidate,
a statement about the label of the current degree must hold for every
candidate.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import charzero
from .branching import (
    d_lower,
    eps_map,
    guaranteed_depth,
    guaranteed_restriction,
    in_js,
    js_class,
    matching_cases,
)
from .crystal import e_tilde, stembridge_violations
from .labels import (
    alpha_label,
    beta_or_none,
    bound1_holds,
    delta_labels,
    f_bound,
    fstar_bound,
    gamma_label,
)
from .partitions import (
    Char,
    Partition,
    a_parity,
    block_content,
    content_of_column,
    enumerate_rpp,
    sigma,
)
from .report import VerifyReport

Failures = list[tuple[str, str]]


@dataclass(frozen=True)
class Lemma:
    lemma_id: str
    check: Callable[[Char, int], tuple[int, Failures]]
    description: str
    chars: str = "positive"  # "positive", "zero" or "any"
    n_min: int | Callable[[Char], int] = 5

    def min_degree(self, c: Char) -> int:
        return self.n_min(c) if callable(self.n_min) else self.n_min


REGISTRY: dict[str, Lemma] = {}


def _register(lemma_id: str, description: str, chars: str = "positive", n_min=5):
    def deco(fn):
        REGISTRY[lemma_id] = Lemma(lemma_id, fn, description, chars, n_min)
        return fn
    return deco


def _P(*parts) -> Partition:
    return Partition(parts)


def _split(c: Char, n: int) -> tuple[int, int]:
    a = (n - 1) // c.p
    return a, n - a * c.p


def _deltas(c: Char, n: int) -> tuple[Partition, ...]:
    return delta_labels(c, n) or ()


def _labels_upto_delta(c: Char, n: int) -> set[Partition]:
    out = {alpha_label(c, n)}
    for lam in (beta_or_none(c, n), gamma_label(c, n)):
        if lam is not None:
            out.add(lam)
    out.update(_deltas(c, n))
    return out


def _eps_pair(eps: dict[int, int]) -> tuple[int, int] | None:
    """The two residues when the epsilon vector is 1 at exactly two places."""
    if len(eps) == 2 and all(v == 1 for v in eps.values()):
        i, j = sorted(eps)
        return i, j
    return None


class _Claim:
    """A multiset of labels, possibly with one alternative slot.

    Each slot is (multiplicity, list of admissible partitions); a slot is
    satisfied by any admissible partition, the claim by all slots.
    """

    def __init__(self):
        self.slots: list[tuple[int, list[Partition | None]]] = []

    def add(self, mult: int, *options):
        opts = []
        for o in options:
            if isinstance(o, tuple) and not isinstance(o, Partition):
                opts.extend(o)
            else:
                opts.append(o)
        self.slots.append((mult, opts))
        return self

    def failures(self, bound) -> list[str]:
        merged: dict[Partition, int] = {}
        out = []
        for mult, opts in self.slots:
            valid = [o for o in opts if o is not None]
            if not valid:
                out.append(f"label for a {mult}-fold factor is undefined")
                continue
            # pick the first admissible option the engine certifies
            best = None
            for o in valid:
                if bound[o] >= merged.get(o, 0) + mult:
                    best = o
                    break
            if best is None:
                best = valid[0]
                out.append(f"needs {mult}*({best}), engine gives {bound[best]}")
            merged[best] = merged.get(best, 0) + mult
        return out


def _certify(claim: _Claim, bound, tag: str) -> list[str]:
    return [f"{tag}: {msg}" for msg in claim.failures(bound)]


# --- crystal ---------------------------------------------------------------

@_register("TStem", "Stembridge axioms on the crystal", chars="any", n_min=0)
def _check_tstem(c: Char, n: int):
    fails = []
    lams = enumerate_rpp(c, n)
    for lam in lams:
        for detail in stembridge_violations(c, lam):
            fails.append((str(lam), detail))
    return len(lams), fails


# --- labels and blocks -----------------------------------------------------

def _gamma_ab(c: Char, n: int, second: bool) -> dict[int, int]:
    a, b = _split(c, n)
    ell = c.ell
    counts = {i: 2 * a for i in range(ell)}
    counts[ell] = a
    top = b - 1 if second else b
    for s in range(1, top + 1):
        i = content_of_column(c, s)
        counts[i] += 1
    if second:
        counts[0] += 1
    return {i: v for i, v in sorted(counts.items()) if v}


@_register("LABBlocks", "block contents of the basic and second basic labels")
def _check_labblocks(c: Char, n: int):
    fails = []
    want_a, want_b = _gamma_ab(c, n, False), _gamma_ab(c, n, True)
    alpha, beta = alpha_label(c, n), beta_or_none(c, n)
    if block_content(c, alpha) != want_a:
        fails.append((str(alpha), f"block {block_content(c, alpha)} != {want_a}"))
    if block_content(c, _P(n)) != want_a:
        fails.append((str(n), f"reduction of (n) lies in {block_content(c, _P(n))}, not {want_a}"))
    if beta is None:
        fails.append(("", "second basic label undefined"))
    elif block_content(c, beta) != want_b:
        fails.append((str(beta), f"block {block_content(c, beta)} != {want_b}"))
    hook = _P(n - 1, 1)
    if block_content(c, hook) != want_b:
        fails.append((str(hook), f"reduction of (n-1,1) lies in {block_content(c, hook)}, not {want_b}"))
    return 2, fails


@_register("TLabels_socle", "good-node preimages of the label families")
def _check_tlabels(c: Char, n: int):
    fails = []
    alpha1, beta1, gamma1 = alpha_label(c, n - 1), beta_or_none(c, n - 1), gamma_label(c, n - 1)
    alpha, beta, gamma = alpha_label(c, n), beta_or_none(c, n), gamma_label(c, n)
    deltas = _deltas(c, n)
    lams = enumerate_rpp(c, n)
    for lam in lams:
        for i in eps_map(c, lam):
            mu = e_tilde(c, lam, i)
            if mu == alpha1 and lam not in (alpha, beta):
                fails.append((str(lam), f"e~_{i} gives the basic label {mu}"))
            if beta1 is not None and mu == beta1 and lam not in (beta, gamma):
                fails.append((str(lam), f"e~_{i} gives the second basic label {mu}"))
            if gamma1 is not None and mu == gamma1 and lam != gamma and lam not in deltas:
                fails.append((str(lam), f"e~_{i} gives the third label {mu}"))
    # converse, for every candidate of the fourth family
    if gamma1 is not None:
        for delta in deltas:
            if all(e_tilde(c, delta, i) != gamma1 for i in eps_map(c, delta)):
                fails.append((str(delta), f"no good node leads to {gamma1}"))
    return len(lams), fails


# --- Jantzen-Seitz partitions ----------------------------------------------

def _js0_by_parts(c: Char, lam: Partition) -> bool:
    sizes = sorted(set(lam), reverse=True)
    if not sizes or sizes[-1] != 1:
        return False
    return all(content_of_column(c, sizes[s]) == content_of_column(c, sizes[s + 1] + 1)
               for s in range(len(sizes) - 1))


@_register("LJS0", "part-size description of JS(0)", n_min=1)
def _check_ljs0(c: Char, n: int):
    fails = []
    lams = enumerate_rpp(c, n)
    for lam in lams:
        combi, crystal = _js0_by_parts(c, lam), in_js(c, lam, 0)
        if combi != crystal:
            fails.append((str(lam), f"part-size test {combi}, epsilon test {crystal}"))
    return len(lams), fails


@_register("LPhillips3_8", "three equivalent descriptions of JS(0)")
def _check_phillips38(c: Char, n: int):
    fails = []
    lams = enumerate_rpp(c, n)
    for lam in lams:
        cls = js_class(c, lam)
        first = cls.residue == 0
        second = first and in_js(c, e_tilde(c, lam, 0), 1)
        third = False
        if cls.is_js:
            mu_cls = js_class(c, e_tilde(c, lam, cls.residue))
            third = mu_cls.is_js and ((cls.residue == 0) != (mu_cls.residue == 0))
        if not first == second == third:
            fails.append((str(lam), f"(i)={first} (ii)={second} (iii)={third}"))
    return len(lams), fails


@_register("LPhillips3_14", "basic labels seen through two JS steps")
def _check_phillips314(c: Char, n: int):
    fails = []
    alpha = alpha_label(c, n)
    lams = enumerate_rpp(c, n)
    for lam in lams:
        eps = eps_map(c, lam)
        left = lam == alpha and n % c.p == 1
        right = set(eps) == {0} and in_js(c, e_tilde(c, lam, 0), 0)
        if left != right:
            fails.append((str(lam), f"(i): basic with n=1 mod p is {left}, epsilon side is {right}"))
        left = lam == alpha and n % c.p not in (0, 1, 2)
        cls = js_class(c, lam)
        right = False
        if cls.is_js and cls.residue != 0:
            mu_cls = js_class(c, e_tilde(c, lam, cls.residue))
            right = mu_cls.is_js and mu_cls.residue != 0
        if left != right:
            fails.append((str(lam), f"(ii): basic with n=0,1,2 excluded is {left}, epsilon side is {right}"))
    return len(lams), fails


def _delta_js_case(c: Char, n: int, delta: Partition) -> str | None:
    p = c.p
    if p <= 3:
        return None
    if n == 6 and p > 5 and delta == _P(3, 2, 1):
        return "i"
    if n == 7 and delta == _P(4, 3):
        return "ii"
    if n % p == 0 and n // p >= 2:
        m = n // p
        if delta == Partition((p + 2,) + (p,) * (m - 2) + (p - 2,)):
            return "iii"
    return None


def _mod_p_tail_claim(c: Char, n: int) -> _Claim:
    """Depth-two containment shared by the JS and branching statements for n = mp."""
    p = c.p
    claim = _Claim()
    if p > 5:
        claim.add(2, gamma_label(c, n - 2)).add(2, beta_or_none(c, n - 2))
    elif n > 10:
        claim.add(2, _deltas(c, n - 2)).add(4, beta_or_none(c, n - 2))
    else:
        claim.add(4, beta_or_none(c, n - 2))
    return claim


@_register("Delta_JS", "which fourth-family labels are JS (every candidate)")
def _check_delta_js(c: Char, n: int):
    fails = []
    deltas = _deltas(c, n)
    for delta in deltas:
        cls = js_class(c, delta)
        case = _delta_js_case(c, n, delta)
        if cls.is_js != (case is not None):
            fails.append((str(delta), f"{cls} but listed case is {case}"))
            continue
        if case == "i" and (cls.residue != 0 or a_parity(c, delta) != 1):
            fails.append((str(delta), f"case (i) expects JS(0), a=1; got {cls}, a={a_parity(c, delta)}"))
        if case == "ii" and (cls.residue != 2 or a_parity(c, delta) != 1):
            fails.append((str(delta), f"case (ii) expects JS(2), a=1; got {cls}, a={a_parity(c, delta)}"))
        if case == "iii":
            m = n // c.p
            if cls.residue != 2 or a_parity(c, delta) != sigma(m):
                fails.append((str(delta), f"case (iii) expects JS(2), a={sigma(m)}; got {cls}, a={a_parity(c, delta)}"))
            bound = guaranteed_depth(c, delta, 2)
            fails.extend((str(delta), msg) for msg in _certify(_mod_p_tail_claim(c, n), bound, "res_{n-2}"))
    return len(deltas), fails


@_register("L4Cases", "case split for non-basic JS partitions")
def _check_l4cases(c: Char, n: int):
    fails = []
    alpha = alpha_label(c, n)
    checked = 0
    for lam in enumerate_rpp(c, n):
        if lam == alpha or not js_class(c, lam).is_js:
            continue
        checked += 1
        tags = matching_cases(c, lam)
        if c.p == 3 and tags == ["ii", "iii"]:
            continue
        if len(tags) != 1:
            fails.append((str(lam), f"matching cases {tags}"))
    return checked, fails


@_register("L220710", "two nonzero residues never lead to JS(0) in two steps")
def _check_l220710(c: Char, n: int):
    fails = []
    checked = 0
    for lam in enumerate_rpp(c, n):
        pair = _eps_pair(eps_map(c, lam))
        if pair is None or 0 in pair:
            continue
        checked += 1
        i, j = pair
        for x, y in ((i, j), (j, i)):
            nu = e_tilde(c, e_tilde(c, lam, y), x)
            if in_js(c, nu, 0):
                fails.append((str(lam), f"e~_{x} e~_{y} gives {nu} in JS(0)"))
    return checked, fails


@_register("LNotBothJS", "two residues of epsilon one are not both JS after one step")
def _check_lnotbothjs(c: Char, n: int):
    fails = []
    checked = 0
    for lam in enumerate_rpp(c, n):
        pair = _eps_pair(eps_map(c, lam))
        if pair is None:
            continue
        checked += 1
        i, j = pair
        if in_js(c, e_tilde(c, lam, i)) and in_js(c, e_tilde(c, lam, j)):
            fails.append((str(lam), f"both e~_{i} and e~_{j} are JS"))
    return checked, fails


def _two_residue_check(c: Char, n: int, with_zero: bool, d2_needed: int):
    fails = []
    checked = 0
    excluded = _labels_upto_delta(c, n)
    small1 = {alpha_label(c, n - 1), beta_or_none(c, n - 1), gamma_label(c, n - 1)} - {None}
    for lam in enumerate_rpp(c, n):
        if lam in excluded:
            continue
        pair = _eps_pair(eps_map(c, lam))
        if pair is None or ((0 in pair) != with_zero):
            continue
        checked += 1
        i, j = pair
        q = a_parity(c, lam)
        coeff = {k: (2 ** q if k else 1) for k in pair}
        mus = {k: e_tilde(c, lam, k) for k in pair}
        bound = guaranteed_restriction(c, lam)
        for k, mu in mus.items():
            if bound[mu] < coeff[k]:
                fails.append((str(lam), f"restriction lacks {coeff[k]}*({mu})"))
            if mu in small1:
                fails.append((str(lam), f"e~_{k} gives the label {mu}"))
        if in_js(c, mus[i]) and in_js(c, mus[j]):
            fails.append((str(lam), "both one-step results are JS"))
        d1, d2 = d_lower(c, lam, 1), d_lower(c, lam, 2)
        if d1 < 2:
            fails.append((str(lam), f"d_1 >= {d1} only"))
        if d2 < d2_needed:
            fails.append((str(lam), f"d_2 >= {d2} only, need {d2_needed}"))
    return checked, fails


@_register("LIJNZ", "two nonzero residues of epsilon one: restriction and d_2 >= 5")
def _check_lijnz(c: Char, n: int):
    return _two_residue_check(c, n, with_zero=False, d2_needed=5)


@_register("LIJZ", "residue 0 and one other of epsilon one: restriction and d_2 >= 3")
def _check_lijz(c: Char, n: int):
    return _two_residue_check(c, n, with_zero=True, d2_needed=3)


@_register("LEpsI2NonJS", "a single residue of epsilon two gives d_2 >= 3")
def _check_lepsi2(c: Char, n: int):
    fails = []
    checked = 0
    excluded = _labels_upto_delta(c, n)
    for lam in enumerate_rpp(c, n):
        if lam in excluded:
            continue
        eps = eps_map(c, lam)
        if len(eps) != 1 or list(eps.values()) != [2]:
            continue
        checked += 1
        d2 = d_lower(c, lam, 2)
        if d2 < 3:
            fails.append((str(lam), f"d_2 >= {d2} only"))
    return checked, fails


# --- branching of the third and fourth families ----------------------------

def _gb_claim(c: Char, n: int) -> tuple[str, _Claim] | None:
    p = c.p
    beta1, gamma1 = beta_or_none(c, n - 1), gamma_label(c, n - 1)
    if p == 0 or n < p:
        return "i", _Claim().add(2 ** sigma(n), gamma1).add(2 ** sigma(n), beta1)
    a, b = _split(c, n)
    if n == p + 1:
        return "ii", _Claim().add(1, alpha_label(c, n - 1)).add(2, beta1)
    if a >= 2 and b == 1:
        if (n, p) == (7, 3):
            return "iii", _Claim().add(4, beta1)
        k = 2 ** sigma(n)
        return "iii", _Claim().add(2 * k, beta1).add(k, _deltas(c, n - 1))
    if b == 2:
        return "iv", _Claim().add(2 ** sigma(n + 1), beta1).add(1, gamma1)
    if a == 1 and b == 4:
        return "v", _Claim().add(4, beta1)
    if a >= 2 and b == 4:
        k = 2 ** sigma(n)
        return "vi", _Claim().add(2 * k, beta1).add(k, _deltas(c, n - 1))
    if a >= 1 and 4 < b < p:
        k = 2 ** sigma(a + b)
        return "vii", _Claim().add(k, beta1).add(k, gamma1)
    return None


@_register("GB", "restriction of the third label contains the stated factors", chars="any", n_min=6)
def _check_gb(c: Char, n: int):
    gamma = gamma_label(c, n)
    if gamma is None:
        return 0, []
    found = _gb_claim(c, n)
    if found is None:
        return 1, [(str(gamma), "no case of the statement applies")]
    case, claim = found
    bound = guaranteed_restriction(c, gamma)
    return 1, [(str(gamma), msg) for msg in _certify(claim, bound, f"case ({case}) res_{{n-1}}")]


def _delta_exceptions(c: Char, n: int, delta: Partition) -> list[tuple[str, _Claim, _Claim]]:
    """Exceptional cases whose hypotheses hold, with their depth-one and depth-two claims."""
    p = c.p
    out = []
    g1, g2 = gamma_label(c, n - 1), gamma_label(c, n - 2)
    b2 = beta_or_none(c, n - 2)
    a1, a2 = alpha_label(c, n - 1), alpha_label(c, n - 2)
    if n == 6 and p > 5 and delta == _P(3, 2, 1):
        out.append(("i", _Claim().add(1, g1), _Claim().add(2, b2)))
    if n == 7 and p > 3 and delta == _P(4, 3):
        two = _Claim().add(2, b2).add(2, g2) if p > 5 else _Claim().add(4, b2).add(2, a2)
        out.append(("ii", _Claim().add(2, g1), two))
    if n == 7 and p > 5 and delta == _P(4, 2, 1):
        out.append(("iii", _Claim().add(1, g1).add(1, _deltas(c, n - 1)), _Claim().add(1, b2).add(2, g2)))
    if p > 3 and n == p + 3 and delta == _P(p, 2, 1):
        out.append(("iv", _Claim().add(2, g1).add(1, a1), _Claim().add(1, a2).add(2, b2).add(2, g2)))
    if p > 3 and n % p == 3 and n // p >= 2:
        m = n // p
        if delta == Partition((p + 2,) + (p,) * (m - 1) + (1,)):
            out.append(("v", _Claim().add(2, g1), _Claim().add(2 * 2 ** sigma(m - 1), b2).add(2, g2)))
    if p > 5 and n == p + 6 and delta == _P(p + 3, 3):
        out.append(("vi", _Claim().add(2, g1), _Claim().add(2, b2).add(2, g2)))
    if p == 3 and n % 3 == 0 and n >= 9:
        a = n // 3 - 1
        if delta == Partition((5,) + (3,) * (a - 1) + (1,)):
            out.append(("vii", _Claim().add(2, g1), _Claim().add(2 * 2 ** sigma(a - 1), b2).add(2, g2)))
    if p > 3 and n % p == 0 and n // p >= 2:
        m = n // p
        if delta == Partition((p + 2,) + (p,) * (m - 2) + (p - 2,)):
            out.append(("viii", _Claim().add(2 ** sigma(m), g1), _mod_p_tail_claim(c, n)))
    return out


@_register("LDeltaBr", "d_1 >= 2 and d_2 >= 3 for the fourth family, or a listed exception (every candidate)")
def _check_ldeltabr(c: Char, n: int):
    fails = []
    deltas = _deltas(c, n)
    for delta in deltas:
        exceptions = _delta_exceptions(c, n, delta)
        if not exceptions:
            d1, d2 = d_lower(c, delta, 1), d_lower(c, delta, 2)
            if d1 < 2 or d2 < 3:
                fails.append((str(delta), f"d_1 >= {d1}, d_2 >= {d2} and no exception applies"))
            continue
        one, two = guaranteed_depth(c, delta, 1), guaranteed_depth(c, delta, 2)
        for case, claim1, claim2 in exceptions:
            msgs = _certify(claim1, one, f"({case}) res_{{n-1}}") + _certify(claim2, two, f"({case}) res_{{n-2}}")
            fails.extend((str(delta), msg) for msg in msgs)
    return len(deltas), fails


# --- JS(0) branching --------------------------------------------------------

def _js0_candidates(c: Char, n: int):
    skip = {alpha_label(c, n), beta_or_none(c, n)}
    for lam in enumerate_rpp(c, n):
        if lam not in skip and in_js(c, lam, 0):
            yield lam


@_register("JS02", "JS(0) partitions lose three large factors by depth three", n_min=12)
def _check_js02(c: Char, n: int):
    fails = []
    checked = 0
    for lam in _js0_candidates(c, n):
        checked += 1
        d3 = d_lower(c, lam, 3)
        if d3 >= 3:
            continue
        if c.p >= 5 and n % c.p == 1 and n // c.p >= 2:
            continue
        fails.append((str(lam), f"d_3 >= {d3} only"))
    return checked, fails


def _js0_min_degree(c: Char) -> int:
    if c.p == 3:
        return 13
    if c.p == 5:
        return 17
    return 11


def _js0_exception(c: Char, n: int, lam: Partition) -> tuple[str, _Claim] | None:
    p = c.p
    a6, b6 = alpha_label(c, n - 6), beta_or_none(c, n - 6)
    if p > 7 and lam == _P(p - 3, 3, 2, 1):
        claim = _Claim().add(4, a6).add(20, b6).add(16, _P(p - 5, 2)).add(4, _P(p - 6, 2, 1))
        return "a", claim
    if p >= 7 and len(lam) >= 4 and lam[:2] == (p + 2, p + 1) and lam[-2:] == (p - 1, 1) \
            and all(x == p for x in lam[2:-2]):
        a = len(lam) - 4
        claim = (_Claim()
                 .add(4, Partition((p + 2, p + 1) + (p,) * a + (p - 6,)))
                 .add(16, Partition((p + 2,) + (p,) * (a + 1) + (p - 5,)))
                 .add(4, a6).add(20, b6))
        return "b", claim
    if p == 5 and n == 18 and lam == _P(7, 6, 4, 1):
        return "c", _Claim().add(20, _P(7, 4, 1)).add(16, b6).add(8, a6)
    return None


@_register("JS0_prop", "JS(0) partitions lose 24 large factors by depth six, or a listed exception",
           n_min=_js0_min_degree)
def _check_js0_prop(c: Char, n: int):
    fails = []
    checked = 0
    for lam in _js0_candidates(c, n):
        checked += 1
        exception = _js0_exception(c, n, lam)
        if exception is not None:
            case, claim = exception
            msgs = _certify(claim, guaranteed_depth(c, lam, 6), f"({case}) res_{{n-6}}")
            fails.extend((str(lam), m) for m in msgs)
            continue
        d6 = d_lower(c, lam, 6)
        if d6 < 24:
            fails.append((str(lam), f"d_6 >= {d6} only"))
    return checked, fails


# --- blocks of two small cases, arithmetic, characteristic zero ------------

def _unique_in_block(c: Char, n: int, target: Partition, want: dict) -> Failures:
    fails = []
    if block_content(c, target) != want:
        fails.append((str(target), f"block {block_content(c, target)} != {want}"))
    strict = [lam for lam in enumerate_rpp(Char(0), n) if block_content(c, lam) == want]
    restricted = [lam for lam in enumerate_rpp(c, n) if block_content(c, lam) == want]
    if strict != [target]:
        fails.append((str(target), f"strict partitions in the block: {[str(x) for x in strict]}"))
    if restricted != [target]:
        fails.append((str(target), f"restricted partitions in the block: {[str(x) for x in restricted]}"))
    return fails


@_register("LFactor_blocks", "uniqueness of two partitions in their blocks")
def _check_lfactor(c: Char, n: int):
    p, ell = c.p, c.ell
    if p > 5 and n == p + 1:
        want = {i: 2 for i in range(ell + 1)}
        want[1], want[ell] = 3, 1
        return 1, _unique_in_block(c, n, _P(p - 1, 2), dict(sorted(want.items())))
    if p > 3 and n == p + 4:
        want = {i: 2 for i in range(ell + 1)}
        want[0], want[1], want[ell] = 4, 4, 1
        return 1, _unique_in_block(c, n, _P(p + 2, 2), dict(sorted(want.items())))
    return 0, []


@_register("bound1", "f*(n) <= 24 f(n-6)", chars="any", n_min=23)
def _check_bound1(c: Char, n: int):
    if (n, c.p) == (24, 17):
        return 0, []
    if bound1_holds(c, n):
        return 1, []
    return 1, [("", f"f*({n}) = {fstar_bound(c, n)} > 24 f({n - 6}) = {24 * f_bound(c, n - 6)}")]


@_register("MainThm_char0", "large characteristic-zero supermodules reach f and f*", chars="zero", n_min=12)
def _check_main0(c: Char, n: int):
    report = charzero.main_theorem_check_char0(n, n)
    return report.checked, [(lam, detail) for _, lam, detail in report.counterexamples]


# --- runner ---------------------------------------------------------------

def list_lemmas() -> list[str]:
    return list(REGISTRY)


def _run_one(args):
    lemma_id, p, n = args
    return REGISTRY[lemma_id].check(Char(p), n)


def verify(lemma_id: str, c: Char, n_lo: int, n_hi: int, threads: int = 1) -> VerifyReport:
    """Run one registered check over ``n_lo..n_hi`` (clipped to its hypotheses)."""
    if lemma_id not in REGISTRY:
        raise ValueError(f"unknown lemma id {lemma_id!r}; known: {', '.join(REGISTRY)}")
    lemma = REGISTRY[lemma_id]
    if lemma.chars == "positive" and c.p == 0:
        raise ValueError(f"{lemma_id} concerns positive characteristic")
    if lemma.chars == "zero" and c.p != 0:
        raise ValueError(f"{lemma_id} concerns characteristic 0")
    lo = max(n_lo, lemma.min_degree(c))
    if lo > n_hi:
        raise ValueError(f"{lemma_id} needs n >= {lemma.min_degree(c)}; range {n_lo}..{n_hi} is empty")
    report = VerifyReport(lemma_id, {"p": c.p, "n": [lo, n_hi]})
    if lo != n_lo:
        report.notes.append(f"degrees below {lo} are outside the hypotheses and were skipped")
    jobs = [(lemma_id, c.p, n) for n in range(lo, n_hi + 1)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(job) for job in jobs]
    for checked, fails in results:
        report.checked += checked
        report.counterexamples.extend((c.p, lam, detail) for lam, detail in fails)
    return report


__all__ = ["Lemma", "REGISTRY", "list_lemmas", "verify"]
