import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinbranch.labels import (
    DimRecord,
    a_n,
    alpha_label,
    b_n,
    basic_type,
    beta_label,
    beta_or_none,
    bound1_holds,
    delta_coverage,
    delta_labels,
    dims,
    f_bound,
    fstar_bound,
    fstar_closed,
    gamma_label,
    labels,
    second_basic_type,
)
from spinbranch.partitions import Char, Partition, a_parity, is_restricted

P = Partition
CHARS = [0, 3, 5, 7, 11, 13]


class TestLabelExamples:
    def test_alpha(self):
        assert alpha_label(Char(5), 7) == (5, 2)
        assert alpha_label(Char(5), 10) == (5, 4, 1)
        assert alpha_label(Char(0), 9) == (9,)

    def test_beta(self):
        assert beta_label(Char(5), 6) == (3, 2, 1)
        assert beta_label(Char(5), 12) == (6, 5, 1)
        assert beta_label(Char(0), 13) == (12, 1)

    def test_beta_small_degree(self):
        with pytest.raises(ValueError):
            beta_label(Char(5), 3)
        assert beta_or_none(Char(5), 3) is None

    def test_gamma(self):
        assert gamma_label(Char(5), 7) == (4, 2, 1)
        assert gamma_label(Char(3), 5) is None
        assert gamma_label(Char(0), 9) == (7, 2)

    def test_delta(self):
        assert delta_labels(Char(3), 9) == (P((5, 3, 1)),)
        assert delta_labels(Char(7), 9) == (P((6, 3)),)
        assert delta_labels(Char(11), 6) == (P((3, 2, 1)),)

    def test_family_dict(self):
        got = labels(Char(3), 9)
        assert set(got) == {"alpha", "beta", "delta"}
        assert got["beta"] == (P((4, 3, 2)),)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_labels_are_restricted_and_distinct(p):
    c = Char(p)
    for n in range(5, 41):
        fam = labels(c, n)
        seen = []
        for name, cands in fam.items():
            for lam in cands:
                assert is_restricted(c, lam) and lam.n == n, (name, n, lam)
                if name != "delta":
                    seen.append(lam)
        assert len(seen) == len(set(seen))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_gamma_missing_exactly_at_zero_and_three(p):
    c = Char(p)
    for n in range(p + 3, 60):
        missing = gamma_label(c, n) is None
        assert missing == (n % p in (0, 3 % p)), n


def test_delta_coverage():
    for p in (3, 5, 7, 11):
        assert set(delta_coverage(Char(p), 5, 60)) <= {5}


class TestDims:
    def test_examples(self):
        assert a_n(Char(5), 10) == 16
        assert b_n(Char(0), 13) == 704
        assert f_bound(Char(0), 13) == 1408
        assert fstar_bound(Char(5), 12) == 1280
        assert fstar_bound(Char(7), 16) == 7168

    def test_record(self):
        rec = dims(Char(5), 12)
        assert isinstance(rec, DimRecord)
        assert (rec.a_n, rec.b_n, rec.f_n, rec.fstar_n) == (64, 320, 640, 1280)
        assert rec.to_dict()["fstar_n"] == "1280"
        assert all(isinstance(v, str) for v in rec.to_dict().values())

    def test_small_degree_rejected(self):
        with pytest.raises(ValueError):
            dims(Char(5), 4)

    @pytest.mark.parametrize("p", CHARS)
    def test_fstar_forms_agree(self, p):
        c = Char(p)
        for n in range(5, 201):
            assert fstar_bound(c, n) == fstar_closed(c, n)
            assert fstar_bound(c, n) >= f_bound(c, n)

    @pytest.mark.parametrize("p", CHARS)
    def test_types_match_parity(self, p):
        c = Char(p)
        for n in range(5, 80):
            assert basic_type(c, n) == "MQ"[a_parity(c, alpha_label(c, n))]
            assert second_basic_type(c, n) == "MQ"[a_parity(c, beta_label(c, n))]

    @given(st.sampled_from(CHARS), st.integers(5, 400))
    def test_monotone(self, p, n):
        c = Char(p)
        assert a_n(c, n + 1) >= a_n(c, n)
        assert b_n(c, n + 1) >= b_n(c, n)
        assert b_n(c, n) >= a_n(c, n)


class TestBound1:
    def test_known_exception(self):
        assert not bound1_holds(Char(17), 24)

    @pytest.mark.parametrize("p", [0, 3, 5, 7, 11, 13, 17, 19, 23])
    def test_holds_on_grid(self, p):
        c = Char(p)
        for n in range(23, 201):
            if (n, p) != (24, 17):
                assert bound1_holds(c, n), n
