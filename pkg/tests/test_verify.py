import pytest

from spinbranch.branching import without_lowest_node_rule
from spinbranch.partitions import Char
from spinbranch.verify import REGISTRY, list_lemmas, verify

EXPECTED_IDS = [
    "TStem", "LABBlocks", "TLabels_socle", "LJS0", "LPhillips3_8", "LPhillips3_14",
    "Delta_JS", "L4Cases", "L220710", "LNotBothJS", "LIJNZ", "LIJZ", "LEpsI2NonJS",
    "GB", "LDeltaBr", "JS02", "JS0_prop", "LFactor_blocks", "bound1", "MainThm_char0",
]


def test_registry_listing():
    assert list_lemmas() == EXPECTED_IDS
    assert all(REGISTRY[k].description for k in EXPECTED_IDS)


@pytest.mark.parametrize("lemma_id,p,lo,hi", [
    ("TStem", 3, 1, 14),
    ("LJS0", 5, 1, 18),
    ("bound1", 7, 23, 120),
])
def test_documented_examples_pass(lemma_id, p, lo, hi):
    report = verify(lemma_id, Char(p), lo, hi)
    assert report.passed, report.counterexamples[:3]
    assert report.checked > 0


@pytest.mark.parametrize("lemma_id", ["LIJNZ", "LIJZ", "LEpsI2NonJS", "JS02", "LFactor_blocks"])
@pytest.mark.parametrize("p", [3, 5, 7])
def test_remaining_lemmas_pass(lemma_id, p):
    report = verify(lemma_id, Char(p), 1, 22)
    assert report.passed, report.counterexamples[:3]


def test_reports_are_reproducible():
    a = verify("LPhillips3_14", Char(5), 5, 16)
    b = verify("LPhillips3_14", Char(5), 5, 16)
    assert a.to_json() == b.to_json()
    assert a.counterexamples


def test_threads_give_identical_report():
    serial = verify("TLabels_socle", Char(5), 6, 20)
    parallel = verify("TLabels_socle", Char(5), 6, 20, threads=3)
    assert serial.to_json() == parallel.to_json()


def test_clipping_is_noted():
    report = verify("GB", Char(5), 1, 10)
    assert report.grid["n"] == [6, 10]
    assert report.notes


@pytest.mark.parametrize("args", [
    ("NoSuchLemma", Char(5), 5, 10),
    ("TStem", Char(5), 10, 5),
    ("LJS0", Char(0), 5, 10),
    ("MainThm_char0", Char(5), 12, 14),
    ("bound1", Char(5), 5, 20),
])
def test_bad_requests(args):
    with pytest.raises(ValueError):
        verify(*args)


def test_report_json_schema():
    data = verify("LABBlocks", Char(3), 6, 8).to_dict()
    assert set(data) == {"lemma_id", "grid", "checked", "counterexamples", "pass"}
    assert data["pass"] is True and isinstance(data["checked"], str)


def test_weakened_engine_is_caught():
    """Dropping one restriction rule must make the depth-six check fail."""
    assert verify("JS0_prop", Char(3), 13, 20).passed
    with without_lowest_node_rule():
        weakened = verify("JS0_prop", Char(3), 13, 20)
    assert not weakened.passed
    assert verify("JS0_prop", Char(3), 13, 20).passed
