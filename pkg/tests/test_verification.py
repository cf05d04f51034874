import numpy as np
import pytest

from pipeline.verification.fuzz import MAX_ENTRY, MAX_N, fuzz, random_lattice
from pipeline.verification.verification_pipeline import VerificationPipeline
from schemas import VerifyOptions
from toric.intlinalg import normalize_gale


def test_running_example_passes_every_check(running):
    pipeline = VerificationPipeline(running)
    report = pipeline.process()
    assert report is not None
    assert report.overall, [c.name for c in report.checks if not c.passed]
    assert len(report.checks) == len(pipeline.building_blocks)
    assert len(pipeline.ideals) == 4
    assert report.parameters["degree_bound"] == 16
    assert report.parameters["saturation_index"] == 2


def test_selected_checks_only(running):
    report = VerificationPipeline(running).process(["two_flips", "tangent", "no_such_check"])
    assert [c.name for c in report.checks] == ["Two flips", "Tangent spaces"]
    assert report.overall


def test_oracle_is_skipped_beyond_limits(running):
    options = VerifyOptions(oracle_max_graver=3)
    report = VerificationPipeline(running, options).process(["oracle"])
    assert report.checks[0].passed
    assert report.checks[0].witness["skipped"] is True


@pytest.mark.parametrize("lattice", ["identity", "double", "cyclic"])
def test_small_lattices_pass(lattice, request):
    report = VerificationPipeline(request.getfixturevalue(lattice), VerifyOptions(jobs=2)).process()
    assert report.overall, [c.name for c in report.checks if not c.passed]


def test_report_json_uses_pass_key(identity):
    report = VerificationPipeline(identity).process(["two_flips"])
    data = report.model_dump(by_alias=True)
    assert data["checks"][0]["pass"] is True


def test_pdf_report(running, tmp_path):
    path = tmp_path / "reports" / "running.pdf"
    report = VerificationPipeline(running).process(["two_flips", "tangent"], str(path))
    assert report.overall
    assert path.exists()
    assert path.read_bytes().startswith(b"%PDF")


def test_random_lattices_are_normalized():
    rng = np.random.default_rng(3)
    for _ in range(20):
        L = random_lattice(rng)
        assert 2 <= L.n <= MAX_N
        assert all(abs(x) <= MAX_ENTRY for row in L.rows for x in row)


@pytest.mark.slow
def test_fuzz():
    reports = fuzz(seed=7, count=100, options=VerifyOptions(seed=7))
    assert len(reports) == 100
    assert all(r.overall for r in reports), [r.name for r in reports if not r.overall]
    for r in reports:
        graver = next(c for c in r.checks if c.name == "Graver basis")
        assert graver.passed, r.name


def test_oracle_counts_standard_monomials_of_any_degree():
    lattice, _ = normalize_gale([[1, -2], [-3, -4], [-1, 3]])
    report = VerificationPipeline(lattice).process(["oracle"])
    assert report.checks[0].passed, report.checks[0].witness
    assert report.checks[0].witness["oracle"] == report.checks[0].witness["fan"]
