from pentaflip.verification.result import CheckStatus
from pentaflip.verification.runner import run_suites
from pentaflip.verification.suites import FlipGraphChecks, GammaRelationChecks, LaurentChecks, \
    MatrixPentagonChecks, OracleCrosscheckChecks, PathIndependenceChecks, PentagonCycleChecks


def test_pentagon_cycle() -> None:
    results = run_suites([PentagonCycleChecks()])
    assert len(results.results()) == 2
    assert results.status() == CheckStatus.SUCCESS


def test_flip_graph_counts() -> None:
    results = run_suites([FlipGraphChecks([4, 5, 6, 7])])
    assert results.status() == CheckStatus.SUCCESS
    assert [r.log.metrics()["vertices"] for r in results.results()] == [2, 5, 14, 42]


def test_gamma_relations_on_pentagon() -> None:
    results = run_suites([GammaRelationChecks([5])])
    assert results.status() == CheckStatus.SUCCESS
    by_name = {r.check_name: r for r in results.results()}
    assert by_name["GammaRelationChecks.pentagon: n=5"].log.metrics()["instances"] == 1
    assert by_name["GammaRelationChecks.far_comm: n=5"].log.metrics()["instances"] == 0


def test_gamma_relations_report_vacuous_instances() -> None:
    results = run_suites([GammaRelationChecks([6])])
    assert results.status() == CheckStatus.SUCCESS
    far_comm = [r for r in results.results() if r.check_name == "GammaRelationChecks.far_comm: n=6"][0]
    assert far_comm.log.metrics()["vacuous"] > 0
    assert far_comm.status() == CheckStatus.SUCCESS


def test_matrix_pentagon() -> None:
    results = run_suites([MatrixPentagonChecks()])
    assert [r.status() for r in results.results()] == [CheckStatus.SUCCESS] * 5


def test_laurent() -> None:
    results = run_suites([LaurentChecks(6, 8, 5, 42)])
    assert results.status() == CheckStatus.SUCCESS
    assert results.results()[0].log.metrics()["labels_checked"] > 0


def test_oracle_crosscheck() -> None:
    results = run_suites([OracleCrosscheckChecks(100, 42)])
    assert len(results.results()) == 3
    assert results.status() == CheckStatus.SUCCESS


def test_oracle_crosscheck_is_seeded() -> None:
    first = run_suites([OracleCrosscheckChecks(5, 7, residual=False)]).to_json()
    second = run_suites([OracleCrosscheckChecks(5, 7, residual=False)]).to_json()
    assert first == second


def test_path_independence() -> None:
    assert run_suites([PathIndependenceChecks([5, 6])]).status() == CheckStatus.SUCCESS
