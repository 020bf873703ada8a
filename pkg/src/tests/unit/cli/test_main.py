from collections.abc import Callable
import csv
import io
import json
from pathlib import Path

import pytest
from pytest_mock import MockerFixture
from result import Err

from src.graphs.bipartite import BipartiteGraph
from src.cli.main import main
from src.graphs.graph6 import encode_payload
from src.models.enums.error_status import ErrorStatus
from src.models.enums.oracle_engine import OracleEngine
from src.models.error_result import ErrorResult
from src.models.hamiltonicity import HamiltonicityProfile
from src.services.graph_service import GraphService
from src.tests.fixtures.cli_fixtures import CliRun

RunCli = Callable[..., CliRun]


def test_index__edges(run_cli: RunCli) -> None:
    # Act
    result = run_cli("index", "--edges", "0-1,1-2")

    # Assert
    assert result.code == 0
    data = json.loads(result.out)
    assert data["wiener"] == 4
    assert data["hyperWiener"] == 5
    assert data["harary"] == "5/2"
    assert data["transmissions"] == [3, 2, 3]


def test_index__stdin(run_cli: RunCli, mocker: MockerFixture) -> None:
    # Arrange
    mocker.patch("sys.stdin", io.StringIO("# path\n0 1\n1 2\n"))

    # Act
    result = run_cli("index", "--file", "-")

    # Assert
    assert result.code == 0
    assert json.loads(result.out)["wiener"] == 4


def test_index__graph6_file(run_cli: RunCli, tmp_path: Path) -> None:
    # Arrange
    path = tmp_path / "k3.g6"
    path.write_text(">>graph6<<Bw\n", encoding="ascii")

    # Act
    result = run_cli("index", "--file", str(path), "--format", "plain")

    # Assert
    assert result.code == 0
    assert "wiener: 3\n" in result.out


def test_index__malformed_graph6(run_cli: RunCli) -> None:
    # Act
    result = run_cli("index", "--graph6", "~~~")

    # Assert
    assert result.code == 2
    assert "error: malformed graph6" in result.err


def test_index__loop_edge(run_cli: RunCli) -> None:
    # Act
    result = run_cli("index", "--edges", "0-0")

    # Assert
    assert result.code == 2


def test_index__missing_file(run_cli: RunCli, tmp_path: Path) -> None:
    # Act
    result = run_cli("index", "--file", str(tmp_path / "absent.g6"))

    # Assert
    assert result.code == 2


def test_index__service_error(run_cli: RunCli, mocker: MockerFixture) -> None:
    # Arrange
    mocker.patch.object(
        GraphService, "index", return_value=Err(ErrorResult(status=ErrorStatus.INTERNAL_ERROR, details="boom"))
    )

    # Act
    result = run_cli("index", "--edges", "0-1")

    # Assert
    assert result.code == 1
    assert result.err == "error: boom\n"


def test_family__plain(run_cli: RunCli) -> None:
    # Act
    result = run_cli("family", "C", "7", "2", "--format", "plain")

    # Assert
    assert result.code == 0
    lines = result.out.splitlines()
    assert lines[0].startswith("X: ")
    assert len(lines[0].split()) == 1 + 7
    assert lines[1].startswith("graph6: ")


def test_family__quasi_complement(run_cli: RunCli) -> None:
    # Act
    result = run_cli("family", "C", "7", "2", "--quasi-complement")

    # Assert
    assert result.code == 0
    assert json.loads(result.out)["X"] is not None


def test_family__k_out_of_range(run_cli: RunCli) -> None:
    # Act
    result = run_cli("family", "L_under", "6", "3")

    # Assert
    assert result.code == 2


def test_family__unknown_name(run_cli: RunCli) -> None:
    # Act
    result = run_cli("family", "Z", "6", "1")

    # Assert
    assert result.code == 2


def test_complement(run_cli: RunCli) -> None:
    # Act
    result = run_cli("complement", "--graph6", "Bw")

    # Assert
    assert result.code == 0
    assert json.loads(result.out)["graph6"] == "B?"


def test_complement__quasi_needs_parts(run_cli: RunCli) -> None:
    # Act
    without_parts = run_cli("complement", "--edges", "0-2,1-3", "--quasi")
    with_parts = run_cli("complement", "--edges", "0-2,1-3", "--parts", "0,1", "--quasi")

    # Assert
    assert without_parts.code == 2
    assert with_parts.code == 0
    assert json.loads(with_parts.out)["X"] == [0, 1]


def test_oracle__profile(run_cli: RunCli) -> None:
    # Act
    result = run_cli("oracle", "--graph6", "Bw")

    # Assert
    assert result.code == 0
    data = json.loads(result.out)
    assert data["hamiltonian"]
    assert data["hamiltonConnected"]
    assert sorted(data["cycleWitness"]) == [0, 1, 2]


def test_oracle__single_property(run_cli: RunCli) -> None:
    # Act
    result = run_cli("oracle", "--family", "C", "4", "1", "--traceable", "--engine", "held_karp")

    # Assert
    assert result.code == 0
    data = json.loads(result.out)
    assert data["prop"] == "traceable"
    assert data["holds"] is False
    assert data["engine"] == "held_karp"


def test_oracle__cross_check(run_cli: RunCli) -> None:
    # Act
    result = run_cli("oracle", "--edges", "0-1,1-2,2-3,3-0", "--cross-check")

    # Assert
    assert result.code == 0
    assert json.loads(result.out)["agreeing"] == 1


def test_oracle__size_cap(run_cli: RunCli) -> None:
    # Act
    result = run_cli("oracle", "--edges", "0-1,1-2,2-3", "--cap", "3")

    # Assert
    assert result.code == 2


def test_oracle__invalid_cap(run_cli: RunCli) -> None:
    # Act
    result = run_cli("oracle", "--edges", "0-1", "--cap", "0")

    # Assert
    assert result.code == 2


def test_check(run_cli: RunCli) -> None:
    # Act
    result = run_cli("check", "L4.1", "--family", "B", "5", "1", "--k", "1")

    # Assert
    assert result.code == 0
    data = json.loads(result.out)
    assert data["applicable"]
    assert data["hypothesisHolds"]
    assert data["lhs"] == "21"
    assert data["rhs"] == "19"


def test_check__unknown_entry(run_cli: RunCli) -> None:
    # Act
    result = run_cli("check", "X9.9", "--edges", "0-1", "--k", "1")

    # Assert
    assert result.code == 2
    assert "X9.9" in result.err


def test_verify__family_member(run_cli: RunCli, tmp_path: Path) -> None:
    # Arrange
    out = tmp_path / "records.jsonl"
    summary = tmp_path / "summary.csv"

    # Act
    result = run_cli(
        "verify",
        "--family", "B", "5", "1",
        "--entries", "L4.1",
        "--k", "1",
        "--no-timestamp",
        "--out", str(out),
        "--summary", str(summary),
    )  # fmt: skip

    # Assert
    assert result.code == 0
    record = json.loads(out.read_text(encoding="utf-8"))
    assert record["status"] == "explained-by-exception"
    rows = list(csv.DictReader(io.StringIO(summary.read_text(encoding="utf-8"))))
    assert rows[0]["entry_id"] == "L4.1"
    assert rows[0]["explained"] == "1"
    data = json.loads(result.out)
    assert data["timestamp"] is None
    assert data["records"] == []
    assert data["recordCount"] == 1


def test_verify__findings_exit_code(
    run_cli: RunCli, mocker: MockerFixture, tmp_path: Path, k55: BipartiteGraph
) -> None:
    # Arrange
    path = tmp_path / "corpus.jsonl"
    path.write_text(encode_payload(k55).model_dump_json(by_alias=True) + "\n", encoding="ascii")
    mocker.patch(
        "src.harness.verify.hamiltonicity_profile",
        return_value=HamiltonicityProfile(
            hamiltonian=False,
            traceable=True,
            hamilton_connected=False,
            traceable_from_every_vertex=True,
            engine=OracleEngine.BACKTRACKING,
        ),
    )

    # Act
    result = run_cli("verify", "--graph6-file", str(path), "--entries", "L4.1", "--format", "plain")

    # Assert
    assert result.code == 3
    assert "findings: 1" in result.out.splitlines()


def test_verify__unknown_entries(run_cli: RunCli) -> None:
    # Act
    result = run_cli("verify", "--family", "B", "5", "1", "--entries", "Z*")

    # Assert
    assert result.code == 2


def test_closed_forms__csv(run_cli: RunCli) -> None:
    # Act
    result = run_cli("closed-forms", "--n-max", "5", "--k-max", "1", "--format", "csv")

    # Assert
    assert result.code == 0
    rows = list(csv.DictReader(io.StringIO(result.out)))
    assert rows
    assert {"params.family", "quantity", "match"} <= set(rows[0])


def test_catalog(run_cli: RunCli) -> None:
    # Act
    result = run_cli("catalog", "--entries", "T7.*")

    # Assert
    assert result.code == 0
    data = json.loads(result.out)
    assert data["total"] == 3
    assert [item["id"] for item in data["items"]] == ["T7.2", "T7.3", "T7.4"]
    assert data["items"][0]["edgeLemma"] == "L7.1"


def test_catalog__csv(run_cli: RunCli) -> None:
    # Act
    result = run_cli("catalog", "--format", "csv")

    # Assert
    assert result.code == 0
    assert len(list(csv.DictReader(io.StringIO(result.out)))) == 28


def test_missing_subcommand() -> None:
    # Act / Assert
    with pytest.raises(SystemExit):
        main([])


def test_verify__keep_records(run_cli: RunCli) -> None:
    # Act
    result = run_cli("verify", "--family", "B", "5", "1", "--entries", "L4.1", "--k", "1", "--keep-records")

    # Assert
    assert result.code == 0
    assert [r["status"] for r in json.loads(result.out)["records"]] == ["explained-by-exception"]


def test_exceptions__family_member(run_cli: RunCli) -> None:
    # Act
    result = run_cli("exceptions", "L4.1", "--family", "B", "5", "1", "--k", "1")

    # Assert
    assert result.code == 0
    items = json.loads(result.out)["items"]
    assert [item["member"] for item in items] == [True]


def test_implication(run_cli: RunCli) -> None:
    # Act
    result = run_cli("implication", "T7.2", "--edges", "0-1,1-2,2-3,3-4,4-0", "--k", "1")

    # Assert
    assert result.code == 0
    data = json.loads(result.out)
    assert data["edgeThreshold"] == "7"
    assert data["derivationGap"] is not None


def test_bounds(run_cli: RunCli) -> None:
    # Act
    result = run_cli("bounds", "--edges", "0-1,1-2,2-3,3-4,4-0", "--format", "csv")

    # Assert
    assert result.code == 0
    rows = list(csv.DictReader(io.StringIO(result.out)))
    assert [row["lemmaId"] for row in rows] == ["L2.4", "L2.5", "L2.6"]
    assert {row["satisfied"] for row in rows} == {"true"}
