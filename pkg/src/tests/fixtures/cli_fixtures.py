from collections.abc import Callable
from typing import NamedTuple

import pytest
from pytest_mock import MockerFixture

from src.cli.main import main
from src.config.config import config


class CliRun(NamedTuple):
    code: int
    out: str
    err: str


@pytest.fixture
def run_cli(mocker: MockerFixture, capsys: pytest.CaptureFixture[str]) -> Callable[..., CliRun]:
    mocker.patch.object(config, "LOG_FILE_PATH", "")

    def run(*argv: str) -> CliRun:
        code = main(list(argv))
        out, err = capsys.readouterr()
        return CliRun(code, out, err)

    return run
