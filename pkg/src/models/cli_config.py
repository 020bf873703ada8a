from pydantic import Field

from src.models.base import BaseModelWithConfig
from src.models.enums.oracle_engine import OracleEngine
from src.models.enums.output_format import OutputFormat


class CliConfig(BaseModelWithConfig):
    subcommand: str
    input_path: str | None = None
    output_format: OutputFormat = OutputFormat.JSON
    cap: int = Field(default=20, gt=0)
    threads: int = Field(default=1, gt=0)
    seed: int = 0
    engine: OracleEngine = OracleEngine.BACKTRACKING
