from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from app.models.enums import Verdict

SCHEMA_VERSION = "supertrop/1"


class Envelope(BaseModel):
    """Every JSON document carries the schema tag."""

    schema_: str = Field(SCHEMA_VERSION, alias="schema")

    model_config = ConfigDict(populate_by_name=True)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)


class Failure(BaseModel):
    index: int
    input: str
    expected: str
    got: str


class TrialReport(Envelope):
    suite: str
    trials: int
    seed: int
    verdict: Verdict
    failures: list[Failure] = []
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.counterexample
