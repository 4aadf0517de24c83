from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, field_validator


class GraphSource(str, Enum):
    BUILTIN = "builtin-generator"
    STREAM = "graph6-stream"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class SurveyFilter(BaseModel):
    """Population of a survey"""

    order: int = Field(ge=1)
    connected_only: bool = True
    triangle_free: bool = False
    source: GraphSource = GraphSource.BUILTIN

    model_config = {"extra": "forbid", "frozen": True}

    def checkpoint_key(self) -> str:
        return (
            f"survey:n={self.order}:connected={int(self.connected_only)}"
            f":triangle_free={int(self.triangle_free)}"
        )


class ClassCounts(BaseModel):
    """Tallies per palindromic class

    absolute_inclusive counts every absolutely palindromic graph,
    absolute_exclusive only those that are neither palindromic nor antipalindromic
    """

    palindromic: int = 0
    antipalindromic: int = 0
    absolute_inclusive: int = 0
    absolute_exclusive: int = 0

    model_config = {"extra": "forbid"}

    def add(self, kind: str, absolute: bool) -> None:
        if kind == "palindromic":
            self.palindromic += 1
        elif kind == "antipalindromic":
            self.antipalindromic += 1
        elif absolute:
            self.absolute_exclusive += 1
        if absolute:
            self.absolute_inclusive += 1

    def merge(self, other: "ClassCounts") -> "ClassCounts":
        return ClassCounts(
            palindromic=self.palindromic + other.palindromic,
            antipalindromic=self.antipalindromic + other.antipalindromic,
            absolute_inclusive=self.absolute_inclusive + other.absolute_inclusive,
            absolute_exclusive=self.absolute_exclusive + other.absolute_exclusive,
        )

    @property
    def symmetric(self) -> int:
        return self.palindromic + self.antipalindromic


class Witness(BaseModel):
    """A palindromic or antipalindromic graph found by a survey"""

    graph6: str
    order: int
    coefficients: list[str]
    palindrome_class: str
    hairing: bool
    tree: bool
    bald: bool
    triangle_free: bool
    core: Optional[str] = None

    model_config = {"extra": "forbid"}


class CensusEntry(BaseModel):
    """One connected graph with its polynomial, kept to derive statistics of disconnected graphs"""

    graph6: str
    order: int
    coefficients: list[str]
    hairing: bool
    tree: bool
    bald: bool
    triangle_free: bool

    model_config = {"extra": "forbid"}


class SurveyReport(BaseModel):
    order: int
    connected_only: bool
    triangle_free: bool
    source: GraphSource
    graphs_examined: int = 0
    counts: ClassCounts = Field(default_factory=ClassCounts)
    hairing: ClassCounts = Field(default_factory=ClassCounts)
    trees: ClassCounts = Field(default_factory=ClassCounts)
    bald: ClassCounts = Field(default_factory=ClassCounts)
    violations: list[str] = Field(default_factory=list)
    witnesses: list[Witness] = Field(default_factory=list)
    census: list[CensusEntry] = Field(default_factory=list)

    model_config = {"extra": "forbid"}

    @classmethod
    def empty(cls, survey_filter: SurveyFilter) -> "SurveyReport":
        return cls(
            order=survey_filter.order,
            connected_only=survey_filter.connected_only,
            triangle_free=survey_filter.triangle_free,
            source=survey_filter.source,
        )

    def merge(self, other: "SurveyReport") -> "SurveyReport":
        """Combine two partial reports of the same population

        Raises:
            ValueError: If the reports describe different populations
        """

        if (self.order, self.connected_only, self.triangle_free) != (
            other.order,
            other.connected_only,
            other.triangle_free,
        ):
            raise ValueError("Invalid merge of reports with different filters")

        return SurveyReport(
            order=self.order,
            connected_only=self.connected_only,
            triangle_free=self.triangle_free,
            source=self.source,
            graphs_examined=self.graphs_examined + other.graphs_examined,
            counts=self.counts.merge(other.counts),
            hairing=self.hairing.merge(other.hairing),
            trees=self.trees.merge(other.trees),
            bald=self.bald.merge(other.bald),
            violations=self.violations + other.violations,
            witnesses=self.witnesses + other.witnesses,
            census=self.census + other.census,
        )

    def finalize(self) -> "SurveyReport":
        """Sort every list so equal populations give byte-identical reports"""

        return self.model_copy(
            update={
                "violations": sorted(self.violations),
                "witnesses": sorted(self.witnesses, key=lambda w: w.graph6),
                "census": sorted(self.census, key=lambda c: c.graph6),
            }
        )


class SurveyCheckpoint(BaseModel):
    """Progress of a chunked survey: chunks before next_chunk are merged into report"""

    key: str
    next_chunk: int
    total_chunks: int
    report: SurveyReport

    model_config = {"extra": "forbid"}


class CellStatus(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    AMBIGUOUS = "AMBIGUOUS-SEMANTICS"


class CellReading(BaseModel):
    """Value of a published cell derived under one population"""

    population: str
    derived: int
    variants: dict[str, int] = Field(default_factory=dict)
    status: CellStatus
    witnesses: list[str] = Field(default_factory=list)

    model_config = {"extra": "forbid"}


class ReconciliationCell(BaseModel):
    order: int
    column: str
    published: int
    status: CellStatus
    readings: list[CellReading]
    note: Optional[str] = None

    model_config = {"extra": "forbid"}


class ReconciliationDocument(BaseModel):
    orders: list[int]
    cells: list[ReconciliationCell]
    violations: list[str] = Field(default_factory=list)

    model_config = {"extra": "forbid"}

    def cell(self, order: int, column: str) -> ReconciliationCell:
        for cell in self.cells:
            if cell.order == order and cell.column == column:
                return cell
        raise KeyError(f"No cell {column}({order})")


class FamilyRecord(BaseModel):
    """Sidecar record of an emitted family member"""

    graph6: str
    order: int
    palindrome_class: str
    bald: bool
    hairs: int
    hair_ratio: str

    model_config = {"extra": "forbid"}


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    model_config = {"extra": "forbid"}


class CommandConfig(BaseModel):
    """Settings shared by every subcommand"""

    command: str
    input: Optional[str] = None
    output_format: OutputFormat = OutputFormat.TEXT
    order: Optional[int] = None
    k: int = 1
    connected_only: bool = False
    triangle_free: bool = False
    workers: int = 1
    checkpoint: Optional[str] = None
    resume: bool = False
    verbose: int = 0

    model_config = {"extra": "forbid"}

    @field_validator("workers")
    @classmethod
    def _check_workers(cls, value: int) -> int:
        if value < 1:
            raise ValueError("Invalid workers count")
        return value

    @field_validator("k")
    @classmethod
    def _check_k(cls, value: int) -> int:
        if value < 1:
            raise ValueError("Invalid hairing multiplicity")
        return value
