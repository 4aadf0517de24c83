import logging

from pydantic import ValidationError

from ..models import SurveyFilter, SurveyReport
from ..reconcile import PUBLISHED_TRIANGLE_FREE, REQUIRED_ORDERS, reconcile_published_counts
from ..survey import run_survey
from .base_command import BaseCommand

logger = logging.getLogger(__name__)


class ReconcileCommand(BaseCommand):
    """Compare survey reports with the published table

    Reports are read from --reports files; without them the connected surveys
    of orders 2, 4, 6 and 8 and the triangle-free survey of order 8 are run first.
    """

    def validate_args(self):
        self.paths = list(getattr(self.args, "reports", None) or [])

    def _load_reports(self) -> list[SurveyReport]:
        reports = []
        for path in self.paths:
            with open(path, "r", encoding="utf-8") as f:
                try:
                    reports.append(SurveyReport.model_validate_json(f.read()))
                except ValidationError as e:
                    raise ValueError(f"Invalid --reports file {path}: {e}") from e
        return reports

    def execute(self) -> int:
        if self.paths:
            reports = self._load_reports()
        else:
            reports = []
            for n in REQUIRED_ORDERS:
                logger.info("Surveying connected graphs of order %d", n)
                reports.append(run_survey(SurveyFilter(order=n, connected_only=True), self.config.workers))
            for n in sorted({order for order, _ in PUBLISHED_TRIANGLE_FREE}):
                logger.info("Surveying connected triangle-free graphs of order %d", n)
                reports.append(run_survey(SurveyFilter(order=n, triangle_free=True), self.config.workers))

        document = reconcile_published_counts(reports)
        if self.is_json:
            self.emit(document.model_dump_json(indent=2))
        elif self.is_csv:
            self.emit_csv(
                ["order", "column", "published", "status", "population", "derived", "variants", "reading_status"],
                [
                    (
                        cell.order,
                        cell.column,
                        cell.published,
                        cell.status.value,
                        reading.population,
                        reading.derived,
                        " ".join(f"{k}={v}" for k, v in reading.variants.items()),
                        reading.status.value,
                    )
                    for cell in document.cells
                    for reading in cell.readings
                ],
            )
        else:
            for cell in document.cells:
                readings = "  ".join(
                    f"{r.population}={r.derived}"
                    + "".join(f"/{k}={v}" for k, v in r.variants.items())
                    + f" {r.status.value}"
                    for r in cell.readings
                )
                self.emit(f"{cell.column + '(' + str(cell.order) + ')':<22}{cell.published:>5}  {cell.status.value:<20}{readings}")
            self.emit(f"violations: {len(document.violations)}")
            for violation in document.violations:
                self.emit(f"  {violation}")
        return 0
