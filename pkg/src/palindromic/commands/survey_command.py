import logging

from ..checkpoint import CheckpointStore
from ..generate import ingest_stream
from ..models import GraphSource, SurveyFilter, SurveyReport
from ..survey import classify_survey, conjecture_scan, run_survey
from .base_command import BaseCommand

logger = logging.getLogger(__name__)


def render_report(report: SurveyReport) -> list[str]:
    """Aligned text table of a survey report"""

    scope = "connected" if report.connected_only else "all"
    if report.triangle_free:
        scope += ", triangle-free"
    lines = [f"order {report.order} ({scope}), {report.graphs_examined} graphs examined"]
    lines.append(f"{'':<10}{'P.':>8}{'A.':>8}{'|P.|':>8}{'|P.| excl':>11}")
    for name, counts in (
        ("all", report.counts),
        ("hairings", report.hairing),
        ("trees", report.trees),
        ("bald", report.bald),
    ):
        lines.append(
            f"{name:<10}{counts.palindromic:>8}{counts.antipalindromic:>8}"
            f"{counts.absolute_inclusive:>8}{counts.absolute_exclusive:>11}"
        )
    for witness in report.witnesses:
        flags = [witness.palindrome_class] + [
            name for name in ("hairing", "tree", "bald") if getattr(witness, name)
        ]
        lines.append(f"{witness.graph6}\t{' '.join(flags)}")
    lines.append(f"violations: {len(report.violations)}")
    lines.extend(report.violations)
    return lines


class SurveyCommand(BaseCommand):
    def validate_args(self):
        if self.config.order is None or self.config.order < 1:
            raise ValueError("Invalid --n: order must be at least 1")
        if self.config.resume and not self.config.checkpoint:
            raise ValueError("Invalid --resume: needs --checkpoint")

        source = GraphSource.STREAM if self.config.input else GraphSource.BUILTIN
        if source is GraphSource.STREAM and self.config.checkpoint:
            raise ValueError("Invalid --checkpoint: only builtin surveys are checkpointed")
        self.filter = SurveyFilter(
            order=self.config.order,
            connected_only=self.config.connected_only,
            triangle_free=self.config.triangle_free,
            source=source,
        )

    def execute(self) -> int:
        if self.filter.source is GraphSource.STREAM:
            stream = ingest_stream(self.read_lines(), self.filter, dedupe=True)
            report = classify_survey(stream, self.filter)
            for error in stream.errors:
                logger.warning("Skipped line %d: %s", error.line, error.message)
        else:
            store = CheckpointStore(self.config.checkpoint) if self.config.checkpoint else None
            report = run_survey(self.filter, self.config.workers, store, self.config.resume)

        if not conjecture_scan(report):
            logger.warning("Order %d has witnesses breaking the order conjecture", report.order)

        if self.is_json:
            self.emit(report.model_dump_json(indent=2))
        elif self.is_csv:
            self.emit_csv(
                ["graph6", "order", "class", "hairing", "tree", "bald", "coefficients"],
                [
                    (w.graph6, w.order, w.palindrome_class, w.hairing, w.tree, w.bald, " ".join(w.coefficients))
                    for w in report.witnesses
                ],
            )
        else:
            for line in render_report(report):
                self.emit(line)
        return 0
