from ..models import ClassCounts
from ..poly import classify
from ..spectral import char_poly
from .base_command import BaseCommand


class ClassifyCommand(BaseCommand):
    def validate_args(self):
        pass

    def execute(self) -> int:
        counts = ClassCounts()
        rows = []
        for text, g in self.read_graphs():
            verdict = classify(char_poly(g))
            counts.add(verdict.kind.value, verdict.absolute)
            rows.append((text, verdict))

        if self.is_json:
            self.emit_json(
                {
                    "graphs": [
                        {"graph6": text, "class": v.label, "absolute": v.absolute} for text, v in rows
                    ],
                    "counts": counts.model_dump(),
                }
            )
        elif self.is_csv:
            self.emit_csv(["graph6", "class", "absolute"], [(t, v.label, v.absolute) for t, v in rows])
        else:
            for text, verdict in rows:
                self.emit(verdict.label if len(rows) == 1 else f"{text}\t{verdict.label}")
        return 0
