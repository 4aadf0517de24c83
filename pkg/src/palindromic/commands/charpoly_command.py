from ..spectral import char_poly, char_poly_sachs
from .base_command import BaseCommand

METHODS = {
    "berkowitz": char_poly,
    "sachs": char_poly_sachs,
}


class CharpolyCommand(BaseCommand):
    def validate_args(self):
        method = getattr(self.args, "method", "berkowitz")
        if method not in METHODS:
            raise ValueError(f"Invalid --method: {method}")
        self.compute = METHODS[method]

    def execute(self) -> int:
        rows = [(text, self.compute(g)) for text, g in self.read_graphs()]

        if self.is_json:
            self.emit_json([{"graph6": text, "coefficients": p.to_json()} for text, p in rows])
        elif self.is_csv:
            self.emit_csv(["graph6", "coefficients"], [(text, " ".join(p.to_json())) for text, p in rows])
        else:
            for text, p in rows:
                self.emit(f"{text}\t{p.render()}")
        return 0
