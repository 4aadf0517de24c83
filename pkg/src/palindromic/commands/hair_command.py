from ..graph6 import write_graph6
from ..hairing import hair_k
from .base_command import BaseCommand


class HairCommand(BaseCommand):
    """Attach k pendant vertices to every vertex of each input graph"""

    def validate_args(self):
        if self.config.k < 1:
            raise ValueError("Invalid --k: must be at least 1")

    def execute(self) -> int:
        codes = [write_graph6(hair_k(g, self.config.k)) for _, g in self.read_graphs()]
        if self.is_json:
            self.emit_json(codes)
        else:
            for code in codes:
                self.emit(code)
        return 0
