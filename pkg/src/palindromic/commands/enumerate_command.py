from ..graph6 import write_graph6
from ..generate import enumerate_connected, enumerate_graphs
from .base_command import BaseCommand


class EnumerateCommand(BaseCommand):
    """Write one canonical graph6 line per isomorphism class of the requested order"""

    def validate_args(self):
        if self.config.order is None or self.config.order < 1:
            raise ValueError("Invalid --n: order must be at least 1")

    def execute(self) -> int:
        n, workers = self.config.order, self.config.workers
        graphs = enumerate_connected(n, workers) if self.config.connected_only else enumerate_graphs(n, workers)
        codes = [write_graph6(g) for g in graphs]
        if self.is_json:
            self.emit_json(codes)
        else:
            for code in codes:
                self.emit(code)
        return 0
