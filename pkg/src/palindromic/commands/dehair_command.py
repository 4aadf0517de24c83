from ..graph6 import write_graph6
from ..hairing import HairCertificate, dehair
from .base_command import BaseCommand


class DehairCommand(BaseCommand):
    """Recover the core of each input hairing, or report why it is not one

    A graph that is not a hairing is a valid answer, so the exit code stays 0
    """

    def validate_args(self):
        pass

    def execute(self) -> int:
        results = []
        for text, g in self.read_graphs():
            outcome = dehair(g)
            if isinstance(outcome, HairCertificate):
                results.append(
                    {
                        "graph6": text,
                        "hairing": True,
                        "core": write_graph6(outcome.core_graph),
                        "core_vertices": list(outcome.core),
                        "hair_of": {str(c): h for c, h in outcome.hair_of.items()},
                    }
                )
            else:
                results.append({"graph6": text, "hairing": False, "reason": outcome.reason})

        if self.is_json:
            self.emit_json(results)
        else:
            for result in results:
                if result["hairing"]:
                    self.emit(result["core"])
                else:
                    self.emit(f"not a hairing: {result['reason']}")
        return 0
