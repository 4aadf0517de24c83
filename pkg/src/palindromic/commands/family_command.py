from ..graph6 import parse_graph6
from ..tensor import bald_seed, family_generator
from .base_command import BaseCommand


class FamilyCommand(BaseCommand):
    """Product family of a seed with every input factor

    Members are written as graph6 lines; the JSON sidecar (one record per
    line) goes to --sidecar when given.
    """

    def validate_args(self):
        limit = getattr(self.args, "limit", None)
        if limit is not None and limit < 1:
            raise ValueError("Invalid --limit: must be at least 1")
        self.limit = limit
        self.seed_code = getattr(self.args, "seed", None)
        self.sidecar = getattr(self.args, "sidecar", None)

    def execute(self) -> int:
        seed = parse_graph6(self.seed_code) if self.seed_code else bald_seed()
        factors = (g for _, g in self.read_graphs())
        members = list(family_generator(seed, factors, self.limit))

        if self.sidecar:
            with open(self.sidecar, "w", encoding="utf-8") as f:
                for member in members:
                    f.write(member.record.model_dump_json() + "\n")

        if self.is_json:
            self.emit_json([m.record.model_dump() for m in members])
        else:
            for member in members:
                self.emit(member.record.graph6)
        return 0
