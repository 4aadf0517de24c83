from ..verify import FAST_CHECKS, SLOW_CHECKS, run_suite
from .base_command import BaseCommand


class VerifyCommand(BaseCommand):
    """Run the invariant suite; exit 1 when any check fails"""

    def validate_args(self):
        self.only = list(getattr(self.args, "only", None) or [])
        unknown = [name for name in self.only if name not in FAST_CHECKS and name not in SLOW_CHECKS]
        if unknown:
            raise ValueError(f"Invalid --only: unknown checks {unknown}")
        self.include_slow = bool(getattr(self.args, "slow", False))

    def execute(self) -> int:
        results = run_suite(include_slow=self.include_slow, only=self.only or None)

        if self.is_json:
            self.emit_json([r.model_dump() for r in results])
        elif self.is_csv:
            self.emit_csv(["check", "passed", "seconds", "detail"], [(r.name, r.passed, r.seconds, r.detail) for r in results])
        else:
            for r in results:
                self.emit(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<20}{r.seconds:>9.2f}s  {r.detail}")
        return 0 if all(r.passed for r in results) else 1
