import csv
import io
import json
import sys

from abc import ABC, abstractmethod
from argparse import Namespace
from typing import Any, Iterator, Sequence

from ..errors import Graph6Error
from ..graph import Graph
from ..graph6 import parse_graph6
from ..models import CommandConfig, OutputFormat


class BaseCommand(ABC):
    """Base class for all subcommands"""

    def __init__(self, config: CommandConfig, args: Namespace):
        """Initialize the command

        Args:
            config (CommandConfig): Settings shared by every subcommand
            args (Namespace): Parsed command line, including subcommand-specific options

        Raises:
            ValueError: If the arguments are invalid for this subcommand
        """
        self.config = config
        self.args = args
        self.validate_args()

    @abstractmethod
    def validate_args(self):
        """Validate arguments for the command"""
        pass

    @abstractmethod
    def execute(self) -> int:
        """Execute the command and return its exit code"""
        pass

    def read_lines(self) -> Iterator[str]:
        if self.config.input is None or self.config.input == "-":
            yield from sys.stdin
            return
        with open(self.config.input, "r", encoding="utf-8") as f:
            yield from f

    def read_graphs(self) -> Iterator[tuple[str, Graph]]:
        """Parse every non-empty input line

        Raises:
            Graph6Error: Naming the line number of the first malformed line
        """

        for number, line in enumerate(self.read_lines(), start=1):
            text = line.strip()
            if not text:
                continue
            try:
                g = parse_graph6(text)
            except Graph6Error as e:
                raise type(e)(f"line {number}: {e.message}", e.offset) from e
            yield text, g

    @property
    def is_json(self) -> bool:
        return self.config.output_format is OutputFormat.JSON

    @property
    def is_csv(self) -> bool:
        return self.config.output_format is OutputFormat.CSV

    def emit(self, text: str) -> None:
        print(text)

    def emit_json(self, data: Any) -> None:
        print(json.dumps(data, ensure_ascii=False, indent=2))

    def emit_csv(self, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        print(buffer.getvalue(), end="")
