from .base_command import BaseCommand
from .charpoly_command import CharpolyCommand
from .classify_command import ClassifyCommand
from .dehair_command import DehairCommand
from .enumerate_command import EnumerateCommand
from .family_command import FamilyCommand
from .hair_command import HairCommand
from .reconcile_command import ReconcileCommand
from .survey_command import SurveyCommand
from .tensor_command import TensorCommand
from .verify_command import VerifyCommand

__all__ = [
    "BaseCommand",
    "CharpolyCommand",
    "ClassifyCommand",
    "DehairCommand",
    "EnumerateCommand",
    "FamilyCommand",
    "HairCommand",
    "ReconcileCommand",
    "SurveyCommand",
    "TensorCommand",
    "VerifyCommand",
]
