# Inputs module - Sources de corpus
from .base_input import BaseInput, InputError, InputRegistry
from .ideal_file import IdealFileInput
from .random_corpus import CorpusParameters, RandomCorpusInput

__all__ = [
    "BaseInput",
    "CorpusParameters",
    "IdealFileInput",
    "InputError",
    "InputRegistry",
    "RandomCorpusInput",
]
