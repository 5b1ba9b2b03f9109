"""
Loaders that bring problem ensembles in: JSON problem files and seeded random ensembles
"""

from .base import ProblemLoader
from .ensembles import random_ensembles
from .problem_file import ProblemFile, load_initial, load_problem

__all__ = ["ProblemFile", "ProblemLoader", "load_initial", "load_problem", "random_ensembles"]
