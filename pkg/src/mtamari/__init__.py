"""Intervals of the m-Tamari lattices: enumeration, generating series, closed forms."""

__version__ = "0.1.0"

from .errors import (BadCharacter, BelowAxis, DegenerateEvaluation, EmptyPath,  # noqa: E402
                     InvalidLeaf, NonDivisible, NonIntegral, NotALattice,
                     NotMDyck, OutOfRange, PathError, ResourceLimit,
                     SizeMismatch, TamariError, UnbalancedPath)
from .formulas import count_by_contacts, count_intervals, count_paths  # noqa: E402
from .lattice import build_hasse, covers, enumerate_intervals, leq  # noqa: E402
from .paths import StepPath, distance_vector, parse_path  # noqa: E402
from .series import solve_f, specialize  # noqa: E402
