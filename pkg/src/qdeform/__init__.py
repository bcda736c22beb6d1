"""
qdeform - exact cocycle deformations of pointed Hopf algebras

Builds bosonizations of diagonal braided Hopf algebras by rewriting, deforms
them by linking parameters, extracts the deforming 2-cocycle and constructs
generalized quantum doubles from skew pairings, checking every identity
exactly over Q, Q(q) or a cyclotomic field.
"""

__version__ = "0.1.0"
__author__ = "qdeform"

from .main import main, run, JobRunner, RunOptions, CommandResult

__all__ = ["main", "run", "JobRunner", "RunOptions", "CommandResult"]
