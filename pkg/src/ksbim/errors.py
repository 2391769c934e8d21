"""Exception hierarchy.

Every error carries a stable, module-qualified ``code`` which the CLI prints
verbatim, e.g. ``laurent.InexactDivision``.
"""

from __future__ import annotations


class KSBimError(Exception):
    code = "ksbim.Error"


class MalformedCartan(KSBimError, ValueError):
    code = "root_datum.MalformedCartan"


class NotFiniteType(KSBimError, ValueError):
    code = "root_datum.NotFiniteType"


class UnknownType(KSBimError, ValueError):
    code = "root_datum.UnknownType"


class IndexOutOfRange(KSBimError, IndexError):
    code = "root_datum.IndexOutOfRange"


class RankMismatch(KSBimError, ValueError):
    code = "root_datum.RankMismatch"


class DivisionByZero(KSBimError, ZeroDivisionError):
    code = "laurent.DivisionByZero"


class InexactDivision(KSBimError, ArithmeticError):
    code = "laurent.InexactDivision"


class ZeroSpecializationEntry(KSBimError, ValueError):
    code = "laurent.ZeroSpecializationEntry"


class ParseError(KSBimError, ValueError):
    code = "laurent.ParseError"


class NotDominant(KSBimError, ValueError):
    code = "demazure.NotDominant"


class CandidateBasisFailed(KSBimError, ArithmeticError):
    code = "frobenius.CandidateBasisFailed"


class ShapeMismatch(KSBimError, ValueError):
    code = "bimodule.ShapeMismatch"


class BudgetExceeded(KSBimError, RuntimeError):
    code = "homspace.BudgetExceeded"
