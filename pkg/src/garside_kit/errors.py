"""Exception hierarchy shared by every module.

All domain errors derive from :class:`GarsideKitError` so the CLI can map them
to exit code 1 and a machine-readable payload.
"""

from __future__ import annotations


class GarsideKitError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class UnknownBuiltin(GarsideKitError):
    code = "unknown_builtin"


class MalformedSpec(GarsideKitError):
    code = "malformed_spec"


class BadParameter(GarsideKitError):
    code = "bad_parameter"


class LetterNotInGraph(GarsideKitError):
    code = "letter_not_in_graph"


class GraphMismatch(GarsideKitError):
    code = "graph_mismatch"


class NotSpherical(GarsideKitError):
    code = "not_spherical"


class EnumerationBudgetExceeded(GarsideKitError):
    code = "enumeration_budget_exceeded"


class MixedSignRoot(GarsideKitError):
    code = "mixed_sign_root"


class ReversingDiverged(GarsideKitError):
    code = "reversing_diverged"


class UndecidableWithinBudget(GarsideKitError):
    code = "undecidable_within_budget"


class BudgetExceeded(GarsideKitError):
    code = "budget_exceeded"


class OutOfRange(GarsideKitError):
    code = "out_of_range"


class BadParameters(GarsideKitError):
    code = "bad_parameters"


class MissingGraphAsset(GarsideKitError):
    code = "missing_graph_asset"


class RankMismatch(GarsideKitError):
    code = "rank_mismatch"


class NotAHomomorphism(GarsideKitError):
    code = "not_a_homomorphism"


class NotSmallType(GarsideKitError):
    code = "not_small_type"


class HasTriangle(GarsideKitError):
    code = "has_triangle"


class RelationViolated(GarsideKitError):
    code = "relation_violated"


class NoSolutionFound(GarsideKitError):
    code = "no_solution_found"


class ConstantPolynomial(GarsideKitError):
    code = "constant_polynomial"


class DegreeTooLow(GarsideKitError):
    code = "degree_too_low"


class UsageError(GarsideKitError):
    code = "usage_error"
