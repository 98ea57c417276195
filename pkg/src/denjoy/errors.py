"""Exception types shared across the package.

Every error carries a stable module-qualified ``code`` so the CLI can report
failures uniformly and scripts can match on them.
"""

from __future__ import annotations


class DenjoyError(Exception):
    code = "denjoy.error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


class ConfigError(DenjoyError):
    code = "cli.config"


class UnknownFamilyError(DenjoyError):
    code = "orbits.unknown-action"


class StateSpaceError(DenjoyError):
    code = "orbits.bad-seed"


class TruncationExceeded(DenjoyError):
    """A query would need states or edges beyond the truncation radius."""

    code = "orbits.truncation-exceeded"


class EnumerationTooShort(DenjoyError):
    code = "metric.enumeration-too-short"


class HorizonInsufficient(DenjoyError):
    """A length schedule threshold was never met within the measured horizon."""

    code = "metric.horizon-insufficient"


class DominationViolated(DenjoyError):
    code = "moderate.domination-violated"


class FlattenFailed(DenjoyError):
    code = "moderate.no-such-flatten-radius"


class RatiosNeverSettle(DenjoyError):
    code = "moderate.ratios-never-settle"


class GrowthGateRefused(DenjoyError):
    """The pipeline refuses to certify weights over an exponential-looking orbit."""

    code = "moderate.growth-gate"


class EvaluableDomainMiss(DenjoyError):
    code = "realize.evaluable-domain-miss"


class FlatteningContractMissing(DenjoyError):
    code = "realize.flattening-contract-missing"


class BudgetExceedsTruncation(DenjoyError):
    code = "blowup.budget-exceeds-truncation"


class ParameterError(DenjoyError):
    code = "regularity.parameter-out-of-range"
