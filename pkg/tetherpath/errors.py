"""
Errors Module
Exception hierarchy for the tethered path planner.

Every error carries a stable ``code`` so the command-line front end can emit
a machine-readable error object.
"""


class PlannerError(ValueError):
    """Base class for all planner errors."""

    code = "planner_error"

    def to_dict(self) -> dict:
        """Return the JSON error object for this error."""
        return {'error': self.code, 'message': str(self)}


class InstanceError(PlannerError):
    """The drone path violates the instance invariants."""

    code = "invalid_instance"


class SpeedMismatch(InstanceError):
    code = "speed_mismatch"


class NonAlternating(InstanceError):
    code = "non_alternating"


class NonMonotoneTime(InstanceError):
    code = "non_monotone_time"


class InstanceFormatError(InstanceError):
    """An instance or solution file could not be parsed."""

    code = "format_error"


class TetherTooShort(PlannerError):
    code = "tether_too_short"


class InvalidConfig(PlannerError):
    code = "invalid_config"


class ChainMismatch(PlannerError):
    code = "chain_mismatch"


class VerticalPair(PlannerError):
    code = "vertical_pair"


class SlopeOutOfRange(PlannerError):
    code = "slope_out_of_range"


class InfeasibleSlope(PlannerError):
    code = "infeasible_slope"


class SpanMismatch(PlannerError):
    code = "span_mismatch"


class CapExceeded(PlannerError):
    """The min-link oracle exhausted its link budget (indicates a bug)."""

    code = "cap_exceeded"


class SelfCheckFailed(PlannerError):
    """A computed or supplied solution failed verification."""

    code = "verification_failed"
