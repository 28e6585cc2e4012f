"""Exception types shared across the package."""


class LegcalcError(Exception):
    """Base class for all errors raised by legcalc."""


class InvalidFront(LegcalcError):
    """A Morse event word does not describe a valid closed front.

    Carries the list of violations found, in the order they were detected.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class HeightOutOfRange(LegcalcError):
    def __init__(self, index, event, strands):
        self.index = index
        self.event = event
        self.strands = strands
        super().__init__(
            f"event #{index} {event.kind}{event.height} invalid at strand count {strands}"
        )


class OpenFront(LegcalcError):
    def __init__(self, final_count):
        self.final_count = final_count
        super().__init__(f"front does not close: final strand count {final_count}")


class MultiComponent(LegcalcError):
    def __init__(self, count):
        self.count = count
        super().__init__(f"diagram has {count} components, expected 1")


class InconsistentOrientation(LegcalcError):
    """Declared seam orientations disagree with the traversal."""


class BadLocation(LegcalcError):
    """Stabilization location does not name an existing edge."""


class BadParameter(LegcalcError):
    """Generator parameter out of range."""


class NoTaggedClasp(LegcalcError):
    """Pattern carries no designated clasp crossing."""


class TwistedInputRejected(LegcalcError):
    """Companion has nonzero Thurston-Bennequin number in untwisted mode."""

    def __init__(self, tb):
        self.tb = tb
        super().__init__(
            f"companion has tb={tb}; pass allow_twist=True to build the twisted satellite"
        )


class UnknownLabel(LegcalcError):
    """No crossing with the requested provenance label."""


class AlreadyNegative(UserWarning):
    """Requested a positive-to-negative switch on a crossing that is already negative."""


class BadWinding(LegcalcError):
    """Winding number zero is outside the supported satellite formula."""


class HypothesisFailed(LegcalcError):
    def __init__(self, clause):
        self.clause = clause
        super().__init__(f"hypothesis failed: {clause}")


class DslSyntaxError(LegcalcError):
    def __init__(self, line, col, expected):
        self.line = line
        self.col = col
        self.expected = expected
        super().__init__(f"line {line}, column {col}: expected {expected}")
