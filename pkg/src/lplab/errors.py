"""Shared exception types."""


class GraphInputError(ValueError):
    """Malformed graph construction or parse input."""


class NotApplicable(ValueError):
    """A quantity or classification whose preconditions the graph does not meet.

    Distinct from a ``False`` classification: super-lambda' of a graph with
    infinite lambda' is not false, it is undefined.
    """


class OverBudget(RuntimeError):
    """An exhaustive computation was requested beyond its configured budget."""
