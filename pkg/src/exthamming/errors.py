"""Exception types shared across the package."""


class GuardrailError(ValueError):
    """Requested explicit construction exceeds the size guardrail."""


class BudgetError(ValueError):
    """A verification engine would exceed its work budget."""
