"""Exception types shared across the package."""


class TaskDagError(ValueError):
    """Base class for all domain errors raised by this package."""


class GraphError(TaskDagError):
    """Structural violation on a graph operation (range, order, duplicate, absent edge, bad payload)."""


class CapacityError(TaskDagError):
    """Input exceeds a hard size cap of an exhaustive or exponential routine."""


class DomainError(TaskDagError):
    """Parameters fall outside the stated domain of a closed form or family constructor."""


class ConfigError(TaskDagError):
    """Invalid process configuration."""
