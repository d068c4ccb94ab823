"""
Error Types
Exceptions shared by every package of the 6-j toolkit
"""


class DomainError(ValueError):
    """Invalid input: negative spin, violated triangle, bad index or malformed line"""


class ConsistencyError(AssertionError):
    """An internal mathematical claim did not hold (must never fire)"""


class ConfigurationError(ValueError):
    """Unreadable or ill-typed configuration value"""
