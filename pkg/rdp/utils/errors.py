"""
    Exceptions shared between the subpackages
"""


class ResourceLimitError(RuntimeError):
    """Raised if an exhaustive computation would exceed its documented size limits"""
    pass
