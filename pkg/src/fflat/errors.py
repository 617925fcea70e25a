"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """A configured guard (enumeration cap, dimension cap, desk-scale bound) tripped.

    Guards fail loudly instead of truncating: a partial enumeration or a
    sampled search would silently invalidate the exactness guarantees.
    """
