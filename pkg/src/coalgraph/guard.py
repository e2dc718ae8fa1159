"""Enumeration budget shared by every brute-force routine."""

import os

from .errors import SizeGuardExceeded

DEFAULT_MAX_ENUM = 4096


def default_limit():
    raw = os.environ.get("COALGRAPH_MAX_ENUM")
    if raw:
        return int(raw)
    return DEFAULT_MAX_ENUM


def check(what, size, limit=None):
    """Raise :class:`SizeGuardExceeded` if ``size`` is over ``limit``.

    ``limit=None`` means the process default (``COALGRAPH_MAX_ENUM`` or 4096).
    """
    if limit is None:
        limit = default_limit()
    if size > limit:
        raise SizeGuardExceeded(what, size, limit)
    return size
