"""Laplacian eigenmodes on S^3: toroidal and null-vector bases, rotations, quotient spaces."""

import json as _json

from ._s3modes import *  # noqa: F401,F403
from ._s3modes import multiplicity as _multiplicity
from ._s3modes import verify as _verify


def multiplicity(space, k):
    """Multiplicity report for one level as a dict."""
    return _json.loads(_multiplicity(space, k))


def verify(k, suite):
    """Result of one oracle suite as a dict."""
    return _json.loads(_verify(k, suite))
