"""
SkewStream top-level package.

Expose the internal `skew` namespace here,
so users can write:

    from SkewStream import skew
"""
from . import skew
