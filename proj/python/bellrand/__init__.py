"""Bell-functional randomness certification toolkit.

Thin package wrapper around the compiled extension; every public operation
lives in bellrand._core and is re-exported here.
"""

from ._core import *  # noqa: F401,F403
