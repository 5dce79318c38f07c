"""Token swapping workbench: exact solvers, hardness reductions, trace analytics."""

from tokenswap._core import *  # noqa: F401,F403
from tokenswap._core import __doc__  # noqa: F401
