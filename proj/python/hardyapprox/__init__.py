"""Best analytic approximation on the unit circle.

L^p distances to the analytic functions, residual factorizations with dual
certificates, and minimal-norm interpolation (Taylor data and node data).
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
