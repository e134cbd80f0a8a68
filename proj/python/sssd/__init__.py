"""Split-step semi-discrete schemes for boundary-preserving SDE integration."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
