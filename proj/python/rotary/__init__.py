"""Exact elliptic-plane geometry and finite rotary actions."""

from ._rotary import *  # noqa: F401,F403
from ._rotary import RotaryError, __doc__  # noqa: F401
