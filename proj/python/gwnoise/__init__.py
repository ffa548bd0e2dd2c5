from ._gwnoise import *  # noqa: F401,F403
from ._gwnoise import __doc__  # noqa: F401
