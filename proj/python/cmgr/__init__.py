from ._cmgr import *  # noqa: F401,F403
from ._cmgr import __version__  # noqa: F401
