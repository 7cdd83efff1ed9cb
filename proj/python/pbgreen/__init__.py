from ._pbgreen import *  # noqa: F401,F403
from ._pbgreen import __doc__  # noqa: F401
