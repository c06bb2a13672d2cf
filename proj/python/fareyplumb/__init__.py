from ._fareyplumb import *  # noqa: F401,F403
from ._fareyplumb import __doc__  # noqa: F401
