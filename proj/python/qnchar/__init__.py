from ._qnchar import *  # noqa: F401,F403
