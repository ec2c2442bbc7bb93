try:
    from genfam._genfam import *  # noqa: F401,F403
except ImportError:  # in-tree builds put the extension on PYTHONPATH directly
    from _genfam import *  # noqa: F401,F403
