"""Python bindings for the casimir core library."""

try:
    from ._casimir import *  # noqa: F401,F403  installed wheel
    from ._casimir import __doc__  # noqa: F401
except ImportError:
    # in-tree build: the extension sits next to the build tree, not inside the package
    from _casimir import *  # noqa: F401,F403
