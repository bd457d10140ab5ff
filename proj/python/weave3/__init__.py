"""Exact Alexander/Jones invariants of 3-braid closures and weaving links."""

try:
    from ._weave3 import *  # noqa: F401,F403  (installed package layout)
    from ._weave3 import __doc__ as _core_doc
except ImportError:  # in-tree test layout: extension sits on sys.path
    from _weave3 import *  # noqa: F401,F403
    from _weave3 import __doc__ as _core_doc

__doc__ = _core_doc or __doc__
__version__ = "0.1.0"
