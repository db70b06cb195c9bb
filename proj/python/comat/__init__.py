"""Exact computations with comatrix coalgebras and Rat-splitting decisions.

All functions exchange JSON document strings; see docs/schemas.md in the
source tree for the document formats.
"""

from ._core import (
    __version__,
    artinian,
    dual,
    example,
    ext_quiver,
    instantiate,
    rat,
    serial,
    splitting,
    verify,
)

__all__ = [
    "__version__",
    "artinian",
    "dual",
    "example",
    "ext_quiver",
    "instantiate",
    "rat",
    "serial",
    "splitting",
    "verify",
]
