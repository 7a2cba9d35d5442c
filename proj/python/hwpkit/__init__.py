"""Displacement-parity operators, their group closures, doubled coherent
frames, unified phase-space tables, and frame-noise experiments."""

try:
    from ._hwpkit import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _hwpkit import *  # noqa: F401,F403  (build-tree layout)

__version__ = "1.0.0"
