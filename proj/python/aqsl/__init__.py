"""Geometric and action quantum speed limits for a thermalizing qubit.

Matrices are passed as square complex NumPy arrays. Metric names are
"qfi", "wy" and "td". Library errors raise ``AqslError`` with
``args == (code_name, message)``.
"""

from ._core import *  # noqa: F401,F403
from ._core import AqslError  # noqa: F401

__version__ = "0.1.0"
