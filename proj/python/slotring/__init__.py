# Copyright (c) the slotring developers.
# SPDX-License-Identifier: Apache-2.0
"""Emitter / slot-waveguide-ring coupling toolkit (C++ core bindings)."""

from slotring._core import *  # noqa: F401,F403
from slotring._core import __doc__  # noqa: F401

__version__ = "0.1.0"
