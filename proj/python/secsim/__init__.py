# Copyright (c) secsim contributors
# SPDX-License-Identifier: Apache-2.0
"""Secrecy outage simulation for correlated MISO wiretap channels.

Thin python surface over the C++ core: special functions, channel sampling,
expected wiretap-capacity curves, power allocation and the Monte Carlo
outage estimators, plus the sweep runner behind the `secsim` CLI.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
