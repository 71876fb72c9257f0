# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""nc-oscillator: charged oscillator on the noncommutative plane.

Spectra, exact degeneracies, wavefunctions and the oracles that check them.
"""

from .oscillator_base import OscillatorBase, OscillatorConfig, config_from_env

__version__ = "0.1.0"

__all__ = ["OscillatorBase", "OscillatorConfig", "config_from_env"]
