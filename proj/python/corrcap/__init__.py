# Copyright 2026 The corrcap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Majorization lattice and correlation capacity of composite quantum states."""

from ._core import (
    CorrcapError,
    analyze,
    build_optimal_separable,
    canonicalize,
    compare,
    correlation_information,
    entropy_sum_minus_max,
    feline_correlations,
    fig1_curve,
    infimum,
    run_suite,
    shannon_entropy,
    suite_names,
    supremum,
    two_qubit_state,
)

__all__ = [
    "CorrcapError",
    "analyze",
    "build_optimal_separable",
    "canonicalize",
    "compare",
    "correlation_information",
    "entropy_sum_minus_max",
    "feline_correlations",
    "fig1_curve",
    "infimum",
    "run_suite",
    "shannon_entropy",
    "suite_names",
    "supremum",
    "two_qubit_state",
]
