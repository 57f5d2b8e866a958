# Copyright 2026 The isingbench Authors
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
"""Hardware-native Ising benchmarks, hardness ratios and order statistics."""

from ._isingbench import (
    ConvergenceError,
    Error,
    Graph,
    IsingModel,
    ParameterError,
    ParseError,
    RangeError,
    UndefinedMetricError,
    __version__,
    generate,
    instance_from_json,
    kp_hardness,
    kp_ranges,
    kp_solve,
    range_cdf,
    range_monte_carlo,
    relative_difference,
    solve,
    topology,
)

__all__ = [
    "ConvergenceError",
    "Error",
    "Graph",
    "IsingModel",
    "ParameterError",
    "ParseError",
    "RangeError",
    "UndefinedMetricError",
    "__version__",
    "generate",
    "instance_from_json",
    "kp_hardness",
    "kp_ranges",
    "kp_solve",
    "range_cdf",
    "range_monte_carlo",
    "relative_difference",
    "solve",
    "topology",
]
