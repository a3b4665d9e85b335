# Copyright 2026 The mcnli Authors.
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

"""Multiple-choice reading comprehension to NLI conversion and evaluation."""

from mcnli._mcnli import (
    BackendError,
    DataError,
    __version__,
    balanced_accuracy,
    categorize_multirc,
    categorize_race,
    convert_rule,
    rank_pairs,
    run_cli,
    tune_threshold,
)

__all__ = [
    "BackendError",
    "DataError",
    "__version__",
    "balanced_accuracy",
    "categorize_multirc",
    "categorize_race",
    "convert_rule",
    "rank_pairs",
    "run_cli",
    "tune_threshold",
]
