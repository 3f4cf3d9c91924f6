# Copyright 2026 The VTD Toolkit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Video Task Decathlon evaluation toolkit."""

import json
import os

from ._vtd import FormatError, IoError, ValidationError, __version__, task_ids
from . import _vtd

__all__ = ["evaluate", "vtda", "schedule", "task_ids", "ValidationError", "IoError", "FormatError", "__version__"]


def evaluate(task, pred, gt, workers=1, threshold=None, subsample=None, sigmas=None, bezier=False):
    """Score one task; returns the report as a dict (same layout as the CLI)."""
    if sigmas is not None and not isinstance(sigmas, (list, tuple)):
        sigmas = [float(sigmas)]
    return json.loads(_vtd._evaluate(task, os.fspath(pred), os.fspath(gt), workers, threshold, subsample,
                                     sigmas, bezier))


def vtda(scores, scales=None, partial=False):
    """Aggregate a {slot: score} mapping; `scales` defaults to the published table."""
    scales_json = None if scales is None else json.dumps(scales)
    return json.loads(_vtd._vtda(json.dumps(scores), scales_json, partial))


def schedule(sets=(), strategy="round_robin", seed=0, batch_size=16, epochs=1):
    """Batch schedule over preset image sets (joint-training sets when empty)."""
    return json.loads(_vtd._schedule(list(sets), strategy, seed, batch_size, epochs))
