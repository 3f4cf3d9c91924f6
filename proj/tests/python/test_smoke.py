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

import os
import pathlib

import pytest

import vtd

DATA = pathlib.Path(os.environ.get("VTD_TEST_DATA", pathlib.Path(__file__).resolve().parents[1] / "data"))


def test_perfect_detection():
    report = vtd.evaluate("det", DATA / "det_pred.json", DATA / "det_gt.json")
    assert report["scores"]["ap_d"] == 100.0
    assert report["tool"] == "vtd"
    assert report["duration_ms"] >= 0


def test_workers_do_not_change_scores():
    one = vtd.evaluate("mots", DATA / "mots_pred_split.json", DATA / "mots_gt.json", workers=1)
    four = vtd.evaluate("mots", DATA / "mots_pred_split.json", DATA / "mots_gt.json", workers=4)
    one.pop("duration_ms")
    four.pop("duration_ms")
    assert one == four
    assert one["scores"]["assa_r"] == 50.0


def test_vtda_defaults_and_partial():
    keys = ["acc_gw", "acc_gs", "iou_s", "iou_a", "iou_l", "ap_d", "ap_i", "ap_p", "ap_t", "ap_r", "iou_f",
            "assa_t", "assa_r"]
    report = vtd.vtda({k: 100.0 for k in keys})
    assert report["total"] == pytest.approx(400.0)
    assert report["warnings"] == []
    partial = vtd.vtda({"acc_gw": 50.0, "acc_gs": 50.0}, partial=True)
    assert partial["groups"]["cls"] == pytest.approx(50.0)
    assert partial["groups"]["seg"] is None


def test_errors_mirror_exit_codes():
    with pytest.raises(vtd.ValidationError) as err:
        vtd.vtda({"acc_gw": 50.0})
    assert err.value.exit_code == 1
    with pytest.raises(vtd.IoError) as err:
        vtd.evaluate("det", DATA / "det_pred.json", DATA / "missing.json")
    assert err.value.exit_code == 2
    with pytest.raises(vtd.ValidationError):
        vtd.evaluate("banana", DATA / "det_pred.json", DATA / "det_gt.json")


def test_schedule():
    plan = vtd.schedule()
    assert len(plan["batches"]) == 6720
    assert vtd.schedule(["segmentation"], "weighted", seed=4) == vtd.schedule(["segmentation"], "weighted", seed=4)
    assert "det" in vtd.task_ids()
