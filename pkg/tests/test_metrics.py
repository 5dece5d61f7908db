"""Tests for the saliency and tracking evaluation metrics."""
import numpy as np
import pytest

from aggsig import (
    Box,
    CurveReport,
    iou,
    mae,
    mean_curve,
    nss,
    precision_curve,
    sim,
    success_curve,
)


class TestMAE:
    def test_identity_is_zero(self):
        rng = np.random.default_rng(211)
        s = rng.uniform(size=(16, 16))
        assert mae(s, s) == 0.0

    def test_complement_is_one(self):
        mask = np.zeros((8, 8))
        mask[:4] = 1.0
        assert abs(mae(1.0 - mask, mask) - 1.0) < 1e-15

    def test_matches_manual_mean(self):
        rng = np.random.default_rng(212)
        s = rng.uniform(size=(10, 10))
        gt = (rng.uniform(size=(10, 10)) > 0.5).astype(np.float64)
        assert abs(mae(s, gt) - np.abs(s - gt).mean()) < 1e-15

    def test_rejects_shape_mismatch(self):
        with pytest.raises(ValueError):
            mae(np.zeros((4, 4)), np.zeros((4, 5)))


class TestNSS:
    def test_constant_map_scores_zero(self):
        mask = np.zeros((8, 8), dtype=bool)
        mask[2, 2] = True
        assert nss(np.full((8, 8), 0.7), mask) == 0.0

    def test_standardization(self):
        # saliency 1 on the single positive pixel, 0 elsewhere, 8x8 map:
        # mean 1/64, population std sqrt(p(1-p)) with p = 1/64
        s = np.zeros((8, 8))
        s[3, 5] = 1.0
        mask = np.zeros((8, 8), dtype=bool)
        mask[3, 5] = True
        p = 1.0 / 64.0
        expected = (1.0 - p) / np.sqrt(p * (1.0 - p))
        assert abs(nss(s, mask) - expected) < 1e-12

    def test_invariant_to_affine_rescale(self):
        rng = np.random.default_rng(221)
        s = rng.uniform(size=(12, 12))
        mask = rng.uniform(size=(12, 12)) > 0.8
        assert abs(nss(s, mask) - nss(3.0 * s + 0.2, mask)) < 1e-10

    def test_rejects_empty_positives(self):
        with pytest.raises(ValueError):
            nss(np.ones((4, 4)), np.zeros((4, 4), dtype=bool))


class TestSIM:
    def test_identity_is_one(self):
        rng = np.random.default_rng(231)
        s = rng.uniform(size=(9, 9))
        assert abs(sim(s, s) - 1.0) < 1e-12

    def test_scale_invariant(self):
        rng = np.random.default_rng(232)
        s = rng.uniform(size=(9, 9))
        assert abs(sim(s, 7.5 * s) - 1.0) < 1e-12

    def test_disjoint_supports_score_zero(self):
        a = np.zeros((4, 4))
        b = np.zeros((4, 4))
        a[0, 0] = 1.0
        b[3, 3] = 1.0
        assert sim(a, b) == 0.0

    def test_zero_map_scores_zero(self):
        assert sim(np.zeros((4, 4)), np.ones((4, 4))) == 0.0

    def test_range(self):
        rng = np.random.default_rng(233)
        for _ in range(20):
            a = rng.uniform(size=(6, 6))
            b = rng.uniform(size=(6, 6))
            v = sim(a, b)
            assert 0.0 <= v <= 1.0 + 1e-12

    def test_rejects_negative_values(self):
        with pytest.raises(ValueError):
            sim(np.full((3, 3), -0.1), np.ones((3, 3)))


class TestIoU:
    def test_identical_boxes(self):
        assert iou(Box(3, 4, 10, 12), Box(3, 4, 10, 12)) == 1.0

    def test_half_overlap_is_one_third(self):
        # boxes of equal area sharing half of each: inter = A/2,
        # union = 3A/2, ratio 1/3
        assert abs(iou(Box(0, 0, 4, 4), Box(2, 0, 4, 4)) - 1.0 / 3.0) < 1e-15

    def test_disjoint_boxes(self):
        assert iou(Box(0, 0, 4, 4), Box(10, 10, 4, 4)) == 0.0

    def test_containment(self):
        # 2x2 inside 4x4: 4/16
        assert abs(iou(Box(0, 0, 4, 4), Box(1, 1, 2, 2)) - 0.25) < 1e-15

    def test_symmetry(self):
        a, b = Box(0, 0, 5, 3), Box(2, 1, 6, 4)
        assert iou(a, b) == iou(b, a)


class TestPrecisionCurve:
    def test_perfect_tracking(self):
        boxes = [Box(i, i, 8, 8) for i in range(10)]
        rep = precision_curve(boxes, boxes)
        assert len(rep.thresholds) == 51
        assert rep.thresholds[0] == 0.0 and rep.thresholds[50] == 50.0
        assert all(v == 1.0 for v in rep.values)
        assert rep.summary == 1.0

    def test_summary_reads_twenty_pixels(self):
        pred = [Box(0, 0, 4, 4), Box(30, 0, 4, 4)]
        gt = [Box(0, 0, 4, 4), Box(0, 0, 4, 4)]
        rep = precision_curve(pred, gt)
        # one frame exact, one off by 30 px: summary at 20 px sees only the first
        assert rep.summary == 0.5
        assert rep.values[0] == 0.5
        assert rep.values[30] == 1.0

    def test_monotone_nondecreasing(self):
        rng = np.random.default_rng(241)
        pred = [Box(int(rng.integers(0, 40)), int(rng.integers(0, 40)), 6, 6) for _ in range(30)]
        gt = [Box(20, 20, 6, 6)] * 30
        rep = precision_curve(pred, gt)
        for lo, hi in zip(rep.values, rep.values[1:]):
            assert hi >= lo

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            precision_curve([Box(0, 0, 2, 2)], [])


class TestSuccessCurve:
    def test_perfect_tracking(self):
        boxes = [Box(i, 2 * i, 8, 8) for i in range(10)]
        rep = success_curve(boxes, boxes)
        assert len(rep.thresholds) == 21
        assert rep.thresholds[1] == 0.05
        assert all(v == 1.0 for v in rep.values)
        assert abs(rep.summary - 1.0) < 1e-12

    def test_total_miss(self):
        pred = [Box(0, 0, 4, 4)] * 5
        gt = [Box(40, 40, 4, 4)] * 5
        rep = success_curve(pred, gt)
        # IoU 0 still counts at threshold 0, nowhere else
        assert rep.values[0] == 1.0
        assert all(v == 0.0 for v in rep.values[1:])
        assert abs(rep.summary - 0.025) < 1e-12

    def test_monotone_nonincreasing(self):
        rng = np.random.default_rng(242)
        pred = [Box(int(rng.integers(16, 25)), int(rng.integers(16, 25)), 8, 8) for _ in range(30)]
        gt = [Box(20, 20, 8, 8)] * 30
        rep = success_curve(pred, gt)
        for lo, hi in zip(rep.values, rep.values[1:]):
            assert hi <= lo

    def test_auc_matches_manual_trapezoid(self):
        pred = [Box(0, 0, 4, 4), Box(1, 0, 4, 4), Box(3, 0, 4, 4)]
        gt = [Box(0, 0, 4, 4)] * 3
        rep = success_curve(pred, gt)
        vals = np.array(rep.values)
        ths = np.array(rep.thresholds)
        manual = float(np.sum((vals[1:] + vals[:-1]) / 2.0 * np.diff(ths)))
        assert abs(rep.summary - manual) < 1e-12


class TestMeanCurve:
    def test_average_of_two(self):
        a = precision_curve([Box(0, 0, 4, 4)], [Box(0, 0, 4, 4)])
        b = precision_curve([Box(30, 0, 4, 4)], [Box(0, 0, 4, 4)])
        merged = mean_curve([a, b])
        assert merged.thresholds == a.thresholds
        assert merged.values[0] == 0.5
        assert merged.summary == 0.5

    def test_summary_is_mean_of_summaries(self):
        rng = np.random.default_rng(251)
        reports = []
        gt = [Box(20, 20, 8, 8)] * 10
        for _ in range(4):
            pred = [Box(int(rng.integers(12, 29)), 20, 8, 8) for _ in range(10)]
            reports.append(success_curve(pred, gt))
        merged = mean_curve(reports)
        assert abs(merged.summary - np.mean([r.summary for r in reports])) < 1e-12

    def test_rejects_mismatched_thresholds(self):
        a = precision_curve([Box(0, 0, 4, 4)], [Box(0, 0, 4, 4)])
        b = success_curve([Box(0, 0, 4, 4)], [Box(0, 0, 4, 4)])
        with pytest.raises(ValueError):
            mean_curve([a, b])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            mean_curve([])


class TestCurveReport:
    def test_validation(self):
        with pytest.raises(ValueError):
            CurveReport(thresholds=(0.0, 1.0), values=(0.5,), summary=0.5)
        with pytest.raises(ValueError):
            CurveReport(thresholds=(0.0,), values=(1.5,), summary=1.5)
