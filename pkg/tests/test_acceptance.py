"""Acceptance gate for the aggsig toolkit.

Nine numbered criteria cover the package's core behavioral claims: exact
spectral transforms, the quaternion DCT factorization, prior-guided saliency
refinement on a synthetic corpus, drift recovery of the full tracking
pipeline, pipeline transparency when re-detection is disabled, metric
identities, throughput, and on-disk format contracts. Each test prints one
[PASS]/[FAIL] line (run pytest with -s to see them alongside the dots).

The saliency corpus is 100 seeded 128x128 scenes with a flat foreground
rectangle covering at most 1% of the frame. The prior used for refinement is
the assembled map with weight 1.3 on the true foreground box, refinement runs
4 passes, and every method blurs with sigma 2.5 so the comparison isolates
the spectral step. The tracking fixtures are the 40-frame jump sequences:
a smooth integer walk with one teleport longer than twice the target size.
"""
import time

import numpy as np
import pytest

from oracles import naive_dct2, naive_dft2, naive_idct2, oracle_qdct

from aggsig import (
    ASTConfig,
    Box,
    CurveReport,
    TrackEvent,
    aggregation_signature_saliency,
    assemble_prior_map,
    build_channels,
    dct2,
    export_saliency,
    fft2,
    idct2,
    ifft2,
    image_signature_saliency,
    iou,
    iqdct,
    mae,
    nss,
    parse_gt_line,
    precision_curve,
    qdct,
    qdct_signature_saliency,
    sim,
    success_curve,
    synth_jump_sequence,
    synth_sparse_scene,
    track_sequence,
    write_curves,
    write_results,
)
from aggsig.quaternion import QuaternionImage


def report(num, label, ok):
    print(f"\n[{'PASS' if ok else 'FAIL'}] {num}. {label}")
    return ok


@pytest.fixture(scope="module")
def corpus():
    """Saliency maps for 100 seeded sparse scenes, shared by criteria 3 and 4."""
    t0 = time.perf_counter()
    records = []
    for seed in range(100):
        scene = synth_sparse_scene(seed=seed, noise_level=0.2, contrast=0.4)
        ch = build_channels(scene.frame, scene.prev_frame)
        prior = assemble_prior_map(scene.mask.shape, [scene.box], [1.3])
        _, traj = aggregation_signature_saliency(ch, prior, iters=4, blur_sigma=2.5)
        is_map = image_signature_saliency(ch.i1, blur_sigma=2.5)
        qis_map = qdct_signature_saliency(ch, blur_sigma=2.5)
        records.append((scene.mask.astype(float), traj, is_map, qis_map))
    return records, time.perf_counter() - t0


@pytest.fixture(scope="module")
def jump_runs():
    """AST and bare-tracker runs on 20 seeded jump sequences, shared by 5."""
    t0 = time.perf_counter()
    runs = []
    for seed in range(20):
        seq = synth_jump_sequence(seed=seed)
        ast = track_sequence(seq.frames, seq.boxes[0], ASTConfig(prior_mode="similarity"))
        bare = track_sequence(seq.frames, seq.boxes[0], ASTConfig(ast=False))
        runs.append((seq, ast, bare))
    return runs, time.perf_counter() - t0


class TestAcceptance:
    def test_1_spectral_oracles(self):
        t0 = time.perf_counter()
        rng = np.random.default_rng(7)
        ok = True
        for _ in range(20):
            x = rng.normal(size=(8, 8))
            ok &= np.max(np.abs(dct2(x) - naive_dct2(x))) < 1e-8
            ok &= np.max(np.abs(idct2(x) - naive_idct2(x))) < 1e-8
            ok &= np.max(np.abs(fft2(x) - naive_dft2(x))) < 1e-10
            ok &= np.max(np.abs(idct2(dct2(x)) - x)) < 1e-10
            ok &= np.max(np.abs(ifft2(fft2(x)) - x)) < 1e-10
        elapsed = time.perf_counter() - t0
        ok &= elapsed < 5.0
        assert report(1, f"spectral transforms match double-summation oracles ({elapsed:.2f}s)", ok)

    def test_2_qdct_factorization(self):
        t0 = time.perf_counter()
        rng = np.random.default_rng(11)
        ok = True
        for _ in range(100):
            planes = rng.normal(size=(4, 8, 8))
            q = QuaternionImage(*planes)
            got = qdct(q)
            want = oracle_qdct(*planes)
            for g, w in zip((got.re, got.pj, got.pk, got.ph), want):
                ok &= np.max(np.abs(g - w)) < 1e-10
            back = iqdct(got)
            for g, w in zip((back.re, back.pj, back.pk, back.ph), planes):
                ok &= np.max(np.abs(g - w)) < 1e-10
        elapsed = time.perf_counter() - t0
        ok &= elapsed < 10.0
        assert report(2, f"quaternion DCT matches axis-multiplication oracle ({elapsed:.2f}s)", ok)

    def test_3_refinement_improves_foreground_match(self, corpus):
        records, elapsed = corpus
        cos = np.zeros(5)
        for mask, traj, _, _ in records:
            fnorm = np.linalg.norm(mask)
            for i, s in enumerate(traj):
                cos[i] += float((mask * s).sum()) / (fnorm * np.linalg.norm(s))
        cos /= len(records)
        monotone = all(cos[i + 1] >= cos[i] - 1e-12 for i in range(1, 4))
        strict = cos[2] - cos[1] > 0.0
        ok = monotone and strict and elapsed < 120.0
        assert report(
            3,
            "prior-weighted refinement tracks the foreground "
            f"(cos by pass: {np.array2string(cos, precision=4)}, {elapsed:.1f}s)",
            ok,
        )

    def test_4_saliency_method_ordering(self, corpus):
        records, elapsed = corpus
        nss_as = nss_is = nss_qis = mae_as = mae_is = 0.0
        for mask, traj, is_map, qis_map in records:
            pos = mask > 0
            nss_as += nss(traj[-1], pos)
            nss_is += nss(is_map, pos)
            nss_qis += nss(qis_map, pos)
            mae_as += mae(traj[-1], mask)
            mae_is += mae(is_map, mask)
        n = len(records)
        nss_as, nss_is, nss_qis = nss_as / n, nss_is / n, nss_qis / n
        mae_as, mae_is = mae_as / n, mae_is / n
        ok = nss_as > nss_is and mae_as < mae_is and nss_as >= nss_qis and elapsed < 120.0
        assert report(
            4,
            "aggregation signature leads on NSS and MAE "
            f"(NSS {nss_as:.2f} vs IS {nss_is:.2f} / QIS {nss_qis:.2f}, "
            f"MAE {mae_as:.3f} vs IS {mae_is:.3f})",
            ok,
        )

    def test_5_drift_recovery(self, jump_runs):
        runs, elapsed = jump_runs
        recovered = lost = 0
        auc_ast = auc_bare = 0.0
        for seq, ast, bare in runs:
            recovered += iou(ast[-1].box, seq.boxes[-1]) > 0.3
            lost += iou(bare[-1].box, seq.boxes[-1]) < 0.1
            auc_ast += success_curve([e.box for e in ast], seq.boxes).summary
            auc_bare += success_curve([e.box for e in bare], seq.boxes).summary
        auc_ast /= len(runs)
        auc_bare /= len(runs)
        ok = recovered >= 16 and lost >= 16 and auc_ast > auc_bare and elapsed < 180.0
        assert report(
            5,
            f"re-detection recovers the jump ({recovered}/20 recovered, "
            f"bare tracker lost {lost}/20, AUC {auc_ast:.3f} vs {auc_bare:.3f}, "
            f"{elapsed:.1f}s)",
            ok,
        )

    def test_6_transparency_without_drift_trigger(self):
        ok = True
        for seed in range(5):
            seq = synth_jump_sequence(seed=seed)
            off = track_sequence(seq.frames, seq.boxes[0], ASTConfig(t_g=np.inf))
            bare = track_sequence(seq.frames, seq.boxes[0], ASTConfig(ast=False))
            for a, b in zip(off, bare):
                ok &= a.box == b.box and a.kind == b.kind and a.response == b.response
        assert report(6, "infinite drift threshold reproduces the bare tracker exactly", ok)

    def test_7_metric_identities(self):
        rng = np.random.default_rng(23)
        x = rng.uniform(size=(16, 16))
        ok = mae(x, x) == 0.0
        ok &= sim(x, x) == 1.0
        ok &= nss(np.full((8, 8), 0.7), np.eye(8, dtype=bool)) == 0.0
        ok &= iou(Box(0, 0, 4, 4), Box(2, 0, 4, 4)) == 1.0 / 3.0
        for seed in range(10):
            r = np.random.default_rng(seed)
            pred = [Box(int(r.integers(0, 40)), int(r.integers(0, 40)), 8, 8) for _ in range(12)]
            gt = [Box(int(r.integers(0, 40)), int(r.integers(0, 40)), 8, 8) for _ in range(12)]
            p = precision_curve(pred, gt).values
            s = success_curve(pred, gt).values
            ok &= all(p[i + 1] >= p[i] for i in range(len(p) - 1))
            ok &= all(s[i + 1] <= s[i] for i in range(len(s) - 1))
        assert report(7, "metric identities and curve monotonicity hold", ok)

    def test_8_throughput(self):
        scene = synth_sparse_scene(seed=0, noise_level=0.2, contrast=0.4)
        ch = build_channels(scene.frame, scene.prev_frame)
        prior = assemble_prior_map(scene.mask.shape, [scene.box], [1.3])
        aggregation_signature_saliency(ch, prior, iters=4, blur_sigma=2.5)
        best = np.inf
        for _ in range(3):
            t0 = time.perf_counter()
            aggregation_signature_saliency(ch, prior, iters=4, blur_sigma=2.5)
            best = min(best, time.perf_counter() - t0)

        seq = synth_jump_sequence(seed=0, num_frames=25, jump_index=12, rows=256, cols=256, target=64)
        track_sequence(seq.frames, seq.boxes[0], ASTConfig(prior_mode="similarity"))
        t0 = time.perf_counter()
        track_sequence(seq.frames, seq.boxes[0], ASTConfig(prior_mode="similarity"))
        fps = len(seq.frames) / (time.perf_counter() - t0)

        notes = []
        if best >= 0.1:
            notes.append(f"saliency pass {best * 1e3:.0f} ms missed the 100 ms target")
        if fps <= 30.0:
            notes.append(f"tracker {fps:.0f} FPS missed the 30 FPS target")
        advisory = f" (advisory: {'; '.join(notes)})" if notes else ""
        ok = best < 0.2 and fps > 15.0
        assert report(
            8,
            f"throughput: saliency {best * 1e3:.1f} ms, tracking {fps:.0f} FPS{advisory}",
            ok,
        )

    def test_9_format_contracts(self, tmp_path):
        ok = parse_gt_line("5,6,8,7", "gt.txt", 1) == Box(4, 5, 8, 7)

        res = tmp_path / "events.jsonl"
        write_results(str(res), [TrackEvent(frame_index=1, kind="normal", box=Box(0, 1, 2, 3), response=0.5)])
        ok &= res.read_bytes() == b'{"frame": 1, "h": 3, "kind": "normal", "response": 0.5, "w": 2, "x": 0, "y": 1}\n'

        curves = tmp_path / "curve.csv"
        write_curves(str(curves), CurveReport(thresholds=(0.0, 0.5), values=(1.0, 0.25), summary=0.625))
        ok &= curves.read_bytes() == b"threshold,value\n0.0,1.0\n0.5,0.25\n"

        pgm = tmp_path / "map.pgm"
        export_saliency(str(pgm), np.array([[0.0, 0.5], [1.0, 0.25]]))
        ok &= pgm.read_bytes() == b"P5\n2 2\n65535\n\x00\x00\x80\x00\xff\xff\x40\x00"
        assert report(9, "ground-truth, result, saliency, and curve formats are byte-exact", ok)
