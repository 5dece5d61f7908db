"""Run the one-pass evaluation harness on a generated dataset.

Synthesizes a handful of jump sequences on disk in the on-disk layout the
loader expects (img/0001.png ... plus a 1-based groundtruth_rect.txt),
then evaluates the guarded pipeline and the bare tracker over all of them
and prints the aggregate precision and success numbers. This is the same
machinery behind `aggsig bench`, minus the report files.

Run:  python demos/benchmark_synthetic.py [--seeds 5] [--dir DIR]
"""
import argparse
import os
import tempfile

from aggsig import ASTConfig, encode_image, load_sequence, ope_run, synth_jump_sequence


def synthesize(root, seeds):
    specs = []
    for seed in range(seeds):
        seq = synth_jump_sequence(seed=seed)
        seq_dir = os.path.join(root, f"jump_{seed:02d}")
        img_dir = os.path.join(seq_dir, "img")
        os.makedirs(img_dir, exist_ok=True)
        for i, frame in enumerate(seq.frames, start=1):
            encode_image(os.path.join(img_dir, f"{i:04d}.png"), frame)
        with open(os.path.join(seq_dir, "groundtruth_rect.txt"), "w", encoding="utf-8") as fh:
            for b in seq.boxes:
                fh.write(f"{b.x + 1},{b.y + 1},{b.w},{b.h}\n")
        specs.append(load_sequence(seq_dir))
    return specs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--dir", default=None, help="dataset directory (default: temp)")
    args = ap.parse_args()

    root = args.dir or tempfile.mkdtemp(prefix="aggsig_bench_")
    specs = synthesize(root, args.seeds)
    print(f"dataset: {len(specs)} sequences under {root}")

    print(f"\n{'tracker':>8s}  {'prec@20':>7s}  {'AUC':>6s}  {'FPS':>6s}")
    for label, cfg in [
        ("bare", ASTConfig(ast=False)),
        ("guarded", ASTConfig(prior_mode="similarity")),
    ]:
        report = ope_run(specs, cfg)
        print(f"{label:>8s}  {report.precision.summary:7.3f}  "
              f"{report.success.summary:6.3f}  {report.fps:6.1f}")
        for r in report.sequences:
            redetects = sum(e.kind == "redetected" for e in r.events)
            print(f"          {r.name}: AUC {r.success.summary:.3f}"
                  + (f", {redetects} re-detections" if redetects else ""))


if __name__ == "__main__":
    main()
