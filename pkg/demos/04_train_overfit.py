"""
Train the matcher on a tiny dataset
===================================

Overfits a small model to two synthetic pairs. The color loss anchors
the objective on ground-truth pixel-point pairs while the circle-style
feature loss pulls matching descriptors together at both granularities.
A minute of CPU is enough to watch the loss fall and matching improve.
"""

from pathlib import Path

import torch

from colorreg.config import loads
from colorreg.training import read_log, train

torch.set_num_threads(1)

data_dir = Path(__file__).parent / "out" / "dataset"
run_dir = Path(__file__).parent / "out" / "run"
if not data_dir.exists():
    raise SystemExit("run demos/01_generate_dataset.py first")

# A deliberately small model: half-width backbones, a 32-dim one-block
# transformer, and capped mining keep every step under 100 ms.
config = loads("""
model:
  toy: true
  d_model: 32
  n_heads: 2
  n_blocks: 1
  n_bands: 4
  knn_colors: 4
  match_dim: 32
  top_k: 16
train: {steps: 150, learning_rate: 3.0e-4, checkpoint_every: 75}
""")

result = train(config, data_dir, run_dir)

log = read_log(result.log_path)
print("\nloss trajectory (every 25 steps):")
for entry in log[::25] + [log[-1]]:
    print(f"  step {entry.step:4d}: color {entry.l_color:.4f} "
          f"feature {entry.l_feature:.4f} overall {entry.l_overall:.4f}")
print(f"\ncheckpoints under {run_dir}:")
for p in sorted(run_dir.glob("checkpoint_*.npz")):
    print(f"  {p.name}")

# Training resumes exactly: restarting from the midpoint checkpoint
# replays the same per-step randomness and optimizer state, so the
# final checkpoint matches the unbroken run bit for bit.
resumed = train(config, data_dir, run_dir / "resumed",
                resume=run_dir / "checkpoint_000075.npz")
tail = read_log(resumed.log_path)[-1]
print(f"\nresumed run reaches step {tail.step} with overall {tail.l_overall:.6f} "
      f"(same as above: {log[-1].l_overall:.6f})")
