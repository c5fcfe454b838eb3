"""
Three-stream features and coarse-to-fine matching
=================================================

Runs one image/cloud pair through the untrained network: image and point
backbones, color-aware transformer conditioning, then coarse patch-to-
superpoint matching refined to pixel-point matches. Untrained features
match poorly; demo 04 trains them.
"""

from pathlib import Path

import numpy as np
import torch

from colorreg.config import ModelSettings
from colorreg.data.io import load_dataset
from colorreg.matching import patch_inlier_ratio
from colorreg.metrics import inlier_ratio
from colorreg.model import RegistrationModel, match_pair, prepare_pair

torch.set_num_threads(1)

data_dir = Path(__file__).parent / "out" / "dataset"
if not data_dir.exists():
    raise SystemExit("run demos/01_generate_dataset.py first")

settings = ModelSettings(toy=True, seed=0)
network = settings.network()
transformer = settings.transformer()
pipeline = settings.pipeline()

# prepare_pair voxel-subsamples the cloud, builds the point pyramid and
# image patch grids, and precomputes the ground-truth correspondences.
pair = load_dataset(data_dir)[0]
prepared = prepare_pair(pair, network, transformer, pipeline)
print(f"image {pair.image.pixels.shape[:2]}, cloud {len(prepared.cloud)} pts "
      f"after pre-voxelization")
print(f"{prepared.n_patches} coarse patches x {prepared.n_superpoints} "
      f"superpoints; {len(prepared.gt_fine_pairs)} gt pixel-point pairs")

model = RegistrationModel(network, transformer, pipeline)
with torch.no_grad():
    output = model(prepared)
print(f"coarse features: image {tuple(output.coarse_image.shape)}, "
      f"points {tuple(output.coarse_points.shape)}")
print(f"fine features:   image {tuple(output.fine_image.shape)}, "
      f"points {tuple(output.fine_points.shape)}")

# Coarse matching scores patch-superpoint pairs by dual-normalized
# feature similarity and keeps the top entries; fine matching runs
# mutual nearest neighbors inside each coarse region.
coarse, fine = match_pair(output, prepared, pipeline)
print(f"\n{len(coarse.patch_indices)} coarse matches -> {len(fine.pixels)} fine matches")

pir = patch_inlier_ratio(coarse, prepared.gt_fine_pairs,
                         prepared.cell_to_patch, prepared.point_to_superpoint)
ir = inlier_ratio(fine, prepared.cloud.positions, pair.gt, pair.depth,
                  pair.intrinsics)
print(f"untrained quality: PIR {pir:.1%}, IR@5cm {ir:.1%} (near-random)")
