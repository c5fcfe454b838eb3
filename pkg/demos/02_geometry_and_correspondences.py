"""
Camera geometry and ground-truth correspondences
================================================

Walks the geometric core: the pinhole camera, depth-map lifting, rigid
transforms, and the pixel-point correspondence criterion that supervises
training and scores matches.
"""

import numpy as np

from colorreg.geometry import (
    CameraIntrinsics,
    ColoredPointCloud,
    DepthImage,
    RigidTransform,
    establish_correspondences,
    lift,
    pose_error,
    project,
    rotation_about_axis,
)

K = CameraIntrinsics(fx=70.0, fy=70.0, cx=32.0, cy=32.0, width=64, height=64)

# A pixel and its depth determine a 3D point; projecting it straight back
# lands on the pixel center. Pixel centers sit at (col + 0.5, row + 0.5).
depth = DepthImage(np.full((64, 64), 1.5))
point = lift(K, depth, (20, 44))
xy, ok = project(K, RigidTransform.identity(), point)
print(f"lift(20, 44) -> {np.round(point, 4)}; reprojects to {np.round(xy, 4)} "
      f"(center is (44.5, 20.5))")

# A rigid transform moves the cloud into the camera frame of the image.
T = RigidTransform(rotation_about_axis(np.array([0.0, 1.0, 0.0]), 0.1),
                   np.array([0.05, 0.0, 0.02]))
rng = np.random.default_rng(3)
positions = rng.uniform(-0.8, 0.8, size=(500, 3)) + np.array([0, 0, 2.0])
cloud = ColoredPointCloud(positions, rng.uniform(size=(500, 3)))

# Pixel m and point n correspond when the point projects within theta
# pixels of the pixel's center. Points behind the camera or outside the
# frame match nothing.
pixel_centers = np.stack(np.meshgrid(np.arange(64) + 0.5, np.arange(64) + 0.5),
                         axis=-1).reshape(-1, 2)
corr = establish_correspondences(pixel_centers, K, T, cloud, theta=1.0)
print(f"{len(corr.pairs)} correspondences at theta=1.0 px")
corr8 = establish_correspondences(pixel_centers, K, T, cloud, theta=8.0)
print(f"{len(corr8.pairs)} at theta=8.0 px (the coarse-level radius)")

# Pose error between two transforms: relative rotation in degrees and
# translation gap in meters. Identical poses score (0, 0).
T_noisy = RigidTransform(
    rotation_about_axis(np.array([0.0, 1.0, 0.0]), 0.1 + np.radians(2.0)),
    T.translation + np.array([0.03, 0.0, 0.04]))
rre, rte = pose_error(T_noisy, T)
print(f"perturbed pose: RRE {rre:.2f} deg, RTE {rte:.3f} m")
