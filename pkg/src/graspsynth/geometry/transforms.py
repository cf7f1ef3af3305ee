"""Rigid transforms and axis-angle rotations."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_ORTHO_TOL = 1e-8


def rotation_from_axis_angle(axis_angle) -> np.ndarray:
    """Rodrigues formula. Zero vector maps to the identity.

    Input: axis_angle [3] whose norm is the rotation angle in radians.
    Output: [3, 3] rotation matrix.
    """
    v = np.asarray(axis_angle, dtype=np.float64).reshape(3)
    angle = np.linalg.norm(v)
    if angle < 1e-12:
        return np.eye(3)
    k = v / angle
    kx = np.array(
        [
            [0.0, -k[2], k[1]],
            [k[2], 0.0, -k[0]],
            [-k[1], k[0], 0.0],
        ]
    )
    return np.eye(3) + np.sin(angle) * kx + (1.0 - np.cos(angle)) * (kx @ kx)


def axis_angle_from_rotation(rot: np.ndarray) -> np.ndarray:
    """Principal-branch log map; output norm is in [0, pi]."""
    rot = np.asarray(rot, dtype=np.float64)
    cos = np.clip((np.trace(rot) - 1.0) / 2.0, -1.0, 1.0)
    angle = np.arccos(cos)
    if angle < 1e-10:
        return np.zeros(3)
    if np.pi - angle < 1e-6:
        # near half-turn: axis from the symmetric part
        m = (rot + np.eye(3)) / 2.0
        axis = np.sqrt(np.maximum(np.diag(m), 0.0))
        # fix signs using the largest component
        i = int(np.argmax(axis))
        if axis[i] > 0:
            axis = m[:, i] / axis[i]
        axis = axis / np.linalg.norm(axis)
        return axis * angle
    axis = np.array(
        [rot[2, 1] - rot[1, 2], rot[0, 2] - rot[2, 0], rot[1, 0] - rot[0, 1]]
    ) / (2.0 * np.sin(angle))
    return axis * angle


@dataclass(frozen=True)
class RigidTransform:
    """SE(3) element: x_world = rotation @ x_local + translation."""

    rotation: np.ndarray = field(default_factory=lambda: np.eye(3))
    translation: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        rot = np.asarray(self.rotation, dtype=np.float64).reshape(3, 3)
        t = np.asarray(self.translation, dtype=np.float64).reshape(3)
        if not np.all(np.isfinite(rot)) or not np.all(np.isfinite(t)):
            raise ValueError("non-finite transform")
        err = np.abs(rot.T @ rot - np.eye(3)).max()
        if err > _ORTHO_TOL:
            raise ValueError(f"rotation not orthonormal (|R^T R - I| = {err:.3e})")
        if abs(np.linalg.det(rot) - 1.0) > _ORTHO_TOL:
            raise ValueError("rotation determinant is not +1")
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "translation", t)

    @staticmethod
    def identity() -> "RigidTransform":
        return RigidTransform()

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Transform points [..., 3] from local to world."""
        pts = np.asarray(points, dtype=np.float64)
        return pts @ self.rotation.T + self.translation

    def apply_vectors(self, vectors: np.ndarray) -> np.ndarray:
        """Rotate direction vectors [..., 3] (no translation)."""
        return np.asarray(vectors, dtype=np.float64) @ self.rotation.T

    def inverse(self) -> "RigidTransform":
        return RigidTransform(self.rotation.T, -self.rotation.T @ self.translation)

    def compose(self, other: "RigidTransform") -> "RigidTransform":
        """self after other: (self @ other).apply(x) == self.apply(other.apply(x))."""
        return RigidTransform(
            self.rotation @ other.rotation,
            self.rotation @ other.translation + self.translation,
        )

    def __matmul__(self, other: "RigidTransform") -> "RigidTransform":
        return self.compose(other)


def axis_angle_to_transform(axis_angle, translation) -> RigidTransform:
    """Rotation by an axis-angle vector followed by a translation."""
    aa = np.asarray(axis_angle, dtype=np.float64).reshape(3)
    t = np.asarray(translation, dtype=np.float64).reshape(3)
    if not (np.all(np.isfinite(aa)) and np.all(np.isfinite(t))):
        raise ValueError("non-finite axis-angle or translation")
    return RigidTransform(rotation_from_axis_angle(aa), t)


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Uniform random rotation matrix (QR of a Gaussian matrix, sign-fixed)."""
    m = rng.standard_normal((3, 3))
    q, r = np.linalg.qr(m)
    q = q @ np.diag(np.sign(np.diag(r)))
    if np.linalg.det(q) < 0:
        q[:, 2] = -q[:, 2]
    return q
