"""8-bit raster container, deterministic resampling, dihedral transforms, file I/O.

Every operation here is a pure function: uint8 in, uint8 out, no shared
state. Integer resampling rounds half away from zero so results are
bit-exact and reproducible across implementations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import DegenerateInputError, ShapeError

WHITE = 255


@dataclass(frozen=True)
class Raster:
    """H×W×C 8-bit image. C is 1 (gray) or 3 (RGB)."""

    data: np.ndarray

    def __post_init__(self):
        d = self.data
        if not isinstance(d, np.ndarray) or d.dtype != np.uint8:
            raise ShapeError("raster data must be a uint8 ndarray")
        if d.ndim != 3 or d.shape[2] not in (1, 3):
            raise ShapeError(f"raster must be (H, W, C) with C in {{1, 3}}, got {d.shape}")
        if d.shape[0] < 1 or d.shape[1] < 1:
            raise ShapeError("raster dimensions must be >= 1")

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return self.data.shape[2]

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "Raster":
        """Wrap a (H, W), (H, W, 1) or (H, W, 3) uint8 array."""
        if arr.ndim == 2:
            arr = arr[:, :, None]
        return cls(np.ascontiguousarray(arr, dtype=np.uint8))

    @classmethod
    def blank(cls, width: int, height: int, channels: int = 3, value: int = WHITE) -> "Raster":
        return cls(np.full((height, width, channels), value, dtype=np.uint8))

    def to_gray(self) -> np.ndarray:
        """Integer-weighted luma (ITU-R 601-ish), returned as (H, W) uint8."""
        if self.channels == 1:
            return self.data[:, :, 0]
        d = self.data.astype(np.uint32)
        return ((77 * d[:, :, 0] + 151 * d[:, :, 1] + 28 * d[:, :, 2]) >> 8).astype(np.uint8)

    def same_bytes(self, other: "Raster") -> bool:
        return self.data.shape == other.data.shape and np.array_equal(self.data, other.data)

    def save(self, path: str | Path) -> None:
        """Write PNG or baseline TIFF depending on the file extension."""
        arr = self.data[:, :, 0] if self.channels == 1 else self.data
        Image.fromarray(arr).save(str(path))

    @classmethod
    def load(cls, path: str | Path) -> "Raster":
        """Read an image file; gray stays 1-channel, everything else becomes RGB."""
        with Image.open(str(path)) as im:
            if im.mode == "L":
                arr = np.asarray(im, dtype=np.uint8)
            else:
                arr = np.asarray(im.convert("RGB"), dtype=np.uint8)
        return cls.from_array(arr)


class DihedralTransform(Enum):
    """The 8 symmetries of the square. Rotations are counterclockwise."""

    IDENTITY = "identity"
    ROT90 = "rot90"
    ROT180 = "rot180"
    ROT270 = "rot270"
    FLIP_H = "flip_h"          # mirror left-right
    FLIP_V = "flip_v"          # mirror top-bottom
    TRANSPOSE = "transpose"    # reflect across the main diagonal
    ANTI_TRANSPOSE = "anti_transpose"

    def inverse(self) -> "DihedralTransform":
        if self is DihedralTransform.ROT90:
            return DihedralTransform.ROT270
        if self is DihedralTransform.ROT270:
            return DihedralTransform.ROT90
        return self


DIHEDRAL_ELEMENTS = tuple(DihedralTransform)


def apply_dihedral(img: Raster, t: DihedralTransform) -> Raster:
    """Apply one square symmetry as an exact pixel permutation."""
    if img.width != img.height:
        raise ShapeError(f"dihedral transforms need a square image, got {img.width}x{img.height}")
    a = img.data
    if t is DihedralTransform.IDENTITY:
        out = a.copy()
    elif t is DihedralTransform.ROT90:
        out = np.rot90(a, 1, axes=(0, 1))
    elif t is DihedralTransform.ROT180:
        out = np.rot90(a, 2, axes=(0, 1))
    elif t is DihedralTransform.ROT270:
        out = np.rot90(a, 3, axes=(0, 1))
    elif t is DihedralTransform.FLIP_H:
        out = a[:, ::-1]
    elif t is DihedralTransform.FLIP_V:
        out = a[::-1, :]
    elif t is DihedralTransform.TRANSPOSE:
        out = np.swapaxes(a, 0, 1)
    else:
        out = np.swapaxes(a, 0, 1)[::-1, ::-1]
    return Raster(np.ascontiguousarray(out))


def downsample_2x(img: Raster) -> Raster:
    """Halve both dimensions: each output pixel is the 2×2 block mean.

    Means round half away from zero; an odd trailing row/column is dropped.
    """
    if img.width < 2 or img.height < 2:
        raise DegenerateInputError(f"cannot 2x-downsample a {img.width}x{img.height} image")
    h, w = (img.height // 2) * 2, (img.width // 2) * 2
    a = img.data[:h, :w].astype(np.uint16)
    s = a[0::2, 0::2] + a[0::2, 1::2] + a[1::2, 0::2] + a[1::2, 1::2]
    # (sum + 2) // 4 == round-half-away-from-zero of sum/4 for non-negative sums
    return Raster(((s + 2) >> 2).astype(np.uint8))


def _box_axis_weights(src: int, dst: int) -> list[tuple[int, np.ndarray]]:
    """Per-output (start_index, weights) pairs for exact area averaging."""
    scale = src / dst
    out = []
    for j in range(dst):
        a = j * scale
        b = (j + 1) * scale
        i0 = int(np.floor(a))
        i1 = min(int(np.ceil(b)), src)
        w = np.ones(i1 - i0, dtype=np.float64)
        w[0] -= a - i0
        w[-1] -= i1 - b
        out.append((i0, w / (b - a)))
    return out


def _resample_axis_box(arr: np.ndarray, dst: int) -> np.ndarray:
    """Exact box (area-average) reduction along axis 0; float64 result."""
    pieces = np.empty((dst,) + arr.shape[1:], dtype=np.float64)
    for j, (i0, w) in enumerate(_box_axis_weights(arr.shape[0], dst)):
        pieces[j] = np.tensordot(w, arr[i0:i0 + len(w)].astype(np.float64), axes=(0, 0))
    return pieces


def _resample_axis_linear(arr: np.ndarray, dst: int) -> np.ndarray:
    """Bilinear (per-axis linear) enlargement along axis 0; float64 result.

    Output centers map to source coordinates (j+0.5)*src/dst - 0.5, clamped.
    """
    src = arr.shape[0]
    pos = (np.arange(dst, dtype=np.float64) + 0.5) * (src / dst) - 0.5
    pos = np.clip(pos, 0.0, src - 1.0)
    i0 = np.floor(pos).astype(np.int64)
    i1 = np.minimum(i0 + 1, src - 1)
    f = (pos - i0).reshape((dst,) + (1,) * (arr.ndim - 1))
    a = arr.astype(np.float64)
    return (1.0 - f) * a[i0] + f * a[i1]


def resize_to(img: Raster, target: int) -> Raster:
    """Resize to target×target: box filter when shrinking, bilinear when enlarging.

    The per-axis method is chosen per axis, so a portrait image can shrink
    vertically and stretch horizontally in one call. Rounds half away from zero.
    """
    if target < 1:
        raise DegenerateInputError(f"target size must be >= 1, got {target}")
    work = img.data
    for axis, size in ((0, img.height), (1, img.width)):
        moved = np.moveaxis(work, axis, 0)
        if size == target:
            resampled = moved.astype(np.float64) if moved.dtype != np.float64 else moved
        elif size > target:
            resampled = _resample_axis_box(moved, target)
        else:
            resampled = _resample_axis_linear(moved, target)
        work = np.moveaxis(resampled, 0, axis)
    out = np.floor(work + 0.5)  # half away from zero; values are non-negative
    return Raster(np.clip(out, 0, 255).astype(np.uint8))


def pad_to_square(img: Raster, fill: int = WHITE) -> Raster:
    """Center the image on a square canvas of its larger dimension."""
    if img.width == img.height:
        return img
    side = max(img.width, img.height)
    canvas = np.full((side, side, img.channels), fill, dtype=np.uint8)
    y0 = (side - img.height) // 2
    x0 = (side - img.width) // 2
    canvas[y0:y0 + img.height, x0:x0 + img.width] = img.data
    return Raster(canvas)
