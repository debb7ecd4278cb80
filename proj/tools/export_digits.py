#!/usr/bin/env python3
"""Dump the UCI handwritten-digits set (via scikit-learn) to data/digits8x8.bin.

Layout (little-endian): magic "DIG8", u32 count, count*64 bytes of pixel
intensities in 0..16 (row-major 8x8), then count label bytes.
"""
import struct
import sys
from pathlib import Path

import numpy as np
from sklearn.datasets import load_digits


def main(out_path: str) -> None:
    d = load_digits()
    images = d.images.astype(np.uint8)  # values 0..16
    labels = d.target.astype(np.uint8)
    n = images.shape[0]
    with open(out_path, "wb") as f:
        f.write(b"DIG8")
        f.write(struct.pack("<I", n))
        f.write(images.tobytes())
        f.write(labels.tobytes())
    print(f"wrote {out_path}: {n} images")


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "data/digits8x8.bin"
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    main(out)
