"""Compare the compiled kernels with the numpy fallback on rendering and pair rotation.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from camrope import _fallback
from camrope.camera import pixel_rays
from camrope.world import KIND_NAMES, make_trajectory, random_scene

try:
    from camrope import _kernels
except ImportError:  # extension not built
    _kernels = None


def render_args(size):
    scene = random_scene(3, n_min=3, n_max=3)
    cam = make_trajectory("static", 1, width=size, height=size)[0]
    centers = np.stack([p.center(0.0) for p in scene.primitives])
    kinds = np.array([KIND_NAMES[p.kind] for p in scene.primitives], dtype=np.int64)
    sizes = np.stack([p.size for p in scene.primitives]).astype(np.float64)
    colors = np.stack([p.color for p in scene.primitives]).astype(np.float64)
    img = np.zeros((size, size, 3))
    return img, cam.center, pixel_rays(cam), kinds, centers, sizes, colors


def bench(fn, args, repeat):
    fn(*args)
    return min(timeit.repeat(lambda: fn(*args), number=20, repeat=repeat)) / 20


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    cases = {
        "paint 32x32": (lambda m: m.paint_primitives, render_args(32)),
        "paint 128x128": (lambda m: m.paint_primitives, render_args(128)),
        "rotate 4096x64": (lambda m: m.rotate_pairs, (rng.normal(size=(4096, 64)), rng.normal(size=(4096, 32)))),
    }
    print(f"{'case':<16}{'numpy ms':>10}{'cython ms':>11}{'speedup':>9}  outputs")
    for name, (pick, a) in cases.items():
        t_py = bench(pick(_fallback), a, args.repeat)
        if _kernels is None:
            print(f"{name:<16}{t_py * 1e3:>10.3f}{'n/a':>11}{'':>9}  extension not built")
            continue
        t_cy = bench(pick(_kernels), a, args.repeat)
        if name.startswith("paint"):
            ia, ib = a[0].copy(), a[0].copy()
            pick(_fallback)(ia, *a[1:])
            pick(_kernels)(ib, *a[1:])
            same = np.array_equal(ia, ib)
        else:
            same = np.array_equal(pick(_fallback)(*a), pick(_kernels)(*a))
        print(f"{name:<16}{t_py * 1e3:>10.3f}{t_cy * 1e3:>11.3f}{t_py / t_cy:>8.2f}x  "
              f"{'identical' if same else 'DIFFER'}")


if __name__ == "__main__":
    main()
