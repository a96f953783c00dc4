"""Time the compiled kernels against the NumPy fallback on the model's real layer shapes.

Usage::

    python benchmarks/bench_kernels.py [--repeat 20]
"""
import argparse
import timeit

import numpy as np

from advdenoise.kernels import _pykernels

try:
    from advdenoise.kernels import _ckernels
except ImportError:
    _ckernels = None

# (name, input shape, kernel, stride, padding) taken from the classifier, denoiser and loss network
CONV_CASES = [
    ("classifier conv1", (64, 1, 28, 28), 5, 1, 0),
    ("classifier conv2", (64, 20, 12, 12), 5, 1, 0),
    ("denoiser conv1", (128, 1, 28, 28), 3, 3, 1),
    ("denoiser tconv2 (col2im)", (128, 8, 15, 15), 5, 3, 1),
    ("lossnet conv3", (64, 64, 8, 8), 3, 1, 1),
]
POOL_CASES = [
    ("classifier pool1", (64, 20, 24, 24), 2, 2),
    ("denoiser pool2", (128, 8, 3, 3), 2, 1),
    ("lossnet pool1", (64, 32, 32, 32), 2, 2),
]


def bench(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat)) * 1e3


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    rng = np.random.default_rng(0)
    print(f"{'kernel':<34}" + "".join(f"{name + ' ms':>12}" for name, _ in backends) + f"{'speedup':>10}")

    def row(label, fns):
        times = [bench(f, args.repeat) for f in fns]
        speed = f"{times[0] / times[1]:>9.1f}x" if len(times) == 2 else ""
        print(f"{label:<34}" + "".join(f"{t:>12.2f}" for t in times) + speed)

    for name, shape, k, s, p in CONV_CASES:
        x = rng.standard_normal(shape).astype(np.float32)
        cols = _pykernels.im2col(x, k, k, s, p)
        row(f"im2col  {name}", [lambda m=m: m.im2col(x, k, k, s, p) for _, m in backends])
        row(f"col2im  {name}", [lambda m=m: m.col2im(cols, shape, k, k, s, p) for _, m in backends])
    for name, shape, k, s in POOL_CASES:
        x = rng.standard_normal(shape).astype(np.float32)
        out, off = _pykernels.maxpool_forward(x, k, s)
        g = np.ones_like(out)
        row(f"pool fwd {name}", [lambda m=m: m.maxpool_forward(x, k, s) for _, m in backends])
        row(f"pool bwd {name}", [lambda m=m: m.maxpool_backward(g, off, shape, k, s) for _, m in backends])


if __name__ == "__main__":
    main()
