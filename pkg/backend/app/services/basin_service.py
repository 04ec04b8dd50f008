# app/services/basin_service.py
"""
Basins of attraction in machine-precision complex arithmetic.

Every pixel center is a starting point; all pixels iterate together as numpy
complex128 arrays, and a pixel stops once it is within capture_tol of a root
(label = root index) or leaves the divergence bound (label -1). Roots come
from np.roots, ordered by argument in [0, 2pi), so z^k - 1 always has root 1
at index 0.

Rows are rendered in bands, in parallel when workers > 1, and stacked in
order, so the image does not depend on the worker count.
"""
import logging
import re
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed
from PIL import Image

from app.config import settings
from app.numerics.methods.solver import default_config
from app.schemas.basins import BasinConfig, BasinImage
from app.schemas.solver import StepKind

logger = logging.getLogger(__name__)

NONE = -1

PALETTE: List[Tuple[int, int, int]] = [
    (230, 57, 70),
    (42, 157, 143),
    (69, 123, 157),
    (233, 196, 106),
    (131, 56, 236),
    (244, 162, 97),
    (29, 53, 87),
    (168, 218, 220),
]
BLACK = (0, 0, 0)

_POLY_TOKEN = re.compile(r"^z\^?(\d+)-1$")


def parse_polynomial(token: str) -> Tuple[List[complex], str]:
    """
    `zK-1` (e.g. z3-1) or comma-separated coefficients, highest degree first.

    Returns (coefficients, label). Raises ValueError for anything else.
    """
    text = token.strip().replace(" ", "")
    match = _POLY_TOKEN.match(text)
    if match:
        k = int(match.group(1))
        if k < 2:
            raise ValueError(f"polynomial '{token}' must have degree >= 2")
        return [1.0] + [0.0] * (k - 1) + [-1.0], f"z{k}-1"
    try:
        coeffs = [complex(c.replace("i", "j")) for c in text.split(",")]
    except ValueError as e:
        raise ValueError(f"invalid polynomial '{token}': use zK-1 or comma-separated coefficients") from e
    if len(coeffs) < 3:
        raise ValueError(f"polynomial '{token}' must have degree >= 2")
    label = "poly_" + "_".join(c.replace("-", "m").replace(".", "p") for c in text.split(","))
    return coeffs, label


def polynomial_roots(coeffs: Sequence[complex]) -> np.ndarray:
    """Roots ordered by argument; for real coefficients conjugate pairs are made exact."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    roots = np.roots(coeffs)
    if np.all(coeffs.imag == 0):
        scale = np.maximum(1.0, np.abs(roots))
        roots = np.where(np.abs(roots.imag) <= 1e-12 * scale, roots.real + 0j, roots)
        upper = roots[roots.imag > 0]
        for i, r in enumerate(roots):
            if r.imag < 0 and upper.size:
                roots[i] = np.conj(upper[np.argmin(np.abs(upper - np.conj(r)))])
    order = np.argsort(np.mod(np.angle(roots), 2 * np.pi), kind="stable")
    return roots[order]


def _ipow(v: np.ndarray, m: int) -> np.ndarray:
    out = v
    for _ in range(m - 1):
        out = out * v
    return out


def build_kernel(cfg: BasinConfig) -> Callable[[np.ndarray], np.ndarray]:
    """One vectorized step of cfg.method on the polynomial."""
    coeffs = np.asarray(cfg.polynomial, dtype=np.complex128)
    p = lambda z: np.polyval(coeffs, z)

    if cfg.method == StepKind.NEWTON:
        dcoeffs = np.polyder(coeffs)
        return lambda x: x - p(x) / np.polyval(dcoeffs, x)

    if cfg.method == StepKind.STEFFENSEN:

        def steffensen(x):
            fx = p(x)
            return x - fx * fx / (p(x + fx) - fx)

        return steffensen

    scheme = default_config(cfg.method, m=cfg.m, weights=cfg.weights)
    G, H = scheme.G.formula, scheme.H.formula
    alpha, m, full = complex(cfg.alpha), scheme.m, scheme.third_ratio == "t2"

    def three_step(x):
        fx = p(x)
        z = x + alpha * _ipow(fx, m)
        fz = p(z)
        y = x - fx / ((fz - fx) / (z - x))
        fy = p(y)
        t1 = fy / fx
        w = y - G(t1) * fy / ((fx - fy) / (x - y))
        fw = p(w)
        d_wy = (fw - fy) / (w - y)
        t = d_wy / ((fw - fx) / (w - x)) if full else t1
        return w - H(t) * fw / d_wy

    return three_step


def _capture(z: np.ndarray, roots: np.ndarray, tol: float) -> np.ndarray:
    """Index of the root within tol of each point, or NONE."""
    dist = np.abs(z[:, None] - roots[None, :])
    nearest = np.argmin(dist, axis=1)
    hit = dist[np.arange(z.size), nearest] < tol
    return np.where(hit, nearest, NONE)


def classify(
    points: np.ndarray,
    cfg: BasinConfig,
    roots: Optional[np.ndarray] = None,
    return_final: bool = False,
):
    """
    Iterate every starting point; returns (root index or -1, iterations used),
    plus the final iterates when return_final is set.

    A point that reaches an exact root mid-step produces nan and is not
    captured; that only happens on a set of measure zero.
    """
    roots = polynomial_roots(cfg.polynomial) if roots is None else roots
    step = build_kernel(cfg)
    z = np.asarray(points, dtype=np.complex128).ravel().copy()
    labels = np.full(z.size, NONE, dtype=np.int16)
    iters = np.full(z.size, cfg.max_iter, dtype=np.int32)

    with np.errstate(all="ignore"):
        found = _capture(z, roots, cfg.capture_tol)
        done = found != NONE
        labels[done] = found[done]
        iters[done] = 0
        active = np.flatnonzero(~done)

        for k in range(1, cfg.max_iter + 1):
            if active.size == 0:
                break
            nz = step(z[active])
            z[active] = nz
            escaped = ~np.isfinite(nz) | (np.abs(nz) > cfg.divergence_bound)
            found = _capture(nz, roots, cfg.capture_tol)
            hit = (found != NONE) & ~escaped
            labels[active[hit]] = found[hit]
            iters[active[hit]] = k
            active = active[~(hit | escaped)]

    shape = np.shape(points)
    if return_final:
        return labels.reshape(shape), iters.reshape(shape), z.reshape(shape)
    return labels.reshape(shape), iters.reshape(shape)


def _axis(lo: float, hi: float, n: int) -> np.ndarray:
    """Pixel centers from lo to hi, computed from the nearer edge so the axis is symmetric."""
    d = (hi - lo) / n
    idx = np.arange(n)
    from_lo = lo + (idx + 0.5) * d
    from_hi = hi - (n - 1 - idx + 0.5) * d
    return np.where(idx < n / 2, from_lo, from_hi)


def pixel_grid(cfg: BasinConfig) -> np.ndarray:
    """Complex pixel centers, row 0 at im_max."""
    re_min, re_max, im_min, im_max = cfg.region
    re = _axis(re_min, re_max, cfg.width)
    im = _axis(im_min, im_max, cfg.height)[::-1]
    return re[None, :] + 1j * im[:, None]


def render(cfg: BasinConfig, workers: Optional[int] = None) -> BasinImage:
    """Classify every pixel of the configured region."""
    workers = workers if workers is not None else settings.BASIN_WORKERS
    roots = polynomial_roots(cfg.polynomial)
    grid = pixel_grid(cfg)
    logger.info(
        f"[BASINS] {cfg.method.value} on {cfg.label or 'polynomial'}: {cfg.width}x{cfg.height}, "
        f"{len(roots)} roots, max_iter {cfg.max_iter}"
    )

    if workers == 1:
        labels, iters = classify(grid, cfg, roots)
    else:
        bands = np.array_split(np.arange(cfg.height), workers)
        parts = Parallel(n_jobs=workers)(delayed(classify)(grid[band], cfg, roots) for band in bands if band.size)
        labels = np.vstack([p[0] for p in parts])
        iters = np.vstack([p[1] for p in parts])

    image = BasinImage(root_index=labels, iterations=iters, roots=roots, max_iter=cfg.max_iter)
    none_share = float(np.mean(labels == NONE))
    logger.info(f"[BASINS] done: {none_share:.1%} of pixels unassigned")
    return image


def default_palette(n_roots: int) -> List[Tuple[int, int, int]]:
    return [PALETTE[i % len(PALETTE)] for i in range(n_roots)]


def to_rgb(img: BasinImage, palette: Optional[Sequence[Tuple[int, int, int]]] = None, shade: bool = True) -> np.ndarray:
    """(height, width, 3) uint8; none pixels black, others darkened with iterations used."""
    palette = list(palette) if palette is not None else default_palette(len(img.roots))
    if len(palette) < len(img.roots):
        raise ValueError(f"palette has {len(palette)} colors for {len(img.roots)} roots")
    colors = np.array(list(palette) + [BLACK], dtype=np.float64)
    # index -1 selects the trailing black entry
    rgb = colors[img.root_index]
    if shade:
        frac = np.clip(img.iterations / max(img.max_iter, 1), 0.0, 1.0)
        rgb = rgb * (1.0 - 0.75 * np.sqrt(frac))[..., None]
    return np.rint(rgb).astype(np.uint8)


def write_image(
    img: BasinImage,
    path,
    palette: Optional[Sequence[Tuple[int, int, int]]] = None,
    shade: bool = True,
) -> Path:
    """Write a binary PPM (P6, 8-bit). OSError propagates to the caller."""
    path = Path(path)
    image = Image.fromarray(to_rgb(img, palette, shade))
    path.parent.mkdir(parents=True, exist_ok=True)
    image.save(path, format="PPM")
    logger.info(f"[BASINS] wrote {path}")
    return path
