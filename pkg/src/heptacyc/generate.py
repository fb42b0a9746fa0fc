"""Deterministic random instances, optionally with engineered zero pivots.

A zero pivot at ``i`` is produced by ``d_i := d_i - alpha_i``.  Once a pivot
has been replaced by ``t``, every later pivot in the band normally depends
on ``t`` and can no longer be zeroed through ``d`` alone.  So when more
pivots follow, the column below the substituted pivot is also cleared
(``b_{i+1}``, ``B_{i+2}``, ``D_{i+3}`` adjusted so the multipliers vanish),
which keeps ``t`` confined to the two bordered rows.
"""

import random

from .bandfile import BandFile
from .core import FAMILIES, AntiCyclicHeptaMatrix, from_bands, reserved_slots
from .errors import DimensionTooSmall, GenerationFailed
from .factorization import factor
from .scalars import Rational, RatFunc

MAX_ZERO_PIVOTS = 3


def random_bands(n, rng, low=-9, high=9, dominant=False):
    """Small-integer bands with the reserved slots zeroed.

    With ``dominant=True`` each diagonal entry exceeds its row's off-diagonal
    absolute sum, which keeps float-mode pivots well away from zero.
    """
    bands = {f: [rng.randint(low, high) for _ in range(n)] for f in FAMILIES}
    for fam, i in reserved_slots(n):
        bands[fam][i - 1] = 0
    if dominant:
        off = [0] * n
        for f in FAMILIES:
            if f != "d":
                for i, x in enumerate(bands[f]):
                    off[i] += abs(x)
        bands["d"] = [o + rng.randint(1, high) for o in off]
    return bands


def _build(n, bands):
    return from_bands(n, *(bands[f] for f in FAMILIES))


def _clear_column(n, bands, F, i):
    """Adjust rows i+1..i+3 so the L entries below pivot i are exactly zero."""
    alpha = F.alpha[i]
    f_num = F.f[i + 1] * alpha
    e_num = F.e[i + 2] * alpha
    bands["b"][i] = bands["b"][i] - f_num
    bands["B"][i + 1] = bands["B"][i + 1] - e_num
    bands["D"][i + 2] = Rational(0)


def _constant(x):
    if isinstance(x, RatFunc):
        return x.constant() if x.is_constant() else None
    return x


def _engineer(n, bands, indices):
    bands = {f: [Rational(x) for x in v] for f, v in bands.items()}
    last = len(indices) - 1
    for pos, i in enumerate(indices):
        F = factor(_build(n, bands))
        alpha = _constant(F.alpha[i])
        if alpha is None:
            return None
        if pos < last:
            if alpha == 0:
                return None
            _clear_column(n, bands, F, i)
            F = factor(_build(n, bands))
            alpha = _constant(F.alpha[i])
        bands["d"][i - 1] = bands["d"][i - 1] - alpha
    return bands


def generate(n, seed, zero_pivots=0, kind="cyclic", max_attempts=200):
    """Draw a reproducible instance and return it as a :class:`BandFile`.

    Raises
    ------
    ValueError
        If ``zero_pivots`` is outside 0..3 or ``kind`` is unknown.
    GenerationFailed
        If no draw within ``max_attempts`` ends with exactly ``zero_pivots``
        substituted pivots.
    """
    if n < 8:
        raise DimensionTooSmall(f"order n = {n} is below the minimum 8")
    if not 0 <= zero_pivots <= MAX_ZERO_PIVOTS:
        raise ValueError(f"zero_pivots must be in 0..{MAX_ZERO_PIVOTS}, got {zero_pivots}")
    if kind not in ("cyclic", "anti"):
        raise ValueError(f"kind must be 'cyclic' or 'anti', not {kind!r}")
    rng = random.Random(f"hepta:{n}:{seed}:{zero_pivots}")
    best = -1
    for _ in range(max_attempts):
        bands = random_bands(n, rng)
        if zero_pivots:
            if zero_pivots == 1:
                indices = [rng.randint(1, n)]
            else:
                # all but the last must leave room for rows i+1..i+3 in the band
                head = sorted(rng.sample(range(1, n - 4), zero_pivots - 1))
                indices = head + [rng.randint(head[-1] + 1, n - 2)]
            bands = _engineer(n, bands, indices)
            if bands is None:
                continue
        H = _build(n, bands)
        got = len(factor(H).substituted)
        if got == zero_pivots:
            if kind == "anti":
                H = AntiCyclicHeptaMatrix(H)
            return BandFile.from_matrix(H)
        best = max(best, got)
    raise GenerationFailed(zero_pivots, best, max_attempts)
