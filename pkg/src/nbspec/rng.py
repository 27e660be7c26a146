"""Counter-based random streams.

Every stochastic routine in the package draws from a Philox generator keyed
by a (master seed, replicate index) pair, so replicate i always sees the same
stream no matter how many workers run or in which order they finish.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

_MASK64 = (1 << 64) - 1

# shared sub-seed for model fitting inside statistics and estimators, so a
# fit is the same deterministic function of the graph wherever it happens
DEFAULT_FIT_SEED = 0x5EED


@dataclass(frozen=True)
class RngSeed:
    """A (master seed, replicate index) pair identifying one random stream."""

    master: int
    replicate: int = 0

    def __post_init__(self):
        if not (0 <= int(self.master) <= _MASK64):
            raise ParameterError("master seed must fit in 64 unsigned bits")
        if int(self.replicate) < 0:
            raise ParameterError("replicate index must be nonnegative")


def as_seed(seed) -> RngSeed:
    """Coerce an int, (master, replicate) pair, or RngSeed to RngSeed."""
    if isinstance(seed, RngSeed):
        return seed
    if isinstance(seed, (int, np.integer)):
        return RngSeed(int(seed) & _MASK64, 0)
    if isinstance(seed, (tuple, list)) and len(seed) == 2:
        return RngSeed(int(seed[0]) & _MASK64, int(seed[1]))
    raise ParameterError(f"cannot interpret {seed!r} as a seed")


def stream(seed) -> np.random.Generator:
    """Philox stream for the given seed; pure function of (master, replicate)."""
    s = as_seed(seed)
    key = np.array([s.master, s.replicate & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _splitmix64(x: int) -> int:
    # Finalizer from splitmix64; enough mixing to decorrelate derived masters.
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_master(master: int, *tags: int) -> int:
    """Derive a child 64-bit master seed from a parent and integer tags."""
    x = int(master) & _MASK64
    for t in tags:
        x = _splitmix64(x ^ (int(t) & _MASK64))
    return x


def node_set_master(master: int, members) -> int:
    """Master seed for a subproblem, a hash of the sorted member index set.

    Used by the recursive estimator so sibling subproblems get independent,
    schedule-invariant streams.
    """
    arr = np.sort(np.asarray(members, dtype=np.int64))
    h = hashlib.blake2b(arr.tobytes(), digest_size=8).digest()
    return derive_master(master, int.from_bytes(h, "little"))
