"""Constructive repair of t-restricted matrices into inclusive ones.

Two stages: ``breadth_reduce`` edits at most 4t entries per line to bring
the breadth down to 4t while staying t-restricted; ``monotone_repair``
then applies six local rules driven by posts (column runs of Z) and beams
(row runs of Z) to reach an inclusive matrix. ``repair_matrix`` chains them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import InputError, InvariantError
from .matrix import (
    BinaryMatrix,
    breadth,
    is_inclusive,
    is_monotone,
    matrix_local_difference,
    min_restriction,
    region_decomposition,
)


def _exclusive_prefix(mask: np.ndarray, axis: int) -> np.ndarray:
    """Count of True entries strictly before each position along ``axis``."""
    counts = np.cumsum(mask, axis=axis, dtype=np.int64)
    return counts - mask


def _exclusive_suffix(mask: np.ndarray, axis: int) -> np.ndarray:
    flipped = np.flip(mask, axis=axis)
    return np.flip(_exclusive_prefix(flipped, axis), axis=axis)


def _prefix_or(mask: np.ndarray) -> np.ndarray:
    """``out[i, j]`` is True iff some ``mask[i', j']`` with i'<=i, j'<=j is."""
    return np.logical_or.accumulate(np.logical_or.accumulate(mask, axis=0), axis=1)


def _suffix_or(mask: np.ndarray) -> np.ndarray:
    return _prefix_or(mask[::-1, ::-1])[::-1, ::-1]


def line_bound(t: int, w: int) -> int:
    """Per-line edit budget of the six-rule stage."""
    return 2 * (t + w) * w**3


# breadth reduction ----------------------------------------------------------


def breadth_reduce(a: BinaryMatrix, t: int, verify: bool = True) -> BinaryMatrix:
    """Reset Z cells far from any low-count zero/one anchor.

    Anchors of ones are cells with at least 2t ones strictly above or
    strictly to the left; anchors of zeros have at least 2t zeros strictly
    below or to the right. A Z cell with no zero anchor weakly below-right
    becomes 1; otherwise, with no one anchor weakly above-left, it becomes 0.
    """
    if t < 1:
        raise InputError("breadth_reduce needs t >= 1")
    if a.data.size == 0:
        return a
    if min_restriction(a) > t:
        raise InputError(f"matrix is not {t}-restricted")

    ones = a.data
    zeros = ~ones
    need = 2 * t
    one_anchor = (_exclusive_prefix(ones, 0) >= need) | (_exclusive_prefix(ones, 1) >= need)
    zero_anchor = (_exclusive_suffix(zeros, 0) >= need) | (_exclusive_suffix(zeros, 1) >= need)
    zero_below = _suffix_or(zero_anchor)
    one_above = _prefix_or(one_anchor)

    z = region_decomposition(a).z
    out = ones.copy()
    out[z & ~zero_below] = True
    out[z & zero_below & ~one_above] = False
    b = BinaryMatrix(out)

    if verify:
        if min_restriction(b) > t:
            raise InvariantError(f"breadth_reduce output is not {t}-restricted")
        if breadth(b) > 4 * t:
            raise InvariantError(f"breadth_reduce output has breadth {breadth(b)} > {4 * t}")
        d = matrix_local_difference(a, b)
        if d > 4 * t:
            raise InvariantError(f"breadth_reduce changed {d} > {4 * t} entries in a line")
    return b


# six-rule repair ------------------------------------------------------------


@dataclass(frozen=True)
class PostBeamIndex:
    """Per-cell Z run counts and post/beam multiplicities.

    ``above[i, j]`` is the number of Z cells strictly above ``(i, j)`` in its
    column, ``below`` strictly beneath, ``left``/``right`` likewise within the
    row. ``post_mult[j]`` is the multiplicity of column j's post (0 if the
    column misses Z) and ``beam_mult[i]`` that of row i's beam.
    """

    z: np.ndarray
    above: np.ndarray
    below: np.ndarray
    left: np.ndarray
    right: np.ndarray
    post_mult: np.ndarray
    beam_mult: np.ndarray

    def post_cells(self, j: int) -> list[int]:
        return [int(i) for i in np.nonzero(self.z[:, j])[0]]

    def beam_cells(self, i: int) -> list[int]:
        return [int(j) for j in np.nonzero(self.z[i, :])[0]]


def _multiplicities(z: np.ndarray, entries: np.ndarray) -> np.ndarray:
    """Multiplicity of each line's Z-run; lines are the rows of ``z``."""
    keys = []
    for line_z, line_a in zip(z, entries):
        idx = np.nonzero(line_z)[0]
        keys.append((idx.tobytes(), line_a[idx].tobytes()) if idx.size else None)
    counts = Counter(k for k in keys if k is not None)
    return np.array([counts[k] if k is not None else 0 for k in keys], dtype=np.int64)


def post_beam_index(a: BinaryMatrix) -> PostBeamIndex:
    z = np.array(region_decomposition(a).z)
    zi = z.astype(np.int64)
    return PostBeamIndex(
        z=z,
        above=_exclusive_prefix(zi, 0),
        below=_exclusive_suffix(zi, 0),
        left=_exclusive_prefix(zi, 1),
        right=_exclusive_suffix(zi, 1),
        post_mult=_multiplicities(z.T, a.data.T),
        beam_mult=_multiplicities(z, a.data),
    )


def short_run_violations(index: PostBeamIndex, w: int) -> list[tuple[int, int]]:
    """Z cells breaking the guarantee that ``min(above, right) < w`` and
    ``min(left, below) < w``; empty whenever breadth is at most w."""
    z = index.z
    bad = z & (
        (np.minimum(index.above, index.right) >= w) | (np.minimum(index.left, index.below) >= w)
    )
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(bad))]


def rule_table(a: BinaryMatrix, w: int, index: PostBeamIndex | None = None) -> np.ndarray:
    """Boolean array of shape (6, m, n): which rule fires at each Z cell."""
    ix = post_beam_index(a) if index is None else index
    z = ix.z
    post_big = (ix.post_mult >= 2 * w)[None, :]
    beam_big = (ix.beam_mult >= 2 * w)[:, None]
    short_post = (ix.above < w) & (ix.below < w)
    short_beam = (ix.left < w) & (ix.right < w)
    return np.stack(
        [
            z & (ix.above >= w) & (ix.left >= w),
            z & (ix.below >= w) & (ix.right >= w),
            z & short_post & post_big,
            z & short_beam & beam_big,
            z & short_post & ~post_big,
            z & short_beam & ~beam_big,
        ]
    )


def monotone_repair(a: BinaryMatrix, t: int, w: int, verify: bool = True) -> BinaryMatrix:
    """Six-rule repair of a t-restricted matrix of breadth at most ``w``."""
    if t < 0 or w < 1:
        raise InputError("need t >= 0 and w >= 1")
    if 2 * w < t + 1:
        raise InputError(f"need 2w >= t+1, got t={t}, w={w}")
    if a.data.size == 0:
        return a
    if min_restriction(a) > t:
        raise InputError(f"matrix is not {t}-restricted")
    if breadth(a) > w:
        raise InputError(f"matrix has breadth {breadth(a)} > {w}")

    index = post_beam_index(a)
    rules = rule_table(a, w, index)
    fired = rules.sum(axis=0)
    z = index.z
    if (fired[z] == 0).any():
        i, j = np.argwhere(z & (fired == 0))[0]
        raise InvariantError(f"no rule applies at Z cell ({i}, {j})")
    # Rules five and six may coincide (both write 0); any other overlap is a bug.
    both_zero_rules = rules[4] & rules[5]
    clash = (fired > 1) & ~(both_zero_rules & (fired == 2))
    if clash.any():
        i, j = np.argwhere(clash)[0]
        hit = [r + 1 for r in range(6) if rules[r, i, j]]
        raise InvariantError(f"rules {hit} all apply at ({i}, {j})")

    out = a.data.copy()
    out[rules[0]] = True
    out[rules[1] | rules[4] | rules[5]] = False
    # Rules three and four keep the original entry.
    b = BinaryMatrix(out)

    if verify:
        if not is_inclusive(b):
            raise InvariantError("monotone_repair output is not inclusive")
        d = matrix_local_difference(a, b)
        if d > line_bound(t, w):
            raise InvariantError(f"monotone_repair changed {d} > {line_bound(t, w)} entries in a line")
    return b


# composition ----------------------------------------------------------------


@dataclass(frozen=True)
class MatrixRepair:
    source: BinaryMatrix
    reduced: BinaryMatrix
    result: BinaryMatrix
    t: int

    @property
    def reduce_difference(self) -> int:
        return matrix_local_difference(self.source, self.reduced)

    @property
    def repair_difference(self) -> int:
        return matrix_local_difference(self.reduced, self.result)

    @property
    def total_difference(self) -> int:
        return matrix_local_difference(self.source, self.result)


def proof_bound(t: int) -> int:
    """4t for the breadth stage plus the six-rule budget at w = 4t."""
    return 4 * t + line_bound(t, 4 * t) if t else 0


def stated_bound(t: int) -> int:
    return 644 * t**4


def repair_matrix_stages(a: BinaryMatrix, t: int, verify: bool = True) -> MatrixRepair:
    if t < 0:
        raise InputError("t must be nonnegative")
    if min_restriction(a) > t:
        raise InputError(f"matrix is not {t}-restricted")
    if t == 0 or a.data.size == 0:
        if not is_monotone(a) and a.data.size:
            raise InvariantError("0-restricted matrix is not monotone")
        return MatrixRepair(a, a, a, t)
    reduced = breadth_reduce(a, t, verify=verify)
    result = monotone_repair(reduced, t, 4 * t, verify=verify)
    rep = MatrixRepair(a, reduced, result, t)
    if verify:
        if not is_inclusive(result):
            raise InvariantError("repaired matrix is not inclusive")
        if rep.total_difference > proof_bound(t):
            raise InvariantError(f"local difference {rep.total_difference} exceeds {proof_bound(t)}")
    return rep


def repair_matrix(a: BinaryMatrix, t: int, verify: bool = True) -> BinaryMatrix:
    """Inclusive matrix within local difference 644 t^4 of a t-restricted ``a``."""
    return repair_matrix_stages(a, t, verify).result
