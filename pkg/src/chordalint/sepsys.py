"""Digit-labeling separating-system construction and bound formulas.

Elements are 0-based ids 0..n-1. The construction labels every element with a
short string over a small integer alphabet such that labels are distinct and
no letter is overused in any digit; the letter-j sets of each digit then form
a size-bounded separating system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class LabelMatrix:
    """ell x n matrix of integer letters; column j is the label of element j."""

    n: int
    a: int
    ell: int
    rows: tuple

    def label(self, element: int) -> tuple:
        return tuple(row[element] for row in self.rows)


@dataclass(frozen=True)
class SeparatingSystem:
    """A family of subsets of [0, n), each of size at most k."""

    ground_n: int
    k: int
    sets: tuple

    def __post_init__(self):
        for s in self.sets:
            if len(s) > self.k:
                raise ValueError(f"set of size {len(s)} exceeds cap {self.k}")
            if any(not 0 <= e < self.ground_n for e in s):
                raise ValueError("set element out of range")

    def __len__(self) -> int:
        return len(self.sets)


def label_length(n: int, a: int) -> int:
    """Smallest ell with a**ell >= n (0 for n == 1)."""
    ell = 0
    power = 1
    while power < n:
        power *= a
        ell += 1
    return ell


def label_elements(n: int, a: int) -> LabelMatrix:
    """Distinct labels of length ceil(log_a n) with balanced letter usage.

    Digit d (1-based) of all n elements is generated in three steps: circular
    blocks of size a**(d-1) up to position p_d * a**d, then blocks of size
    ceil(r_d / a) up to position n, then every letter strictly after position
    a**(d-1) * p_{d-1} is incremented. Letters never exceed a, and each letter
    appears at most ceil(n / a) times per digit.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if a < 2:
        raise ValueError("alphabet parameter must be at least 2")
    ell = label_length(n, a)
    rows = []
    for d in range(1, ell + 1):
        block = a ** (d - 1)
        p_d, r_d = divmod(n, a**d)
        p_prev = n // block
        seq = [0] * n
        cutoff = p_d * a**d
        for idx in range(cutoff):
            seq[idx] = (idx // block) % a
        if r_d:
            tail_block = -(-r_d // a)  # ceil
            for idx in range(cutoff, n):
                seq[idx] = (idx - cutoff) // tail_block
        bump_after = block * p_prev
        for idx in range(bump_after, n):
            seq[idx] += 1
        rows.append(tuple(seq))
    return LabelMatrix(n=n, a=a, ell=ell, rows=tuple(rows))


def _sets_from_labels(labels: LabelMatrix, k: int) -> tuple:
    """Letter-j sets (j >= 1 only) of every digit, empties dropped.

    Separation of a pair differing in some digit is always witnessed by the
    nonzero letter, so letter-0 sets are never needed.
    """
    sets = []
    for row in labels.rows:
        by_letter: dict = {}
        for element, letter in enumerate(row):
            if letter >= 1:
                by_letter.setdefault(letter, []).append(element)
        for letter in sorted(by_letter):
            sets.append(frozenset(by_letter[letter]))
    return tuple(sets)


def build_separating_system(n: int, k: int) -> SeparatingSystem:
    """The (n, k) construction: label with alphabet parameter ceil(n/k).

    Requires 1 <= k < n/2; at most ceil(n/k) * ceil(log_ceil(n/k) n) sets,
    each of size at most k.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if 2 * k >= n:
        raise ValueError(f"k={k} must satisfy k < n/2 for n={n}")
    a = -(-n // k)
    labels = label_elements(n, a)
    return SeparatingSystem(ground_n=n, k=k, sets=_sets_from_labels(labels, k))


def build_separating_system_capped(n: int, k: int) -> SeparatingSystem:
    """Construction variant without the k < n/2 restriction.

    Used when separating color classes, where the cap may reach ceil(n/2).
    The alphabet parameter is clamped to 2 so the labeling stays valid; set
    sizes still respect k. Degenerate n == 1 yields an empty system.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if n == 1:
        return SeparatingSystem(ground_n=1, k=k, sets=())
    a = max(2, -(-n // k))
    labels = label_elements(n, a)
    return SeparatingSystem(ground_n=n, k=k, sets=_sets_from_labels(labels, k))


def verify_separating(s: SeparatingSystem) -> Optional[tuple]:
    """None if every pair is separated, else the first violating pair.

    A pair is separated when some set contains exactly one of its elements;
    equivalently, when the two membership signatures differ.
    """
    seen: dict = {}
    for element in range(s.ground_n):
        sig = frozenset(i for i, subset in enumerate(s.sets) if element in subset)
        if sig in seen:
            return (seen[sig], element)
        seen[sig] = element
    return None


def size_upper_bound(n: int, k: int) -> int:
    """The construction's guaranteed size cap: ceil(n/k) * ceil(log_ceil(n/k) n)."""
    a = -(-n // k)
    return a * label_length(n, a)


def reference_size(n: int, k: int) -> int:
    """Best previously known feasible size, (ceil(n/k) - 1) * ceil(log_ceil(n/k) n).

    Used purely as a reference curve; no such system is constructed here.
    """
    a = -(-n // k)
    return (a - 1) * label_length(n, a)


def katona_lower_bound(n: int, k: int) -> float:
    """Entropic lower bound (n/k) * log_{ne/k} n on any (n, k) system."""
    if n <= 1:
        return 0.0
    base = n * math.e / k
    if base <= 1:
        raise ValueError(f"lower bound undefined: n*e/k = {base:.4f} <= 1")
    return (n / k) * math.log(n) / math.log(base)


def chromatic_lower_bound(chi: int, k: int) -> float:
    """The clique-number lower bound (chi/k) * log_{chi*e/k} chi.

    chi == 1 means an edgeless component; zero interventions by convention.
    """
    if chi <= 1:
        return 0.0
    base = chi * math.e / k
    if base <= 1:
        raise ValueError(f"lower bound undefined: chi*e/k = {base:.4f} <= 1")
    return (chi / k) * math.log(chi) / math.log(base)


def info_lower_bound(n: int, k: int) -> float:
    """Information-theoretic bound n / (2k) on full identification."""
    return n / (2 * k)
