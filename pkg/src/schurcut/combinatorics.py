"""Partitions, compositions, dominance order, Young tableaux and cut combinatorics.

Conventions used across the package:

* a partition is a tuple of weakly decreasing positive integers (canonical
  form carries no trailing zeros);
* a composition of n with d parts is a tuple of d non-negative integers;
* a tableau is a tuple of row tuples with integer entries >= 1; a tableau is
  standard when its weight is (1, 1, ..., 1).

All functions are pure and all returned sequences are deterministically
ordered (descending lexicographic, which refines the dominance order).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# partitions and compositions


def canonical(seq) -> Partition:
    """Validate a weakly decreasing sequence and strip trailing zeros."""
    parts = tuple(int(x) for x in seq)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def is_partition(seq) -> bool:
    try:
        canonical(seq)
    except ValueError:
        return False
    return True


def part(lam, i: int) -> int:
    """The i-th part (1-indexed), zero beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam) -> Partition:
    """Transpose of the Young diagram.  Involution: conjugate(conjugate(x)) == x."""
    lam = canonical(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominates(lam, mu) -> bool:
    """Partial-sum comparison after sorting descending.

    Defined for compositions of the same total; raises on a size mismatch.
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    a = sorted(lam, reverse=True)
    b = sorted(mu, reverse=True)
    ta = tb = 0
    for i in range(max(len(a), len(b))):
        ta += a[i] if i < len(a) else 0
        tb += b[i] if i < len(b) else 0
        if ta < tb:
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_partitions(n: int, d: int) -> tuple[Partition, ...]:
    """All partitions of n into at most d parts, descending lexicographic.

    Descending lex refines dominance: if x dominates y then x comes first.
    """
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")

    def gen(rem, rows, cap):
        if rem == 0:
            yield ()
            return
        if rows == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in gen(rem - first, rows - 1, first):
                yield (first,) + rest

    return tuple(gen(n, d, n))


@lru_cache(maxsize=None)
def enumerate_compositions(n: int, d: int) -> tuple[Composition, ...]:
    """All length-d sequences of non-negative integers summing to n."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")

    def gen(rem, slots):
        if slots == 0:
            if rem == 0:
                yield ()
            return
        for first in range(rem, -1, -1):
            for rest in gen(rem - first, slots - 1):
                yield (first,) + rest

    return tuple(gen(n, d))


def sort_to_partition(mu) -> Partition:
    """The partition obtained by rearranging the parts of a composition."""
    return canonical(sorted(mu, reverse=True))


# ---------------------------------------------------------------------------
# row and column cuts


def row_cut(lam, r: int) -> tuple[Partition, Partition]:
    """Split into the first r rows and the remainder."""
    lam = canonical(lam)
    if r < 0:
        raise ValueError("row index must be non-negative")
    return canonical(lam[:r]), canonical(lam[r:])


def col_cut(lam, c: int) -> tuple[Partition, Partition]:
    """Split into the first c columns and the remainder."""
    lam = canonical(lam)
    if c < 0:
        raise ValueError("column index must be non-negative")
    left = canonical(min(p, c) for p in lam)
    right = canonical(max(p - c, 0) for p in lam)
    return left, right


def admits_row_cut(lam, mu, r: int) -> bool:
    """True when the first r rows of both shapes hold the same number of boxes."""
    if sum(lam) != sum(mu):
        raise ValueError("shapes must have equal size")
    return sum(canonical(lam)[:r]) == sum(canonical(mu)[:r])


def admits_col_cut(lam, mu, c: int) -> bool:
    """True when the first c columns of both shapes hold the same number of boxes."""
    if sum(lam) != sum(mu):
        raise ValueError("shapes must have equal size")
    return sum(conjugate(lam)[:c]) == sum(conjugate(mu)[:c])


# ---------------------------------------------------------------------------
# cut windows: the truncation sets and their extreme elements


@dataclass(frozen=True)
class CutWindow:
    """Parameters (r, c, m): cut line after row r, column bound c, m boxes on top."""

    r: int
    c: int
    m: int

    def __post_init__(self):
        if self.r < 0 or self.c < 0 or self.m < 0:
            raise ValueError(f"window parameters must be non-negative: {self}")


def _window_member(lam: Partition, w: CutWindow) -> bool:
    if w.r == 0:
        return w.m == 0 and part(lam, 1) <= w.c
    return (
        part(lam, w.r) >= w.c >= part(lam, w.r + 1)
        and sum(lam[: w.r]) == w.m
    )


def lambda_set(n: int, d: int, w: CutWindow) -> list[Partition]:
    """Partitions of n (at most d rows) fitting the window, descending lex."""
    if w.r > d:
        return []
    return [lam for lam in enumerate_partitions(n, d) if _window_member(lam, w)]


def lambda_compositions(n: int, d: int, w: CutWindow) -> list[Composition]:
    """Compositions whose first r parts are >= c, the rest <= c, top sum m."""
    out = []
    for mu in enumerate_compositions(n, d):
        if all(mu[i] >= w.c for i in range(min(w.r, d))) and all(
            mu[j] <= w.c for j in range(w.r, d)
        ) and sum(mu[: w.r]) == w.m:
            out.append(mu)
    return out


def max_with_bounded_columns(rows: int, cap: int, z: int) -> Partition:
    """Dominance-maximal partition of z with at most `rows` parts, parts <= cap."""
    if z == 0:
        return ()
    if cap <= 0 or rows <= 0 or cap * rows < z:
        raise ValueError(f"no partition of {z} fits in a {rows} x {cap} box")
    q, rem = divmod(z, cap)
    return canonical((cap,) * q + ((rem,) if rem else ()))


def min_with_bounded_columns(rows: int, cap: int, z: int) -> Partition:
    """Dominance-minimal partition of z with at most `rows` parts, parts <= cap."""
    if z == 0:
        return ()
    if cap <= 0 or rows <= 0 or cap * rows < z:
        raise ValueError(f"no partition of {z} fits in a {rows} x {cap} box")
    q, rem = divmod(z, rows)
    return conjugate((rows,) * q + ((rem,) if rem else ()))


def sigma_gamma(n: int, d: int, w: CutWindow) -> tuple[Partition, Partition]:
    """Dominance maximum and minimum of lambda_set(n, d, w).

    Built by closed formula and always validated against the enumeration;
    a mismatch raises rather than returning a wrong extreme.
    """
    members = lambda_set(n, d, w)
    if not members:
        raise ValueError(f"empty window set for n={n}, d={d}, {w}")
    r, c, m = w.r, w.c, w.m

    top_excess = m - c * r
    sigma = list((c,) * r + max_with_bounded_columns(d - r, c, n - m))
    if top_excess:
        sigma[0] += top_excess
    sigma = canonical(sigma)

    base = (c,) * r + min_with_bounded_columns(d - r, c, n - m)
    bump = min_with_bounded_columns(r, top_excess, top_excess) if top_excess else ()
    gamma = canonical(
        tuple(
            part(base, i) + part(bump, i)
            for i in range(1, max(len(base), len(bump)) + 1)
        )
    )

    if any(not dominates(sigma, lam) for lam in members) or sigma not in members:
        raise RuntimeError(f"maximum formula failed for n={n}, d={d}, {w}")
    if any(not dominates(lam, gamma) for lam in members) or gamma not in members:
        raise RuntimeError(f"minimum formula failed for n={n}, d={d}, {w}")
    return sigma, gamma


def sigma_set(n: int, d: int, w: CutWindow) -> list[Partition]:
    """Downward closure of the window maximum: all partitions it dominates."""
    sigma, _ = sigma_gamma(n, d, w)
    return [mu for mu in enumerate_partitions(n, d) if dominates(sigma, mu)]


def gamma_set(n: int, d: int, w: CutWindow) -> list[Partition]:
    """Upward closure of the window minimum: all partitions dominating it."""
    _, gamma = sigma_gamma(n, d, w)
    return [mu for mu in enumerate_partitions(n, d) if dominates(mu, gamma)]


def _block_permutations(lam: Partition, d: int, r: int) -> set[Composition]:
    padded = tuple(lam) + (0,) * (d - len(lam))
    tops = set(itertools.permutations(padded[:r]))
    bottoms = set(itertools.permutations(padded[r:]))
    return {t + b for t in tops for b in bottoms}


def sigma_compositions(n: int, d: int, w: CutWindow) -> set[Composition]:
    """Compositions reached from the saturated partition set by permuting the
    first r rows among themselves and the last d-r rows among themselves."""
    out: set[Composition] = set()
    for lam in sigma_set(n, d, w):
        out |= _block_permutations(lam, d, w.r)
    return out


def gamma_compositions(n: int, d: int, w: CutWindow) -> set[Composition]:
    out: set[Composition] = set()
    for lam in gamma_set(n, d, w):
        out |= _block_permutations(lam, d, w.r)
    return out


def split_partition_pair(lam, mu, w: CutWindow):
    """Cut both partitions at the window's row, checking the dominance equivalence.

    Returns ((lam_top, mu_top), (lam_bottom, mu_bottom)).
    """
    lam, mu = canonical(lam), canonical(mu)
    n = sum(lam)
    d = max(len(lam), len(mu), w.r)
    members = lambda_set(n, d, w)
    if lam not in members or mu not in members:
        raise ValueError(f"{lam} or {mu} not in the window set {w}")
    lt, lb = row_cut(lam, w.r)
    mt, mb = row_cut(mu, w.r)
    if dominates(lam, mu) != (dominates(lt, mt) and dominates(lb, mb)):
        raise AssertionError(
            f"dominance does not split across the cut for {lam}, {mu}, {w}"
        )
    return (lt, mt), (lb, mb)


# ---------------------------------------------------------------------------
# tableaux


def tableau_shape(t: Tableau) -> Partition:
    return canonical(len(row) for row in t)


def tableau_weight(t: Tableau, d: int | None = None) -> Composition:
    """Content vector: entry i of the result counts occurrences of the letter i."""
    entries = [x for row in t for x in row]
    top = max(entries, default=0)
    d = top if d is None else d
    if top > d:
        raise ValueError(f"entry {top} exceeds alphabet size {d}")
    counts = [0] * d
    for x in entries:
        counts[x - 1] += 1
    return tuple(counts)


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase left to right, columns strictly increase downwards."""
    if not is_partition([len(row) for row in t]):
        return False
    for row in t:
        if any(x < 1 for x in row) or any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(t, t[1:]):
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def is_standard(t: Tableau) -> bool:
    n = sum(len(row) for row in t)
    return is_semistandard(t) and sorted(x for row in t for x in row) == list(
        range(1, n + 1)
    )


def superstandard_tableau(lam) -> Tableau:
    """Row i filled with the letter i; the unique tableau of shape and weight lam."""
    lam = canonical(lam)
    return tuple((i + 1,) * p for i, p in enumerate(lam))


def row_filled_tableau(lam) -> Tableau:
    """Rows filled with 1..n consecutively along successive rows."""
    lam = canonical(lam)
    rows = []
    nxt = 1
    for p in lam:
        rows.append(tuple(range(nxt, nxt + p)))
        nxt += p
    return tuple(rows)


@lru_cache(maxsize=None)
def enumerate_sstd(lam: Partition, mu: Composition) -> tuple[Tableau, ...]:
    """All semistandard tableaux of shape lam and weight mu.

    Ordered lexicographically by row reading.  Cells are filled row-major;
    candidate letters are tried in increasing order.
    """
    lam = canonical(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    if any(x < 0 for x in mu):
        raise ValueError(f"negative weight entry in {mu}")
    cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]
    rows = [[0] * p for p in lam]
    remaining = list(mu)
    out: list[Tableau] = []

    def fill(k: int):
        if k == len(cells):
            out.append(tuple(tuple(r) for r in rows))
            return
        i, j = cells[k]
        lo = rows[i][j - 1] if j > 0 else 1
        for letter in range(lo, len(mu) + 1):
            if remaining[letter - 1] == 0:
                continue
            if i > 0 and rows[i - 1][j] >= letter:
                continue
            rows[i][j] = letter
            remaining[letter - 1] -= 1
            fill(k + 1)
            remaining[letter - 1] += 1
        rows[i][j] = 0

    fill(0)
    return tuple(out)


def classical_kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape lam and weight mu."""
    return len(enumerate_sstd(canonical(lam), tuple(mu)))


def enumerate_std(lam) -> tuple[Tableau, ...]:
    """Standard tableaux of shape lam (entries 1..n, each once)."""
    lam = canonical(lam)
    return enumerate_sstd(lam, (1,) * sum(lam))


def entry_counts(t: Tableau, d: int) -> list[list[int]]:
    """d x d matrix whose (i, j) entry counts letters j in row i (1-indexed)."""
    if not is_semistandard(t):
        raise ValueError(f"tableau is not semistandard: {t}")
    counts = [[0] * d for _ in range(d)]
    for i, row in enumerate(t):
        for x in row:
            if x > d:
                raise ValueError(f"entry {x} exceeds alphabet size {d}")
            counts[i][x - 1] += 1
    return counts


def _row_of_entry(mu: Composition) -> list[int]:
    """For the row-filled tableau of shape mu: row number (1-indexed) of each entry."""
    rows = []
    for r, p in enumerate(mu, start=1):
        rows.extend([r] * p)
    return rows


def weight_class(t: Tableau, mu) -> Tableau | None:
    """Relabel a standard tableau by the rows of the row-filled mu-tableau.

    Entry x becomes r when x sits in row r of the row-filled tableau of
    shape mu.  Returns None when the result is not semistandard.
    """
    mu = tuple(mu)
    if not is_standard(t):
        raise ValueError(f"not a standard tableau: {t}")
    rows = _row_of_entry(mu)
    relabelled = tuple(tuple(rows[x - 1] for x in row) for row in t)
    return relabelled if is_semistandard(relabelled) else None


def weight_class_orbit(T: Tableau, mu) -> tuple[Tableau, ...]:
    """All standard tableaux of the same shape that relabel to T under mu."""
    mu = tuple(mu)
    shape = tableau_shape(T)
    return tuple(
        s for s in enumerate_std(shape) if weight_class(s, mu) == T
    )


def split_tableau(S: Tableau, r: int, m: int) -> tuple[Tableau, Tableau]:
    """Cut a tableau after row r, shifting bottom entries below the cut.

    The shift is the largest letter of the top part: r for a semistandard
    tableau whose shape and weight fit a window after row r, and m for a
    standard tableau whose first m entries occupy the top rows.  Raises when
    the letters do not separate across the cut.
    """
    top = S[:r]
    bottom = S[r:]
    shift = max((x for row in top for x in row), default=0)
    weight = tableau_weight(S)
    if all(c <= 1 for c in weight) and shift not in (0, m):
        raise ValueError(f"standard tableau does not split after row {r}: {S}")
    if any(x > shift for row in top for x in row):
        raise ValueError("unreachable")
    if any(x <= shift for row in bottom for x in row):
        raise ValueError(f"letters cross the cut after row {r} in {S}")
    shifted = tuple(tuple(x - shift for x in row) for row in bottom)
    if not (is_semistandard(top) and is_semistandard(shifted)):
        raise ValueError(f"cut pieces are not semistandard for {S}, r={r}")
    return top, shifted
