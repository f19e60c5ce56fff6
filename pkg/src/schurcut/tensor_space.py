"""Elementary tensors, place permutations and the Murphy basis of tensor space.

A tensor is a finitely supported mapping from index words to integer
coefficients: ``{(i1, ..., in): coeff}`` with letters in ``1..d``.  Zero
coefficients are never stored.  Over GF(p) the same dictionaries hold
canonical residues; every operation takes an optional modulus ``p``.

Permutations are tuples ``s`` with ``s[a]`` the image of position ``a``
(0-indexed).  They act on words on the right by moving the letter at
position ``a`` to position ``s[a]``; the product ``perm_compose(s, u)``
means "apply s, then u", which makes the action a right action.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache

from .combinatorics import (
    Composition,
    Partition,
    Tableau,
    canonical,
    enumerate_partitions,
    enumerate_sstd,
    enumerate_std,
    row_filled_tableau,
    tableau_weight,
    weight_class_orbit,
)
from .linalg import GFpSolver, bareiss_det, invert_integer_matrix

Word = tuple[int, ...]
Vec = dict[Word, int]

MurphyIndex = tuple[Partition, Tableau, Tableau]  # (shape, semistandard, standard)


# ---------------------------------------------------------------------------
# words and vectors


def word_weight(w: Word, d: int) -> Composition:
    counts = [0] * d
    for letter in w:
        counts[letter - 1] += 1
    return tuple(counts)


def normalized(v: Vec, p: int | None = None) -> Vec:
    if p is None:
        return {w: c for w, c in v.items() if c}
    return {w: cp for w, c in v.items() if (cp := c % p)}


def vec_add(u: Vec, v: Vec, p: int | None = None) -> Vec:
    out = dict(u)
    for w, c in v.items():
        out[w] = out.get(w, 0) + c
    return normalized(out, p)


def vec_scale(a: int, v: Vec, p: int | None = None) -> Vec:
    return normalized({w: a * c for w, c in v.items()}, p)


def vec_weight(v: Vec, d: int) -> Composition:
    """Common weight of all words; raises on inhomogeneous input."""
    weights = {word_weight(w, d) for w in v}
    if len(weights) != 1:
        raise ValueError(f"vector is not weight homogeneous: {sorted(weights)}")
    return weights.pop()


def dump(v: Vec) -> str:
    """One line per word, ``i1i2...in: coeff``, sorted lexicographically."""
    sep = "," if any(letter > 9 for w in v for letter in w) else ""
    return "\n".join(
        f"{sep.join(str(x) for x in w)}: {v[w]}" for w in sorted(v)
    )


# ---------------------------------------------------------------------------
# permutations


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def perm_compose(s, u) -> tuple[int, ...]:
    """Apply s first, then u."""
    return tuple(u[s[a]] for a in range(len(s)))


def perm_inverse(s) -> tuple[int, ...]:
    inv = [0] * len(s)
    for a, b in enumerate(s):
        inv[b] = a
    return tuple(inv)


def permute_word(w: Word, s) -> Word:
    out = [0] * len(w)
    for a, letter in enumerate(w):
        out[s[a]] = letter
    return tuple(out)


def permute(v: Vec, s, p: int | None = None) -> Vec:
    out: Vec = {}
    for w, c in v.items():
        nw = permute_word(w, s)
        out[nw] = out.get(nw, 0) + c
    return normalized(out, p)


def tableau_perm(t: Tableau) -> tuple[int, ...]:
    """The permutation carrying the row-filled tableau of t's shape onto t.

    Entry e of the row-filled tableau sits in some box; the permutation sends
    e to the entry of t in that box (0-indexed tuple).
    """
    n = sum(len(row) for row in t)
    base = row_filled_tableau(tuple(len(row) for row in t))
    d = [0] * n
    for base_row, t_row in zip(base, t):
        for e, x in zip(base_row, t_row):
            d[e - 1] = x - 1
    return tuple(d)


# ---------------------------------------------------------------------------
# the Murphy basis


def row_reading_word(T: Tableau) -> Word:
    return tuple(x for row in T for x in row)


def elementary(T: Tableau) -> Vec:
    """Basis tensor whose subscripts read T along successive rows."""
    return {row_reading_word(T): 1}


def _multiset_perms(items):
    counts = Counter(items)
    keys = sorted(counts)
    n = len(items)
    prefix: list[int] = []

    def rec():
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                yield from rec()
                prefix.pop()
                counts[k] += 1

    yield from rec()


def young_orbit_words(S: Tableau):
    """Orbit of the row reading of S under place permutations within rows."""
    row_perm_lists = [sorted(_multiset_perms(row)) for row in S]
    for combo in itertools.product(*row_perm_lists):
        yield tuple(x for block in combo for x in block)


def rho(S: Tableau, t: Tableau) -> Vec:
    """Murphy vector: row-stabilizer orbit sum of S, moved by t's permutation.

    All coefficients are 1; the support has one word per orbit element.
    """
    if canonical(len(r) for r in S) != canonical(len(r) for r in t):
        raise ValueError("shape mismatch between the two tableaux")
    d_t = tableau_perm(t)
    return {permute_word(w, d_t): 1 for w in young_orbit_words(S)}


def rho_sum(S: Tableau, T: Tableau, mu: Composition) -> Vec:
    """Sum of rho(S, t) over standard t in the weight class of T under mu."""
    out: Vec = {}
    for t in weight_class_orbit(T, mu):
        for w, c in rho(S, t).items():
            out[w] = out.get(w, 0) + c
    return normalized(out)


@lru_cache(maxsize=None)
def murphy_block(n: int, d: int, mu: Composition) -> tuple[tuple[MurphyIndex, tuple], ...]:
    """All Murphy vectors of weight mu, in a fixed dominance-compatible order.

    Returns ((shape, S, t), vector-as-sorted-item-tuple) pairs; the count
    equals the weight-space dimension n! / prod(mu_i!).
    """
    if len(mu) != d or sum(mu) != n:
        raise ValueError(f"{mu} is not a composition of {n} with {d} parts")
    out = []
    for lam in enumerate_partitions(n, d):
        for S in enumerate_sstd(lam, mu):
            for t in enumerate_std(lam):
                vec = rho(S, t)
                out.append(((lam, S, t), tuple(sorted(vec.items()))))
    return tuple(out)


@lru_cache(maxsize=None)
def block_words(n: int, d: int, mu: Composition) -> tuple[Word, ...]:
    """Sorted list of all words of weight mu."""
    return tuple(sorted(_multiset_perms(
        [letter for letter, count in enumerate(mu, start=1) for _ in range(count)]
    )))


def _dense(v: Vec, index: dict[Word, int]) -> list[int]:
    out = [0] * len(index)
    for w, c in v.items():
        out[index[w]] = c
    return out


@lru_cache(maxsize=None)
def _block_data(n: int, d: int, mu: Composition):
    words = block_words(n, d, mu)
    index = {w: i for i, w in enumerate(words)}
    basis = murphy_block(n, d, mu)
    if len(basis) != len(words):
        raise AssertionError(
            f"Murphy count {len(basis)} != weight-space dimension {len(words)}"
        )
    columns = [_dense(dict(vec), index) for _, vec in basis]
    return words, index, [label for label, _ in basis], columns


@lru_cache(maxsize=None)
def _int_inverse(n: int, d: int, mu: Composition):
    _, _, _, columns = _block_data(n, d, mu)
    matrix = [list(col) for col in zip(*columns)]  # rows = words
    inv, det = invert_integer_matrix(matrix)
    return inv, det


@lru_cache(maxsize=None)
def _gfp_solver(n: int, d: int, mu: Composition, p: int) -> GFpSolver:
    _, _, _, columns = _block_data(n, d, mu)
    return GFpSolver(columns, p)


def murphy_block_det(n: int, d: int, mu: Composition) -> int:
    """Determinant of the change of basis from Murphy vectors to words."""
    _, _, _, columns = _block_data(n, d, mu)
    return bareiss_det([list(col) for col in zip(*columns)])


def to_murphy(n: int, d: int, v: Vec, p: int | None = None) -> dict[MurphyIndex, int]:
    """Exact Murphy coordinates of a weight-homogeneous vector.

    Over the integers the solve uses the cached integral inverse (the change
    of basis is unimodular); over GF(p) a cached row-reduction.  The zero
    vector returns an empty mapping.
    """
    v = normalized(v, p)
    if not v:
        return {}
    mu = vec_weight(v, d)
    _, index, labels, _ = _block_data(n, d, mu)
    dense = _dense(v, index)
    if p is None:
        inv, _ = _int_inverse(n, d, mu)
        coords = [sum(a * b for a, b in zip(row, dense)) for row in inv]
    else:
        coords = [int(x) for x in _gfp_solver(n, d, mu, p).solve(dense)]
    return {labels[i]: c for i, c in enumerate(coords) if c}


def from_murphy(n: int, d: int, coords: dict[MurphyIndex, int], p: int | None = None) -> Vec:
    """Inverse of to_murphy: rebuild the tensor from Murphy coordinates."""
    out: Vec = {}
    for (lam, S, t), c in coords.items():
        for w, cw in rho(S, t).items():
            out[w] = out.get(w, 0) + c * cw
    return normalized(out, p)
