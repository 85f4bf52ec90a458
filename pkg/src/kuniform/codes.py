"""Linear codes, exact distance data, and the code-to-state construction.

A code over GF(p^r) is held as a full-row-rank generator matrix of
integer-encoded field elements.  The uniform superposition over the
codewords of a p-ary code is k-uniform as soon as both the minimum distance
and the dual minimum distance exceed k; both distances are always recomputed
by codeword enumeration before a state is issued -- externally supplied
distances are never trusted for certificates.

Extension-field codes enter through concatenation: a trace-orthogonal basis
turns each GF(p^r) symbol into r p-ary symbols (plain expansion for the
code, weight-scaled expansion for its dual), and the two expansions are dual
to each other over F_p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .fields import GF, TraceOrthBasis, get_field, null_space_over_field, rref_over_field
from .states import PureState, TooLargeError

DEFAULT_MAX_CODEWORDS = 2**24


class HypothesisError(ValueError):
    """A distance hypothesis failed; records which side fell short."""

    def __init__(self, side: str, have: int, need: int):
        super().__init__(f"{side} distance {have} is below the required {need}")
        self.side = side
        self.have = have
        self.need = need


@dataclass(eq=False)
class LinearCode:
    """A linear [n, m] code over GF(p^r), given by a generator matrix."""

    field: GF
    generator: np.ndarray

    def __post_init__(self):
        g = np.atleast_2d(np.asarray(self.generator, dtype=np.int64))
        if g.size == 0:
            g = g.reshape(0, g.shape[1] if g.ndim == 2 and g.shape[1] else 0)
        if ((g < 0) | (g >= self.field.q)).any():
            raise ValueError("generator entries must be field elements")
        self.generator = g
        if g.shape[0]:
            _, pivots = rref_over_field(self.field, g)
            if len(pivots) != g.shape[0]:
                raise ValueError("generator rows are not independent")

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def m(self) -> int:
        return self.generator.shape[0]

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def r(self) -> int:
        return self.field.r

    def canonical_rows(self) -> tuple:
        rows, _ = rref_over_field(self.field, self.generator) if self.m else ([], [])
        return tuple(tuple(row) for row in rows)

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.m}] over {self.field})"


def codewords(code: LinearCode, max_codewords: int = DEFAULT_MAX_CODEWORDS):
    """Iterate all q^m codewords as integer-encoded numpy rows."""
    f = code.field
    total = f.q**code.m
    if total > max_codewords:
        raise TooLargeError(
            f"{total} codewords exceed the enumeration budget {max_codewords}",
            estimate=total,
            ceiling=max_codewords,
        )
    if code.m == 0:
        yield np.zeros(code.n, dtype=np.int64)
        return
    if f.r == 1:
        g = code.generator
        chunk = 1 << 14
        idx = np.arange(total, dtype=np.int64)
        for s in range(0, total, chunk):
            block = idx[s : s + chunk]
            msgs = np.empty((block.size, code.m), dtype=np.int64)
            for t in range(code.m):
                msgs[:, t] = (block // f.p ** (code.m - 1 - t)) % f.p
            words = (msgs @ g) % f.p
            yield from words
    else:
        for msg in itertools.product(range(f.q), repeat=code.m):
            word = np.zeros(code.n, dtype=np.int64)
            for c, row in zip(msg, code.generator):
                if c:
                    for t in range(code.n):
                        word[t] = f.add(int(word[t]), f.mul(c, int(row[t])))
            yield word


def min_distance(
    code: LinearCode, max_codewords: int = DEFAULT_MAX_CODEWORDS, workers: int = 1
) -> int:
    """Minimum Hamming weight over nonzero codewords, by full enumeration.

    Stops early only when a weight-1 codeword appears (no weight can be
    lower).  With workers > 1 the message space is split into index ranges
    whose minima are folded together, so the result does not depend on the
    worker count.  Raises on the zero code, which has no nonzero codeword.
    """
    if code.m == 0:
        raise ValueError("the zero code has no minimum distance")
    f = code.field
    total = f.q**code.m
    if workers > 1 and f.r == 1 and total > 1 << 12:
        if total > max_codewords:
            raise TooLargeError(
                f"{total} codewords exceed the enumeration budget {max_codewords}",
                estimate=total,
                ceiling=max_codewords,
            )
        from concurrent.futures import ThreadPoolExecutor

        block = -(-total // workers)
        spans = [(s, min(block, total - s)) for s in range(0, total, block)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            minima = list(pool.map(lambda sp: _range_min_weight(code, *sp), spans))
        return min(m for m in minima if m is not None)
    best = None
    for word in codewords(code, max_codewords):
        w = int(np.count_nonzero(word))
        if w == 0:
            continue
        if best is None or w < best:
            best = w
            if best == 1:
                break
    return best


def _range_min_weight(code: LinearCode, start: int, count: int) -> int | None:
    f, g = code.field, code.generator
    best = None
    chunk = 1 << 14
    for s in range(start, start + count, chunk):
        block = np.arange(s, min(s + chunk, start + count), dtype=np.int64)
        msgs = np.empty((block.size, code.m), dtype=np.int64)
        for t in range(code.m):
            msgs[:, t] = (block // f.p ** (code.m - 1 - t)) % f.p
        words = (msgs @ g) % f.p
        weights = np.count_nonzero(words, axis=1)
        nz = weights[weights > 0]
        if nz.size:
            local = int(nz.min())
            if best is None or local < best:
                best = local
    return best


def dual_code(code: LinearCode) -> LinearCode:
    """Euclidean dual: null space of the generator under sum(u_i v_i)."""
    f = code.field
    if code.m == 0:
        return LinearCode(f, np.eye(code.n, dtype=np.int64))
    basis = null_space_over_field(f, code.generator)
    g = np.array(basis, dtype=np.int64).reshape(len(basis), code.n)
    return LinearCode(f, g)


def is_self_dual(code: LinearCode) -> bool:
    return 2 * code.m == code.n and code.canonical_rows() == dual_code(code).canonical_rows()


def same_code(a: LinearCode, b: LinearCode) -> bool:
    return a.field == b.field and a.canonical_rows() == b.canonical_rows()


def shorten_last(code: LinearCode) -> LinearCode:
    """Restrict to codewords ending in 0 and delete that coordinate."""
    f = code.field
    g = [list(map(int, row)) for row in code.generator]
    pivot = next((i for i, row in enumerate(g) if row[-1]), None)
    if pivot is None:
        raise ValueError("all codewords already end in 0")
    prow = g[pivot]
    inv = f.inv(prow[-1])
    out = []
    for i, row in enumerate(g):
        if i == pivot:
            continue
        if row[-1]:
            c = f.mul(row[-1], inv)
            row = [f.sub(x, f.mul(c, y)) for x, y in zip(row, prow)]
        out.append(row[:-1])
    g2 = np.array(out, dtype=np.int64).reshape(len(out), code.n - 1)
    return LinearCode(f, g2)


def puncture_last(code: LinearCode) -> LinearCode:
    """Delete the last coordinate of every codeword."""
    f = code.field
    g = code.generator[:, :-1]
    rows, pivots = rref_over_field(f, g) if code.m else ([], [])
    kept = [rows[i] for i in range(len(pivots))]
    g2 = np.array(kept, dtype=np.int64).reshape(len(kept), code.n - 1)
    return LinearCode(f, g2)


def expand_code(code: LinearCode, basis: TraceOrthBasis, which: str = "primal") -> LinearCode:
    """Rewrite a GF(p^r) code as a p-ary [rn, rm] code via the basis.

    which="primal" writes each symbol's coordinate vector (b_1, ..., b_r)
    over the basis; which="dual" scales coordinate i by the basis weight
    Tr(basis_i^2).  The dual-weighted expansion of the dual code is the
    F_p-dual of the plain expansion of the code.
    """
    f = code.field
    if basis.field != f:
        raise ValueError(f"basis is over {basis.field}, code over {f}")
    if which not in ("primal", "dual"):
        raise ValueError(f"unknown expansion {which!r}")
    p, r = f.p, f.r
    # change of basis: polynomial coordinates -> basis coordinates
    bmat = np.array([f.coeffs_of(b) for b in basis.basis], dtype=np.int64).T
    binv = _invert_mod_p(bmat, p)
    weights = np.array(basis.weights, dtype=np.int64)

    def expand_symbol(u: int) -> np.ndarray:
        coeffs = np.array(f.coeffs_of(u), dtype=np.int64)
        b = (binv @ coeffs) % p
        return (b * weights) % p if which == "dual" else b

    rows = []
    for grow in code.generator if code.m else []:
        for alpha in basis.basis:
            word = [f.mul(alpha, int(u)) for u in grow]
            rows.append(np.concatenate([expand_symbol(u) for u in word]))
    g = np.array(rows, dtype=np.int64).reshape(len(rows), r * code.n)
    return LinearCode(get_field(p), g)


def _invert_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    n = mat.shape[0]
    aug = np.concatenate([mat % p, np.eye(n, dtype=np.int64)], axis=1)
    from .modular import rref_mod_p

    red, pivots = rref_mod_p(aug, p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular mod p")
    return red[:, n:]


def reed_solomon(field: GF, n: int, m: int) -> LinearCode:
    """Evaluation code of polynomials of degree < m at n fixed field points.

    Points follow the field's deterministic enumeration (0, 1, then
    generator powers), so the generator matrix is identical across runs.
    The code is MDS with distance n - m + 1; its dual is MDS as well.
    """
    if n > field.q:
        raise ValueError(f"length {n} exceeds field size {field.q}")
    if not 0 <= m <= n:
        raise ValueError(f"dimension {m} out of range")
    points = field.eval_point_order()[:n]
    g = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        for j, pt in enumerate(points):
            g[i, j] = field.pow(pt, i)
    return LinearCode(field, g)


def certified_k(
    code: LinearCode, max_codewords: int = DEFAULT_MAX_CODEWORDS, workers: int = 1
) -> tuple[int, int, int]:
    """(k, distance, dual distance) with k = min of both distances minus 1."""
    dist = min_distance(code, max_codewords, workers=workers)
    ddist = min_distance(dual_code(code), max_codewords, workers=workers)
    return min(dist, ddist) - 1, dist, ddist


def state_from_code(
    code: LinearCode, k: int, max_codewords: int = DEFAULT_MAX_CODEWORDS, workers: int = 1
) -> PureState:
    """Uniform superposition over the codewords of a p-ary code.

    Requires (and recomputes) distance >= k+1 on both the code and its dual;
    the state is unnormalized with amplitude 1 on each codeword.
    """
    if code.r != 1:
        raise ValueError("state construction needs a prime-field code; expand it first")
    if code.m == 0:
        raise ValueError("the zero code gives a product state, not accepted here")
    dist = min_distance(code, max_codewords, workers=workers)
    if dist < k + 1:
        raise HypothesisError("code", dist, k + 1)
    ddist = min_distance(dual_code(code), max_codewords, workers=workers)
    if ddist < k + 1:
        raise HypothesisError("dual", ddist, k + 1)
    phases = {tuple(map(int, w)): 0 for w in codewords(code, max_codewords)}
    return PureState.from_phases(code.n, code.p, phases)
