"""Quantum-group R-matrices and their compatible twisting maps.

Two families live here.  On the two-dimensional space with basis v0, v1
there is the one-parameter deformation of the flip (``phi``); on the
N-dimensional space with basis e1..eN there is its higher-dimensional
version (``bql``), the operator behind the Jimbo construction.  Both are
Laurent-polynomial in the formal parameters q and l, and both satisfy the
Yang-Baxter identity symbolically.

The maps alpha for which alpha (x) alpha commutes with bql(N) are exactly
those whose matrix has at most one nonzero entry per column, with row
indices increasing along the support.  ``SupportPattern`` is that
combinatorial object; ``enumerate_patterns`` lists all of them, and
``induced_solution`` realizes the closed form of the twisted braiding a
pattern induces.  ``brute_force_compatible_field`` is the independent
finite-field oracle: it scans every matrix over F_p and keeps those whose
compatibility residual vanishes, with no reference to the pattern
conditions.
"""

from __future__ import annotations

import itertools
from typing import Mapping

import numpy as np

from hombrax.runtime import map_chunks
from hombrax.scalars import Scalar, reduce_mod_p
from hombrax.tensor import BasedSpace, LinearMap, TensorOp, compose, lift

Q = Scalar.param("q")
L = Scalar.param("l")

PHI_SPACE = BasedSpace(("v0", "v1"))


class BadDimension(ValueError):
    """Dimension below 2 for the N-dimensional R-matrix."""


class InvalidPattern(ValueError):
    """Support data violates the column or ordering condition."""


def phi() -> TensorOp:
    """The 4x4 deformed flip on v0, v1, scaled by q*l."""
    ql = Q * L
    cols = {
        0: [(0, ql * Q ** -1)],
        1: [(1, ql * (Q ** -1 - Q)), (2, ql)],
        2: [(1, ql)],
        3: [(3, ql * Q ** -1)],
    }
    return TensorOp(PHI_SPACE, 2, cols)


def bql(N: int) -> TensorOp:
    """The N-dimensional R-matrix: diagonal q-scaling, flip, and q-q^-1 tail.

    e_i (x) e_i -> l*q e_i (x) e_i
    e_i (x) e_j -> l e_j (x) e_i                       (i < j)
    e_i (x) e_j -> l e_j (x) e_i + l(q - q^-1) e_i (x) e_j   (i > j)
    """
    if N < 2:
        raise BadDimension(f"need N >= 2, got {N}")
    space = BasedSpace.of_dim(N)
    beta = L * (Q - Q ** -1)
    cols = {}
    for i in range(N):
        for j in range(N):
            col = i * N + j
            if i == j:
                cols[col] = [(col, L * Q)]
            elif i < j:
                cols[col] = [(j * N + i, L)]
            else:
                cols[col] = [(j * N + i, L), (col, beta)]
    return TensorOp(space, 2, cols)


def phi_equals_bql_swapped() -> bool:
    """Check phi against bql(2) with q -> q^-1, l -> q*l and the basis swapped."""
    b = bql(2).map_scalars(lambda s: s.substitute({"q": Q ** -1, "l": Q * L}))
    swap = LinearMap(PHI_SPACE, [[0, 1], [1, 0]])
    conj = compose(lift(swap, 2), compose(b.with_space(PHI_SPACE), lift(swap, 2)))
    return conj == phi()


# ---------------------------------------------------------------------------
# Support patterns and the compatible twisting maps.
# ---------------------------------------------------------------------------

class SupportPattern:
    """Columns 1..N each carrying at most one row, rows increasing on the support."""

    __slots__ = ("N", "column_rows")

    def __init__(self, N: int, column_rows: Mapping[int, int]):
        items = tuple(sorted(column_rows.items()))
        for col, row in items:
            if not (1 <= col <= N and 1 <= row <= N):
                raise InvalidPattern(f"entry ({row}, {col}) outside 1..{N}")
        for (c1, r1), (c2, r2) in zip(items, items[1:]):
            if r1 >= r2:
                raise InvalidPattern(
                    f"rows must increase along the support: k({c1}) = {r1}, k({c2}) = {r2}")
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "column_rows", items)

    def __setattr__(self, name, value):
        raise AttributeError("SupportPattern is immutable")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.column_rows)

    def row(self, col: int) -> int | None:
        for c, r in self.column_rows:
            if c == col:
                return r
        return None

    def contains(self, other: "SupportPattern") -> bool:
        mine = dict(self.column_rows)
        return (self.N == other.N
                and all(mine.get(c) == r for c, r in other.column_rows))

    def __eq__(self, other):
        return (isinstance(other, SupportPattern) and self.N == other.N
                and self.column_rows == other.column_rows)

    def __hash__(self):
        return hash((self.N, self.column_rows))

    def __repr__(self):
        rows = {c: r for c, r in self.column_rows}
        return f"SupportPattern(N={self.N}, k={rows})"

    def to_json_dict(self) -> dict:
        return {"N": self.N, "k": {str(c): r for c, r in self.column_rows}}

    @staticmethod
    def from_json_dict(data: Mapping) -> "SupportPattern":
        return SupportPattern(int(data["N"]),
                              {int(c): int(r) for c, r in data["k"].items()})


def enumerate_patterns(N: int) -> list[SupportPattern]:
    """All (support, strictly increasing row map) pairs, duplicate-free."""
    if N < 1:
        raise BadDimension(f"need N >= 1, got {N}")
    out = []
    for size in range(N + 1):
        for cols in itertools.combinations(range(1, N + 1), size):
            for rows in itertools.combinations(range(1, N + 1), size):
                out.append(SupportPattern(N, dict(zip(cols, rows))))
    return out


def maximal_patterns(N: int) -> list[SupportPattern]:
    """Patterns not contained in any larger one: the maximal shape list."""
    pats = enumerate_patterns(N)
    return [p for p in pats
            if not any(q is not p and q.contains(p) for q in pats)]


def group_patterns_by_shape(N: int) -> dict[SupportPattern, list[SupportPattern]]:
    """Assign every pattern to the maximal shapes containing it."""
    pats = enumerate_patterns(N)
    shapes = maximal_patterns(N)
    return {shape: [p for p in pats if shape.contains(p)] for shape in shapes}


class CompatibleAlpha:
    """A support pattern dressed with its nonzero column entries."""

    __slots__ = ("pattern", "values")

    def __init__(self, pattern: SupportPattern, values: Mapping[int, Scalar]):
        vals = {c: (v if isinstance(v, Scalar) else Scalar.rational(v))
                for c, v in values.items()}
        if set(vals) != set(pattern.support):
            raise InvalidPattern(
                f"values keyed by {sorted(vals)}, support is {pattern.support}")
        if any(v.is_zero() for v in vals.values()):
            raise InvalidPattern("support entries must be nonzero")
        object.__setattr__(self, "pattern", pattern)
        object.__setattr__(self, "values", tuple(sorted(vals.items())))

    def __setattr__(self, name, value):
        raise AttributeError("CompatibleAlpha is immutable")

    @staticmethod
    def symbolic(pattern: SupportPattern, prefix: str = "a") -> "CompatibleAlpha":
        return CompatibleAlpha(
            pattern, {c: Scalar.param(f"{prefix}{c}") for c in pattern.support})

    def value(self, col: int) -> Scalar:
        for c, v in self.values:
            if c == col:
                return v
        return Scalar.zero()

    def to_linear_map(self, space: BasedSpace | None = None) -> LinearMap:
        N = self.pattern.N
        space = space or BasedSpace.of_dim(N)
        rows = [[Scalar.zero()] * N for _ in range(N)]
        for c, v in self.values:
            rows[self.pattern.row(c) - 1][c - 1] = v
        return LinearMap(space, rows)

    def __repr__(self):
        return f"CompatibleAlpha({self.pattern!r}, {dict((c, str(v)) for c, v in self.values)})"


def pattern_of(alpha: LinearMap) -> SupportPattern | None:
    """The support pattern of a matrix, or None if the conditions fail."""
    N = alpha.dim
    column_rows = {}
    for i in range(N):
        nonzero = [k for k in range(N) if not alpha.rows[k][i].is_zero()]
        if len(nonzero) > 1:
            return None
        if nonzero:
            column_rows[i + 1] = nonzero[0] + 1
    try:
        return SupportPattern(N, column_rows)
    except InvalidPattern:
        return None


def check_compatible(alpha: LinearMap, N: int | None = None) -> bool:
    """Whether alpha's support satisfies the two classification conditions."""
    if N is not None and alpha.dim != N:
        raise BadDimension(f"alpha is {alpha.dim}x{alpha.dim}, expected {N}")
    return pattern_of(alpha) is not None


def induced_solution(alpha: CompatibleAlpha) -> TensorOp:
    """Closed form of the braiding induced by a compatible alpha.

    e_i (x) e_i -> l*q*a_i^2 e_k(i) (x) e_k(i)
    e_i (x) e_j -> l*a_i*a_j e_k(j) (x) e_k(i)                      (i < j)
    e_i (x) e_j -> l*a_i*a_j (e_k(j) (x) e_k(i)
                              + (q - q^-1) e_k(i) (x) e_k(j))       (i > j)

    Columns outside the support are zero.  Structurally equal to
    twist(bql(N), alpha.to_linear_map()).
    """
    N = alpha.pattern.N
    if N < 2:
        raise BadDimension(f"need N >= 2, got {N}")
    space = BasedSpace.of_dim(N)
    beta = Q - Q ** -1
    cols: dict[int, list[tuple[int, Scalar]]] = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            col = (i - 1) * N + (j - 1)
            ai, aj = alpha.value(i), alpha.value(j)
            if ai.is_zero() or aj.is_zero():
                cols[col] = []
                continue
            ki, kj = alpha.pattern.row(i) - 1, alpha.pattern.row(j) - 1
            if i == j:
                cols[col] = [(ki * N + ki, L * Q * ai * ai)]
            elif i < j:
                cols[col] = [(kj * N + ki, L * ai * aj)]
            else:
                cols[col] = [(kj * N + ki, L * ai * aj),
                             (ki * N + kj, L * ai * aj * beta)]
    return TensorOp(space, 2, cols)


# ---------------------------------------------------------------------------
# Finite-field brute force: the accept set of the compatibility residual.
# ---------------------------------------------------------------------------

def _bql_dense_mod_p(N: int, p: int, q_res: int, lam_res: int) -> np.ndarray:
    op = bql(N).instantiate({"q": q_res, "l": lam_res})
    dense = np.zeros((N * N, N * N), dtype=np.int64)
    for j, col in enumerate(op.columns):
        for r, s in col:
            dense[r, j] = reduce_mod_p(s.constant_value(), p).value
    return dense


def _digit_matrices(idx: np.ndarray, N: int, p: int) -> np.ndarray:
    """Row-major base-p digits of candidate indices as (count, N, N) matrices."""
    n2 = N * N
    A = np.empty((idx.shape[0], n2), dtype=np.int64)
    for e in range(n2):
        A[:, e] = (idx // p ** (n2 - 1 - e)) % p
    return A.reshape(-1, N, N)


def brute_force_compatible_field(N: int, p: int, q_res: int = 2,
                                 lam_res: int = 1,
                                 chunk: int = 200_000) -> set[tuple[int, ...]]:
    """All matrices over F_p whose compatibility residual with bql(N) vanishes.

    Works directly from the dense residual, in two stages: candidates are
    first filtered by the residual restricted to the diagonal input columns
    e_i (x) e_i (a necessary condition computed generically from B's dense
    matrix, not from the pattern conditions), then survivors get the full
    p-modular check (A (x) A) B = B (A (x) A) on every column.
    """
    B = _bql_dense_mod_p(N, p, q_res, lam_res)
    nnz = [(r, s, int(B[r, s])) for r in range(N * N) for s in range(N * N)
           if B[r, s]]
    total = p ** (N * N)

    def scan(start: int) -> np.ndarray:
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        A = _digit_matrices(idx, N, p)
        # X[c, u, v, i] = A[c,u,i] A[c,v,i]: the kron column of input (i, i).
        X = np.einsum("cui,cvi->cuvi", A, A) % p
        # t2[c, r, i] = (B after A (x) A)(e_i (x) e_i) at output row r = (ru, rv).
        t1 = np.zeros((idx.shape[0], N, N, N), dtype=np.int64)
        t2 = np.zeros_like(t1)
        for r, s, val in nnz:
            u, v = divmod(s, N)
            ru, rv = divmod(r, N)
            t2[:, ru, rv, :] += val * X[:, u, v, :]
        # t1[c, (k, l), i] = (A (x) A after B)(e_i (x) e_i) at output (k, l).
        for i in range(N):
            for s in range(N * N):
                val = int(B[s, i * N + i])
                if not val:
                    continue
                u, v = divmod(s, N)
                t1[:, :, :, i] += val * np.einsum("ck,cl->ckl", A[:, :, u], A[:, :, v])
        ok = ~((t1 - t2) % p).any(axis=(1, 2, 3))
        return A[ok]

    survivors = map_chunks(scan, range(0, total, chunk))
    A = np.concatenate([s for s in survivors if s.size] or [np.zeros((0, N, N), dtype=np.int64)])
    if not A.shape[0]:
        return set()
    # Full residual on the survivors.
    K = np.einsum("cki,clj->cklij", A, A).reshape(A.shape[0], N * N, N * N) % p
    R = (K @ B - B @ K) % p
    ok = ~R.any(axis=(1, 2))
    return {tuple(int(x) for x in mat.reshape(-1)) for mat in A[ok]}


def pattern_accept_set_field(N: int, p: int) -> set[tuple[int, ...]]:
    """All F_p matrices generated by the patterns with nonzero entries."""
    out = set()
    for pat in enumerate_patterns(N):
        support = pat.support
        for vals in itertools.product(range(1, p), repeat=len(support)):
            mat = [[0] * N for _ in range(N)]
            for c, v in zip(support, vals):
                mat[pat.row(c) - 1][c - 1] = v
            out.add(tuple(x for row in mat for x in row))
    return out
