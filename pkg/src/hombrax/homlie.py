"""Hom-Lie algebras by structure constants and their braidings.

A Hom-Lie algebra is a based space with a skew bracket, given by structure
constants c[i][j][k] (the x_k coefficient of [x_i, x_j]), and a twisting
self-map alpha that is multiplicative for the bracket and satisfies the
twisted Jacobi identity

    [[x, y], alpha(z)] + [[z, x], alpha(y)] + [[y, z], alpha(x)] = 0.

Three classical 3-dimensional algebras are built in (the Heisenberg
algebra, the dual of sl(2) alias the 1+1 Poincare algebra, and sl(2)),
together with the complete families of their Lie-algebra self-morphisms.
Twisting a classical algebra along such a morphism (``yau_twist``) yields a
Hom-Lie algebra, and every Hom-Lie algebra L gives a braiding on the
one-dimensional extension C (+) L which solves the twisted braid identity.

The family lists are backed by exhaustive finite-field oracles
(``classify_*_finite_field``) that scan every matrix over F_p and confirm
that the families cover all morphism solutions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from hombrax.runtime import map_chunks
from hombrax.scalars import RationalLike, Scalar, reduce_mod_p, is_odd_prime
from hombrax.tensor import (
    BasedSpace,
    DimMismatch,
    LinearMap,
    Singular,
    SymbolicNotMonomialInvertible,
    TensorOp,
)


class NotAMorphism(ValueError):
    """The map does not preserve the bracket."""


class ConstraintViolated(ValueError):
    """Family parameters violate the stated constraints."""


class UnclassifiedMorphismFound(ValueError):
    """A finite-field morphism fell outside every family."""


class InvariantViolated(ValueError):
    """Structure fails skewness, multiplicativity, or the twisted Jacobi identity."""


class AlphaSingular(ValueError):
    """The twisting map is not invertible."""


Vector = tuple[Scalar, ...]


def _coerce_scalar(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar.rational(x)


class HomLieAlgebra:
    """Based space + skew structure constants + twisting map."""

    __slots__ = ("labels", "brackets", "alpha")

    def __init__(self, labels: Sequence[str],
                 brackets: Sequence[Sequence[Sequence[Scalar | RationalLike]]],
                 alpha: LinearMap):
        labels = tuple(labels)
        n = len(labels)
        if alpha.dim != n:
            raise DimMismatch(f"alpha is {alpha.dim}-dim, algebra is {n}-dim")
        c = tuple(tuple(tuple(_coerce_scalar(brackets[i][j][k]) for k in range(n))
                        for j in range(n)) for i in range(n))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "brackets", c)
        object.__setattr__(self, "alpha", alpha)

    def __setattr__(self, name, value):
        raise AttributeError("HomLieAlgebra is immutable")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def space(self) -> BasedSpace:
        return BasedSpace(self.labels)

    def bracket_vec(self, i: int, j: int) -> Vector:
        return self.brackets[i][j]

    def bracket_of(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        n = self.dim
        out = [Scalar.zero()] * n
        for i in range(n):
            if u[i].is_zero():
                continue
            for j in range(n):
                if v[j].is_zero():
                    continue
                coef = u[i] * v[j]
                for k in range(n):
                    ck = self.brackets[i][j][k]
                    if not ck.is_zero():
                        out[k] = out[k] + coef * ck
        return tuple(out)

    def is_skew(self) -> bool:
        n = self.dim
        return all(self.brackets[i][j][k] == -self.brackets[j][i][k]
                   for i in range(n) for j in range(n) for k in range(n))

    def validate(self) -> None:
        if not self.is_skew():
            raise InvariantViolated("bracket is not skew-symmetric")
        for (i, j), res in multiplicativity_residuals(self):
            if any(not s.is_zero() for s in res):
                raise InvariantViolated(
                    f"alpha is not multiplicative at ({self.labels[i]}, {self.labels[j]})")
        for triple, res in hom_jacobi_residual(self):
            if any(not s.is_zero() for s in res):
                raise InvariantViolated(f"twisted Jacobi fails at {triple}")

    def __eq__(self, other):
        if not isinstance(other, HomLieAlgebra):
            return NotImplemented
        return (self.labels == other.labels and self.brackets == other.brackets
                and self.alpha == other.alpha)

    def __repr__(self):
        return f"HomLieAlgebra(labels={self.labels})"


def lie_algebra(labels: Sequence[str],
                bracket_map: Mapping[tuple[int, int], Mapping[int, RationalLike | Scalar]],
                alpha: LinearMap | None = None) -> HomLieAlgebra:
    """Build an algebra from sparse i<j brackets; skew part is filled in."""
    n = len(labels)
    c = [[[Scalar.zero() for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for (i, j), vec in bracket_map.items():
        if i == j:
            raise InvariantViolated(f"[x_{i}, x_{i}] must be zero")
        for k, coef in vec.items():
            s = _coerce_scalar(coef)
            c[i][j][k] = c[i][j][k] + s
            c[j][i][k] = c[j][i][k] - s
    space = BasedSpace(labels)
    return HomLieAlgebra(labels, c, alpha or LinearMap.identity(space))


def heisenberg() -> HomLieAlgebra:
    """[Y, Z] = X, everything else zero."""
    return lie_algebra(("X", "Y", "Z"), {(1, 2): {0: 1}})


def sl2_star() -> HomLieAlgebra:
    """[Y, Z] = 0, [Y, X] = Y/2, [Z, X] = Z/2 (the 1+1 Poincare algebra)."""
    half = Fraction(1, 2)
    return lie_algebra(("X", "Y", "Z"), {(1, 0): {1: half}, (2, 0): {2: half}})


def sl2() -> HomLieAlgebra:
    """[X, Y] = 2Y, [X, Z] = -2Z, [Y, Z] = X."""
    return lie_algebra(("X", "Y", "Z"),
                       {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})


def multiplicativity_residuals(L: HomLieAlgebra,
                               alpha: LinearMap | None = None
                               ) -> list[tuple[tuple[int, int], Vector]]:
    """alpha[x_i, x_j] - [alpha x_i, alpha x_j] for every basis pair."""
    alpha = alpha or L.alpha
    out = []
    cols = [alpha.column(i) for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(L.dim):
            lhs = alpha.apply(L.bracket_vec(i, j))
            rhs = L.bracket_of(cols[i], cols[j])
            out.append(((i, j), tuple(a - b for a, b in zip(lhs, rhs))))
    return out


def hom_jacobi_residual(L: HomLieAlgebra) -> list[tuple[tuple[int, int, int], Vector]]:
    """[[x,y],a(z)] + [[z,x],a(y)] + [[y,z],a(x)] for every basis triple."""
    cols = [L.alpha.column(i) for i in range(L.dim)]
    out = []
    for i, j, k in itertools.product(range(L.dim), repeat=3):
        t1 = L.bracket_of(L.bracket_vec(i, j), cols[k])
        t2 = L.bracket_of(L.bracket_vec(k, i), cols[j])
        t3 = L.bracket_of(L.bracket_vec(j, k), cols[i])
        out.append(((i, j, k), tuple(a + b + c for a, b, c in zip(t1, t2, t3))))
    return out


def residuals_are_zero(residuals) -> bool:
    return all(s.is_zero() for _, vec in residuals for s in vec)


def twisted_constants(L: HomLieAlgebra, alpha: LinearMap) -> list[list[Vector]]:
    """Structure constants of alpha o [-,-]; no morphism validation."""
    return [[alpha.apply(L.bracket_vec(i, j)) for j in range(L.dim)]
            for i in range(L.dim)]


def yau_twist(g: HomLieAlgebra, alpha: LinearMap) -> HomLieAlgebra:
    """The Hom-Lie algebra (g, alpha o [-,-], alpha) for a morphism alpha."""
    if not residuals_are_zero(multiplicativity_residuals(g, alpha)):
        raise NotAMorphism("alpha does not preserve the bracket")
    return HomLieAlgebra(g.labels, twisted_constants(g, alpha), alpha)


# ---------------------------------------------------------------------------
# The classified morphism families.
# ---------------------------------------------------------------------------

def _space3() -> BasedSpace:
    return BasedSpace(("X", "Y", "Z"))


def heisenberg_morphism(a12, a13, a22, a23, a32, a33) -> LinearMap:
    """The general Heisenberg self-morphism; X scales by the Y,Z-block determinant."""
    a12, a13, a22, a23, a32, a33 = map(_coerce_scalar, (a12, a13, a22, a23, a32, a33))
    delta = a22 * a33 - a23 * a32
    zero = Scalar.zero()
    return LinearMap(_space3(), [[delta, a12, a13],
                                 [zero, a22, a23],
                                 [zero, a32, a33]])


def sl2_star_morphism(kind: int, **params) -> LinearMap:
    """Self-morphisms of the Poincare algebra.

    kind 1 fixes X up to adding Y, Z components and acts freely on the
    plane span(Y, Z); kind 2 sends the plane to zero and scales X by
    a11 != 1, with Y, Z components of the image of X free.
    """
    zero = Scalar.zero()
    if kind == 1:
        a21 = _coerce_scalar(params.get("a21", 0))
        a31 = _coerce_scalar(params.get("a31", 0))
        a22 = _coerce_scalar(params.get("a22", 0))
        a23 = _coerce_scalar(params.get("a23", 0))
        a32 = _coerce_scalar(params.get("a32", 0))
        a33 = _coerce_scalar(params.get("a33", 0))
        return LinearMap(_space3(), [[Scalar.one(), zero, zero],
                                     [a21, a22, a23],
                                     [a31, a32, a33]])
    if kind == 2:
        a11 = _coerce_scalar(params.get("a11", 0))
        a21 = _coerce_scalar(params.get("a21", 0))
        a31 = _coerce_scalar(params.get("a31", 0))
        if (a11 - Scalar.one()).is_zero():
            raise ConstraintViolated("kind 2 needs a11 != 1")
        return LinearMap(_space3(), [[a11, zero, zero],
                                     [a21, zero, zero],
                                     [a31, zero, zero]])
    raise ConstraintViolated(f"kind must be 1 or 2, got {kind}")


def sl2_morphism(kind: int, a=0, b=0, c=0) -> LinearMap:
    """The four families of sl(2) self-morphisms.

    kind 0 is the zero map.  Kinds 1 and 2 need b != 0 and ac = 0; kind 3
    needs ab != 0 and c != +-1.  All three nonzero kinds have determinant 1.
    """
    a, b, c = map(_coerce_scalar, (a, b, c))
    zero, one = Scalar.zero(), Scalar.one()
    if kind == 0:
        return LinearMap(_space3(), [[zero] * 3] * 3)
    if kind in (1, 2):
        if b.is_zero():
            raise ConstraintViolated(f"kind {kind} needs b != 0")
        if not (a * c).is_zero():
            raise ConstraintViolated(f"kind {kind} needs ac = 0")
        binv = b.inverse()
        if kind == 1:
            return LinearMap(_space3(), [
                [one, c, a],
                [-2 * a * b, b, -a * a * b],
                [-2 * binv * c, -binv * c * c, binv],
            ])
        return LinearMap(_space3(), [
            [-one, c, a],
            [2 * binv * c, -binv * c * c, binv],
            [2 * a * b, b, -a * a * b],
        ])
    if kind == 3:
        if a.is_zero() or b.is_zero():
            raise ConstraintViolated("kind 3 needs ab != 0")
        if (c - one).is_zero() or (c + one).is_zero():
            raise ConstraintViolated("kind 3 needs c != +-1")
        binv = b.inverse()
        cm1_inv = (c - one).inverse()
        inv4a = (4 * a).inverse()
        one_m_c2 = one - c * c
        return LinearMap(_space3(), [
            [c, a, one_m_c2 * inv4a],
            [b, a * b * cm1_inv, b * (one - c) * inv4a],
            [one_m_c2 * binv, a * (one - c) * binv,
             (c - one) * (c + one) ** 2 * inv4a * binv],
        ])
    raise ConstraintViolated(f"kind must be 0..3, got {kind}")


def sl2_morphism_equations(alpha: LinearMap) -> tuple[Scalar, ...]:
    """The nine residuals that vanish exactly when alpha preserves the sl(2) bracket."""
    if alpha.dim != 3:
        raise DimMismatch("need a 3x3 matrix")
    e = alpha.rows
    one = Scalar.one()
    return (
        e[1][0] * e[2][1] - e[1][1] * e[2][0] - 2 * e[0][1],
        e[0][1] * e[1][0] - e[1][1] * (e[0][0] - one),
        e[0][1] * e[2][0] - e[2][1] * (one + e[0][0]),
        e[1][0] * e[2][2] - e[1][2] * e[2][0] + 2 * e[0][2],
        e[0][2] * e[1][0] - e[1][2] * (one + e[0][0]),
        e[0][2] * e[2][0] - e[2][2] * (e[0][0] - one),
        e[0][0] - e[1][1] * e[2][2] + e[1][2] * e[2][1],
        e[1][0] - 2 * (e[0][1] * e[1][2] - e[0][2] * e[1][1]),
        e[2][0] - 2 * (e[0][2] * e[2][1] - e[0][1] * e[2][2]),
    )


# ---------------------------------------------------------------------------
# Finite-field completeness oracles.
# ---------------------------------------------------------------------------

@dataclass
class ClassificationReport:
    algebra: str
    prime: int
    total_solutions: int
    family_counts: dict[str, int]
    overlap_count: int
    unclassified: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.unclassified

    def lines(self) -> list[str]:
        out = [f"{self.algebra} morphisms over F_{self.prime}: {self.total_solutions}"]
        for name, count in sorted(self.family_counts.items()):
            out.append(f"  family {name}: {count}")
        out.append(f"  overlaps: {self.overlap_count}")
        out.append(f"  unclassified: {len(self.unclassified)}")
        return out


def _constants_mod_p(L: HomLieAlgebra, p: int) -> np.ndarray:
    n = L.dim
    c = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c[i, j, k] = reduce_mod_p(L.brackets[i][j][k].constant_value(), p).value
    return c


def _digits(idx: np.ndarray, n2: int, p: int) -> np.ndarray:
    A = np.empty((idx.shape[0], n2), dtype=np.int64)
    for e in range(n2):
        A[:, e] = (idx // p ** (n2 - 1 - e)) % p
    return A


def morphism_matrices_mod_p(L: HomLieAlgebra, p: int,
                            chunk: int = 400_000) -> np.ndarray:
    """Every A over F_p with A[x_i, x_j] = [A x_i, A x_j]: the brute-force oracle."""
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    n = L.dim
    c = _constants_mod_p(L, p)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    total = p ** (n * n)

    def scan(start: int) -> np.ndarray:
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        A = _digits(idx, n * n, p).reshape(-1, n, n)
        ok = np.ones(idx.shape[0], dtype=bool)
        for i, j in pairs:
            lhs = np.einsum("crm,m->cr", A, c[i, j])
            rhs = np.einsum("ck,cl,klr->cr", A[:, :, i], A[:, :, j], c)
            ok &= ~((lhs - rhs) % p).any(axis=1)
        return A[ok]

    found = map_chunks(scan, range(0, total, chunk))
    return np.concatenate([f for f in found if f.size]
                          or [np.zeros((0, n, n), dtype=np.int64)])


def _sl2_equation_solutions_mod_p(p: int, chunk: int = 400_000) -> np.ndarray:
    """Every 3x3 matrix over F_p satisfying the nine morphism equations."""
    total = p ** 9

    def scan(start: int) -> np.ndarray:
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        E = _digits(idx, 9, p).reshape(-1, 3, 3)
        a11, a12, a13 = E[:, 0, 0], E[:, 0, 1], E[:, 0, 2]
        a21, a22, a23 = E[:, 1, 0], E[:, 1, 1], E[:, 1, 2]
        a31, a32, a33 = E[:, 2, 0], E[:, 2, 1], E[:, 2, 2]
        eqs = (
            a21 * a32 - a22 * a31 - 2 * a12,
            a12 * a21 - a22 * (a11 - 1),
            a12 * a31 - a32 * (1 + a11),
            a21 * a33 - a23 * a31 + 2 * a13,
            a13 * a21 - a23 * (1 + a11),
            a13 * a31 - a33 * (a11 - 1),
            a11 - a22 * a33 + a23 * a32,
            a21 - 2 * (a12 * a23 - a13 * a22),
            a31 - 2 * (a13 * a32 - a12 * a33),
        )
        ok = np.ones(idx.shape[0], dtype=bool)
        for r in eqs:
            ok &= (r % p) == 0
        return E[ok]

    found = map_chunks(scan, range(0, total, chunk))
    return np.concatenate([f for f in found if f.size]
                          or [np.zeros((0, 3, 3), dtype=np.int64)])


def _sl2_kind1_mod_p(a: int, b: int, c: int, p: int) -> tuple:
    binv = pow(b, -1, p)
    rows = [[1, c, a],
            [-2 * a * b, b, -a * a * b],
            [-2 * binv * c, -binv * c * c, binv]]
    return tuple(x % p for row in rows for x in row)


def _sl2_kind2_mod_p(a: int, b: int, c: int, p: int) -> tuple:
    binv = pow(b, -1, p)
    rows = [[-1, c, a],
            [2 * binv * c, -binv * c * c, binv],
            [2 * a * b, b, -a * a * b]]
    return tuple(x % p for row in rows for x in row)


def _sl2_kind3_mod_p(a: int, b: int, c: int, p: int) -> tuple:
    binv = pow(b, -1, p)
    inv4a = pow(4 * a, -1, p)
    cm1inv = pow(c - 1, -1, p)
    one_m_c2 = 1 - c * c
    rows = [[c, a, one_m_c2 * inv4a],
            [b, a * b * cm1inv, b * (1 - c) * inv4a],
            [one_m_c2 * binv, a * (1 - c) * binv,
             (c - 1) * (c + 1) ** 2 * inv4a * binv]]
    return tuple(x % p for row in rows for x in row)


def _sl2_family_kinds(flat: tuple[int, ...], p: int) -> list[str]:
    kinds = []
    if not any(flat):
        kinds.append("zero")
    a11, c1, a1 = flat[0], flat[1], flat[2]
    if a11 == 1 % p:
        b1 = flat[4]
        if b1 and (a1 * c1) % p == 0 and _sl2_kind1_mod_p(a1, b1, c1, p) == flat:
            kinds.append("kind1")
    if a11 == (p - 1) % p:
        b2 = flat[7]
        if b2 and (a1 * c1) % p == 0 and _sl2_kind2_mod_p(a1, b2, c1, p) == flat:
            kinds.append("kind2")
    a3, b3, c3 = flat[1], flat[3], flat[0]
    if a3 and b3 and c3 not in (1 % p, (p - 1) % p):
        if _sl2_kind3_mod_p(a3, b3, c3, p) == flat:
            kinds.append("kind3")
    return kinds


def _make_report(algebra: str, p: int, solutions: np.ndarray,
                 member_fn, strict: bool) -> ClassificationReport:
    counts: dict[str, int] = {}
    overlaps = 0
    unclassified: list[tuple[int, ...]] = []
    for mat in solutions:
        flat = tuple(int(x) for x in mat.reshape(-1))
        kinds = member_fn(flat)
        for k in kinds:
            counts[k] = counts.get(k, 0) + 1
        if len(kinds) > 1:
            overlaps += 1
        if not kinds:
            unclassified.append(flat)
    report = ClassificationReport(algebra, p, int(solutions.shape[0]),
                                  counts, overlaps, unclassified)
    if strict and unclassified:
        raise UnclassifiedMorphismFound(
            f"{len(unclassified)} {algebra} morphisms over F_{p} fall outside "
            f"every family, e.g. {unclassified[0]}")
    return report


def classify_sl2_finite_field(p: int, strict: bool = False,
                              chunk: int = 400_000) -> ClassificationReport:
    """Scan all 3x3 matrices over F_p against the nine equations, then cover
    every solution by the four sl(2) families."""
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    solutions = _sl2_equation_solutions_mod_p(p, chunk)
    return _make_report("sl2", p, solutions,
                        lambda flat: _sl2_family_kinds(flat, p), strict)


def classify_heisenberg_finite_field(p: int, strict: bool = False,
                                     chunk: int = 400_000) -> ClassificationReport:
    """Brute-force Heisenberg morphisms over F_p; they all lie in one family."""
    solutions = morphism_matrices_mod_p(heisenberg(), p, chunk)

    def member(flat: tuple[int, ...]) -> list[str]:
        a11, a12, a13, a21, a22, a23, a31, a32, a33 = flat
        if a21 == 0 and a31 == 0 and a11 == (a22 * a33 - a23 * a32) % p:
            return ["heisenberg"]
        return []

    return _make_report("heisenberg", p, solutions, member, strict)


def classify_sl2_star_finite_field(p: int, strict: bool = False,
                                   chunk: int = 400_000) -> ClassificationReport:
    """Brute-force Poincare-algebra morphisms over F_p against the two families."""
    solutions = morphism_matrices_mod_p(sl2_star(), p, chunk)

    def member(flat: tuple[int, ...]) -> list[str]:
        a11, a12, a13, a21, a22, a23, a31, a32, a33 = flat
        kinds = []
        if a11 == 1 and a12 == 0 and a13 == 0:
            kinds.append("kind1")
        if a11 != 1 and not any((a12, a13, a22, a23, a32, a33)):
            kinds.append("kind2")
        return kinds

    return _make_report("sl2_star", p, solutions, member, strict)


# ---------------------------------------------------------------------------
# Braidings on the one-dimensional extension C (+) L.
# ---------------------------------------------------------------------------

def extension_space(L: HomLieAlgebra) -> BasedSpace:
    return BasedSpace(("(1,0)",) + L.labels)


def extended_alpha(L: HomLieAlgebra) -> LinearMap:
    """alpha extended by the identity on the added line: (a, x) -> (a, alpha x)."""
    n = L.dim
    zero, one = Scalar.zero(), Scalar.one()
    rows = [[one] + [zero] * n]
    for k in range(n):
        rows.append([zero] + list(L.alpha.rows[k]))
    return LinearMap(extension_space(L), rows)


def braiding_on_extension(L: HomLieAlgebra) -> TensorOp:
    """The twisted flip plus bracket correction on (C (+) L) tensor itself:

        (a, x) (x) (b, y) -> (b, alpha y) (x) (a, alpha x) + (1, 0) (x) (0, [x, y])
    """
    L.validate()
    n = L.dim
    d = n + 1
    space = extension_space(L)
    A = L.alpha.rows
    cols: dict[int, list[tuple[int, Scalar]]] = {}
    for pi in range(d):
        for qi in range(d):
            col = pi * d + qi
            entries: list[tuple[int, Scalar]] = []
            if pi == 0 and qi == 0:
                entries.append((0, Scalar.one()))
            elif pi == 0:
                for k in range(n):
                    entries.append(((k + 1) * d, A[k][qi - 1]))
            elif qi == 0:
                for k in range(n):
                    entries.append((k + 1, A[k][pi - 1]))
            else:
                for k in range(n):
                    for m in range(n):
                        entries.append(((k + 1) * d + (m + 1),
                                        A[k][qi - 1] * A[m][pi - 1]))
                for m, coef in enumerate(L.bracket_vec(pi - 1, qi - 1)):
                    entries.append((m + 1, coef))
            cols[col] = entries
    return TensorOp(space, 2, cols)


def braiding_inverse_on_extension(L: HomLieAlgebra) -> TensorOp:
    """The closed-form inverse braiding:

        (a, x) (x) (b, y) -> (b, inv y) (x) (a, inv x) + (0, inv^2 [x, y]) (x) (1, 0)
    """
    L.validate()
    try:
        inv = L.alpha.inverse()
    except (Singular, SymbolicNotMonomialInvertible) as exc:
        raise AlphaSingular("alpha is not invertible") from exc
    inv2 = inv.compose(inv)
    n = L.dim
    d = n + 1
    space = extension_space(L)
    cols: dict[int, list[tuple[int, Scalar]]] = {}
    for pi in range(d):
        for qi in range(d):
            col = pi * d + qi
            entries: list[tuple[int, Scalar]] = []
            if pi == 0 and qi == 0:
                entries.append((0, Scalar.one()))
            elif pi == 0:
                for k in range(n):
                    entries.append(((k + 1) * d, inv.rows[k][qi - 1]))
            elif qi == 0:
                for k in range(n):
                    entries.append((k + 1, inv.rows[k][pi - 1]))
            else:
                for k in range(n):
                    for m in range(n):
                        entries.append(((k + 1) * d + (m + 1),
                                        inv.rows[k][qi - 1] * inv.rows[m][pi - 1]))
                corr = inv2.apply(L.bracket_vec(pi - 1, qi - 1))
                for m, coef in enumerate(corr):
                    entries.append(((m + 1) * d, coef))
            cols[col] = entries
    return TensorOp(space, 2, cols)


# ---------------------------------------------------------------------------
# Isomorphism testing and the conjugacy obstruction.
# ---------------------------------------------------------------------------

def is_hom_lie_isomorphism(gamma: LinearMap, L1: HomLieAlgebra,
                           L2: HomLieAlgebra) -> bool:
    """gamma invertible, intertwining the alphas and transporting the bracket."""
    if L1.dim != L2.dim or gamma.dim != L1.dim:
        raise DimMismatch("dimension mismatch")
    try:
        gamma.inverse()
    except (Singular, SymbolicNotMonomialInvertible):
        return False
    if gamma.compose(L1.alpha) != L2.alpha.compose(gamma):
        return False
    cols = [gamma.column(i) for i in range(L1.dim)]
    for i in range(L1.dim):
        for j in range(L1.dim):
            if gamma.apply(L1.bracket_vec(i, j)) != L2.bracket_of(cols[i], cols[j]):
                return False
    return True


def char_poly(m: LinearMap) -> tuple[Scalar, ...]:
    """Monic characteristic polynomial coefficients, highest degree first.

    Faddeev-LeVerrier: only divisions by integers, so it works symbolically.
    """
    n = m.dim
    coeffs = [Scalar.one()]
    M = m
    c = Scalar.zero()
    for k in range(1, n + 1):
        if k > 1:
            shifted = LinearMap(m.space,
                                [[M.rows[i][j] + (c if i == j else Scalar.zero())
                                  for j in range(n)] for i in range(n)])
            M = m.compose(shifted)
        trace = sum((M.rows[i][i] for i in range(n)), Scalar.zero())
        c = trace * Fraction(-1, k)
        coeffs.append(c)
    return tuple(coeffs)


def conjugacy_obstruction(alpha: LinearMap, beta: LinearMap) -> bool:
    """True when the characteristic polynomials differ: a sound witness that
    alpha and beta are not conjugate, hence the twisted algebras not isomorphic."""
    return char_poly(alpha) != char_poly(beta)


# ---------------------------------------------------------------------------
# JSON algebra format.
# ---------------------------------------------------------------------------

def algebra_to_json_dict(L: HomLieAlgebra) -> dict:
    c = {}
    for i in range(L.dim):
        for j in range(L.dim):
            inner = {str(k): str(s) for k, s in enumerate(L.brackets[i][j])
                     if not s.is_zero()}
            if inner:
                c[f"{i},{j}"] = inner
    return {
        "dim": L.dim,
        "labels": list(L.labels),
        "c": c,
        "alpha": [[str(e) for e in row] for row in L.alpha.rows],
    }


def algebra_from_json_dict(data: Mapping) -> HomLieAlgebra:
    from hombrax.scalars import parse_scalar
    n = int(data["dim"])
    labels = tuple(data.get("labels") or (f"x{i}" for i in range(n)))
    zero = Scalar.zero()
    c = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for key, inner in data["c"].items():
        i, j = (int(x) for x in key.split(","))
        for k, text in inner.items():
            c[i][j][int(k)] = parse_scalar(text)
    alpha = LinearMap(BasedSpace(labels),
                      [[parse_scalar(t) for t in row] for row in data["alpha"]])
    return HomLieAlgebra(labels, c, alpha)
