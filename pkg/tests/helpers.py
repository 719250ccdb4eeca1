"""Shared test utilities: independent dense oracles and gallery builders.

The dense helpers here deliberately avoid the package's sparse composition
and tensor-product code paths so they can serve as oracles for them.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hombrax.homlie import (
    HomLieAlgebra,
    heisenberg,
    heisenberg_morphism,
    sl2,
    sl2_morphism,
    sl2_star,
    sl2_star_morphism,
    yau_twist,
)
from hombrax.hybe import twist
from hombrax.quantum import PHI_SPACE, phi
from hombrax.scalars import Scalar
from hombrax.tensor import BasedSpace, LinearMap, TensorOp


def rand_fraction(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        f = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if not nonzero or f != 0:
            return f


def dense_matmul(a, b):
    """Plain triple-loop Scalar matrix product (oracle for compose)."""
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Scalar.zero())
             for j in range(n)] for i in range(n)]


def dense_kron(a, b):
    """Plain dense Kronecker product (oracle for tensor_product/lift)."""
    na, nb = len(a), len(b)
    out = [[Scalar.zero()] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(na):
            for k in range(nb):
                for l in range(nb):
                    out[i * nb + k][j * nb + l] = a[i][j] * b[k][l]
    return out


def dense_of_map(m: LinearMap):
    return [list(row) for row in m.rows]


def dense_equal(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def random_op(rng: random.Random, space: BasedSpace, arity: int,
              density: float = 0.4) -> TensorOp:
    n = space.dim ** arity
    cols = {}
    for j in range(n):
        cols[j] = [(r, Scalar.rational(rand_fraction(rng)))
                   for r in range(n) if rng.random() < density]
    return TensorOp(space, arity, cols)


# -- galleries ---------------------------------------------------------------

GALLERY_POINT = {"q": 2, "l": 1}


def phi_alpha_symbolic() -> tuple[TensorOp, LinearMap]:
    """The twisted braiding for diagonal alpha, fully symbolic."""
    alpha = LinearMap.diagonal(PHI_SPACE, [Scalar.param("a"), Scalar.param("d")])
    return twist(phi(), alpha), alpha


def phi_alpha_rational(a=1, d=3) -> tuple[TensorOp, LinearMap]:
    alpha = LinearMap.diagonal(PHI_SPACE, [a, d])
    return twist(phi(), alpha).instantiate(GALLERY_POINT), alpha


def random_heisenberg_twist(rng: random.Random, invertible: bool = True) -> HomLieAlgebra:
    while True:
        params = [rand_fraction(rng) for _ in range(6)]
        alpha = heisenberg_morphism(*params)
        delta = alpha.rows[0][0]
        if not invertible or not delta.is_zero():
            return yau_twist(heisenberg(), alpha)


def random_sl2_star_twist(rng: random.Random, invertible: bool = True) -> HomLieAlgebra:
    while True:
        names = ("a21", "a31", "a22", "a23", "a32", "a33")
        params = {n: rand_fraction(rng) for n in names}
        alpha = sl2_star_morphism(1, **params)
        det = params["a22"] * params["a33"] - params["a23"] * params["a32"]
        if not invertible or det != 0:
            return yau_twist(sl2_star(), alpha)


def random_sl2_morphism(rng: random.Random, kind: int | None = None) -> LinearMap:
    kind = kind if kind is not None else rng.choice([1, 2, 3])
    if kind in (1, 2):
        b = rand_fraction(rng, nonzero=True)
        if rng.random() < 0.5:
            return sl2_morphism(kind, 0, b, rand_fraction(rng))
        return sl2_morphism(kind, rand_fraction(rng), b, 0)
    while True:
        a = rand_fraction(rng, nonzero=True)
        b = rand_fraction(rng, nonzero=True)
        c = rand_fraction(rng)
        if c != 1 and c != -1:
            return sl2_morphism(3, a, b, c)


def random_sl2_twist(rng: random.Random) -> HomLieAlgebra:
    return yau_twist(sl2(), random_sl2_morphism(rng))


def extension_instances(rng: random.Random, count: int) -> list[HomLieAlgebra]:
    """Invertible twisted instances cycling through the three algebra families."""
    makers = [random_heisenberg_twist, random_sl2_star_twist, random_sl2_twist]
    return [makers[i % 3](rng) for i in range(count)]
