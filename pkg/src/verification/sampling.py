"""Generadores aleatorios con semilla para las suites de propiedades."""

from random import Random

from ..algebra.gring import GClass
from ..algebra.powstruct import MeasuredPartition
from ..algebra.series import CoeffRing, TruncSeries


def random_laurent(rng: Random, spread: int = 2, terms: int = 2, nonzero: bool = False) -> GClass:
    """Polinomio de Laurent con exponentes en [−spread, spread] y coeficientes pequeños."""
    while True:
        value = GClass.from_laurent(
            {rng.randint(-spread, spread): rng.choice((-2, -1, 1, 2)) for _ in range(rng.randint(1, terms))}
        )
        if value or not nonzero:
            return value


def random_class(rng: Random) -> GClass:
    """Cociente de dos polinomios de Laurent; el denominador nunca es cero."""
    return random_laurent(rng, terms=3) / random_laurent(rng, nonzero=True)


def random_unit_series(rng: Random, n: int, density: float = 0.5) -> TruncSeries:
    """Serie 1 + Σ c_k·t^k con coeficientes de Laurent dispersos."""
    coeffs = {(0,): GClass(1)}
    for k in range(1, n + 1):
        if rng.random() < density:
            coeffs[(k,)] = random_laurent(rng, spread=1)
    return TruncSeries(("t",), n, coeffs, CoeffRing.GCLASS)


def random_partition(rng: Random, n: int, size: int = 3) -> MeasuredPartition:
    """Valores enteros de orden ≥ 1 con pesos enteros no nulos."""
    pairs = []
    for _ in range(size):
        order = rng.randint(1, 3)
        values = [0] * order + [rng.randint(-2, 2) or 1 for _ in range(rng.randint(1, 3))]
        values[order] = rng.choice((-1, 1))
        pairs.append((TruncSeries.from_list(values, trunc=n), rng.choice((-2, -1, 1, 2))))
    return MeasuredPartition.from_pairs(pairs)
