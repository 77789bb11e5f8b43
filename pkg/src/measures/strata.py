"""
Mini-DSL de estratos de jets en el espacio de arcos y en el de funciones.

Un estrato fija coordenadas nulas, coordenadas no nulas y factores
multiplicativos; su clase [A_n] y sus medidas son exactas, y un oráculo
de conteo sobre F_q permite contrastarlas.
"""

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from loguru import logger
from sympy import ZZ, isprime
from sympy.polys.galoistools import gf_sqf_p

from ..algebra.gring import GClass
from ..algebra.powstruct import power
from ..algebra.series import TruncSeries
from ..core.config import settings
from ..core.errors import (
    IdentityViolation,
    IndexOutOfRange,
    InvalidInput,
    NotEnumerable,
    TooLarge,
)

L = GClass.L


class AmbientKind(str, Enum):
    ARC = "arc"
    FUNCTION = "function"


@dataclass(frozen=True)
class Ambient:
    """
    Espacio de n-jets.

    En arcos las coordenadas son x_1..x_n (índices 0..n−1) y y_1..y_n
    (índices n..2n−1). En funciones son los coeficientes de x^i·y^j por
    grado d = i + j creciente y, dentro de un grado, por potencia de y.
    """
    kind: AmbientKind
    n: int
    include_constant: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput(f"jet level must be >= 1, got {self.n}")
        if self.kind is AmbientKind.ARC and self.include_constant:
            raise InvalidInput("arc ambients have no constant coordinate")

    @classmethod
    def arc(cls, n: int) -> "Ambient":
        return cls(AmbientKind.ARC, n)

    @classmethod
    def function(cls, n: int, include_constant: bool = False) -> "Ambient":
        return cls(AmbientKind.FUNCTION, n, include_constant)

    @property
    def dimension(self) -> int:
        if self.kind is AmbientKind.ARC:
            return 2 * self.n
        full = (self.n + 1) * (self.n + 2) // 2
        return full if self.include_constant else full - 1

    def normalizer(self) -> GClass:
        if self.kind is AmbientKind.ARC:
            return GClass.monomial(-2 * self.n)
        return GClass.monomial(1 - (self.n + 1) * (self.n + 2) // 2)

    def x(self, i: int) -> int:
        self._require(AmbientKind.ARC)
        self._check_level(i)
        return i - 1

    def y(self, i: int) -> int:
        self._require(AmbientKind.ARC)
        self._check_level(i)
        return self.n + i - 1

    def monomial(self, i: int, j: int) -> int:
        """Índice del coeficiente de x^i·y^j."""
        self._require(AmbientKind.FUNCTION)
        d = i + j
        if i < 0 or j < 0 or d > self.n or (d == 0 and not self.include_constant):
            raise IndexOutOfRange(f"monomial x^{i}*y^{j} outside {self}")
        start = d * (d + 1) // 2
        return start + j if self.include_constant else start + j - 1

    def labels(self) -> List[str]:
        if self.kind is AmbientKind.ARC:
            return [f"x{i}" for i in range(1, self.n + 1)] + [f"y{i}" for i in range(1, self.n + 1)]
        labels = []
        for d in range(0 if self.include_constant else 1, self.n + 1):
            for j in range(d + 1):
                labels.append(f"x^{d - j}*y^{j}")
        return labels

    def _require(self, kind: AmbientKind) -> None:
        if self.kind is not kind:
            raise InvalidInput(f"coordinate helper for {kind.value} jets used on {self.kind.value} jets")

    def _check_level(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"jet coordinate {i} outside 1..{self.n}")

    def __str__(self) -> str:
        suffix = "+const" if self.include_constant else ""
        return f"{self.kind.value}-space({self.n}){suffix}"


class Multiplier(ABC):
    """Factor de clase asociado a un estrato."""

    enumerable: bool = True

    @abstractmethod
    def factor(self) -> GClass:
        """Clase por la que se multiplica [A_n]."""

    @property
    def coords(self) -> Tuple[int, ...]:
        return ()

    def accepts(self, values: Mapping[int, int], q: int) -> bool:
        raise NotEnumerable(f"{self} has no point-count predicate")

    def remap(self, mapping: Mapping[int, int]) -> "Multiplier":
        return self


@dataclass(frozen=True)
class ClassMultiplier(Multiplier):
    value: GClass
    label: str = ""

    enumerable = False

    def factor(self) -> GClass:
        return self.value

    def __str__(self) -> str:
        return self.label or str(self.value)


@dataclass(frozen=True)
class NotAllZero(Multiplier):
    """Las coordenadas dadas no se anulan a la vez: factor (L^r − 1)/L^r."""
    indices: Tuple[int, ...]

    def factor(self) -> GClass:
        r = len(self.indices)
        return (L ** r - 1) / L ** r

    @property
    def coords(self) -> Tuple[int, ...]:
        return self.indices

    def accepts(self, values: Mapping[int, int], q: int) -> bool:
        return any(values[i] for i in self.indices)

    def remap(self, mapping: Mapping[int, int]) -> "NotAllZero":
        return NotAllZero(tuple(mapping[i] for i in self.indices))

    def __str__(self) -> str:
        return f"not_all_zero{list(self.indices)}"


@dataclass(frozen=True)
class DiscriminantNonzero(Multiplier):
    """La forma a·x² + b·xy + c·y² es no degenerada: factor (L − 1)/L."""
    a: int
    b: int
    c: int

    def factor(self) -> GClass:
        return (L - 1) / L

    @property
    def coords(self) -> Tuple[int, ...]:
        return (self.a, self.b, self.c)

    def accepts(self, values: Mapping[int, int], q: int) -> bool:
        a, b, c = values[self.a], values[self.b], values[self.c]
        return (b * b - 4 * a * c) % q != 0

    def remap(self, mapping: Mapping[int, int]) -> "DiscriminantNonzero":
        return DiscriminantNonzero(mapping[self.a], mapping[self.b], mapping[self.c])

    def __str__(self) -> str:
        return f"discriminant_nonzero[{self.a}, {self.b}, {self.c}]"


@dataclass(frozen=True)
class JetStratum:
    """Cilindro descrito por coordenadas nulas, no nulas y multiplicadores."""
    ambient: Ambient
    zero: FrozenSet[int] = frozenset()
    nonzero: FrozenSet[int] = frozenset()
    multipliers: Tuple[Multiplier, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "zero", frozenset(self.zero))
        object.__setattr__(self, "nonzero", frozenset(self.nonzero))
        object.__setattr__(self, "multipliers", tuple(self.multipliers))

        dim = self.ambient.dimension
        used = list(self.zero) + list(self.nonzero)
        for m in self.multipliers:
            used.extend(m.coords)
        for i in used:
            if not 0 <= i < dim:
                raise IndexOutOfRange(f"coordinate {i} outside {self.ambient} (dimension {dim})")
        if self.zero & self.nonzero:
            raise InvalidInput(f"coordinates {sorted(self.zero & self.nonzero)} are both zero and nonzero")
        if len(used) != len(set(used)):
            raise InvalidInput("multiplier coordinates overlap other constraints")

    def with_multiplier(self, multiplier: Multiplier) -> "JetStratum":
        return JetStratum(self.ambient, self.zero, self.nonzero, self.multipliers + (multiplier,))

    def constrained(self) -> List[int]:
        coords = sorted(self.zero) + sorted(self.nonzero)
        for m in self.multipliers:
            coords.extend(m.coords)
        return coords


def projectivize(s: JetStratum) -> JetStratum:
    """Cociente por C*: añade el factor (L − 1)^(−1)."""
    return s.with_multiplier(ClassMultiplier((L - 1).inverse(), "projectivization"))


def jet_class(s: JetStratum) -> GClass:
    """[A_n] = (L−1)^|nonzero| · L^(dim − |zero| − |nonzero|) · Π factores."""
    free = s.ambient.dimension - len(s.zero) - len(s.nonzero)
    result = (L - 1) ** len(s.nonzero) * GClass.monomial(free)
    for m in s.multipliers:
        result = result * m.factor()
    return result


def measure_arc_stratum(s: JetStratum) -> GClass:
    """
    Medida en el espacio de arcos: [A_n]·L^(−2n).

    Raises:
        InvalidInput: si el estrato no vive en el espacio de arcos
    """
    if s.ambient.kind is not AmbientKind.ARC:
        raise InvalidInput(f"stratum lives in {s.ambient}, expected arc-space")
    return jet_class(s) * s.ambient.normalizer()


def measure_fun_stratum(s: JetStratum) -> GClass:
    """Medida en el espacio de funciones: [A_n]·L^(1 − (n+1)(n+2)/2)."""
    if s.ambient.kind is not AmbientKind.FUNCTION:
        raise InvalidInput(f"stratum lives in {s.ambient}, expected function-space")
    return jet_class(s) * s.ambient.normalizer()


def measure(s: JetStratum) -> GClass:
    if s.ambient.kind is AmbientKind.ARC:
        return measure_arc_stratum(s)
    return measure_fun_stratum(s)


def pad(s: JetStratum, n: int) -> JetStratum:
    """Reescribe el estrato a nivel de jets n ≥ s.ambient.n sin nuevas condiciones."""
    amb = s.ambient
    if n < amb.n:
        raise InvalidInput(f"cannot pad from level {amb.n} down to {n}")
    target = Ambient(amb.kind, n, amb.include_constant)
    if amb.kind is AmbientKind.ARC:
        mapping = {amb.x(i): target.x(i) for i in range(1, amb.n + 1)}
        mapping.update({amb.y(i): target.y(i) for i in range(1, amb.n + 1)})
    else:
        mapping = {i: i for i in range(amb.dimension)}
    return JetStratum(
        target,
        frozenset(mapping[i] for i in s.zero),
        frozenset(mapping[i] for i in s.nonzero),
        tuple(m.remap(mapping) for m in s.multipliers),
    )


def ff_point_count(s: JetStratum, q: int) -> int:
    """
    Cuenta por fuerza bruta los jets sobre F_q que cumplen las condiciones.

    Las coordenadas libres aportan q^libres; las restringidas se recorren
    con itertools.product.

    Raises:
        TooLarge: si la dimensión supera settings.ff_dimension_limit
        NotEnumerable: si algún multiplicador es una clase pura
    """
    if not isprime(q):
        raise InvalidInput(f"finite-field oracle needs a prime q, got {q}")
    dim = s.ambient.dimension
    if dim > settings.ff_dimension_limit:
        raise TooLarge(
            f"ambient dimension {dim} exceeds {settings.ff_dimension_limit}",
            {"dimension": dim, "limit": settings.ff_dimension_limit},
        )
    for m in s.multipliers:
        if not m.enumerable:
            raise NotEnumerable(f"multiplier {m} has no point-count predicate")

    coords = s.constrained()
    choices = []
    for i in coords:
        if i in s.zero:
            choices.append((0,))
        elif i in s.nonzero:
            choices.append(tuple(range(1, q)))
        else:
            choices.append(tuple(range(q)))

    count = 0
    for values in itertools.product(*choices):
        assignment = dict(zip(coords, values))
        if all(m.accepts(assignment, q) for m in s.multipliers):
            count += 1
    return count * q ** (dim - len(coords))


# --- clase de configuraciones en P^1 -----------------------------------


def _squarefree_monic_count(degree: int, q: int) -> int:
    if degree <= 1:
        return q ** degree
    count = 0
    for tail in itertools.product(range(q), repeat=degree):
        if gf_sqf_p([1, *tail], q, ZZ):
            count += 1
    return count


def reduced_divisor_count(k: int, q: int) -> int:
    """Divisores efectivos reducidos de grado k en P^1 sobre F_q."""
    if k < 1:
        raise InvalidInput(f"divisor degree must be >= 1, got {k}")
    return _squarefree_monic_count(k, q) + _squarefree_monic_count(k - 1, q)


@lru_cache(maxsize=None)
def config_class_p1(k: int) -> GClass:
    """
    Clase de los k-subconjuntos de puntos distintos de P^1.

    Es el coeficiente de t^k en (1 + t)^[P^1] y se contrasta con el conteo
    de divisores reducidos sobre F_q mientras q^k no supere
    settings.ff_enumeration_limit.

    Raises:
        IdentityViolation: si el conteo no coincide con la clase
    """
    if k < 1:
        raise InvalidInput(f"configuration size must be >= 1, got {k}")
    one_plus_t = TruncSeries.from_list([1, 1], trunc=k)
    value = GClass.coerce(power(one_plus_t, L + 1, k).coeff(k))

    for q in settings.field_checks:
        if q ** k > settings.ff_enumeration_limit:
            logger.warning(f"config_class_p1({k}): skipping F_{q} check, q^k above enumeration limit")
            continue
        expected = reduced_divisor_count(k, q)
        if value.specialize(q) != expected:
            raise IdentityViolation(
                f"config_class_p1({k}) disagrees with the divisor count over F_{q}",
                {"class": str(value), "q": q, "count": expected},
            )
    logger.debug(f"config_class_p1({k}) = {value}")
    return value


def stratum_from_labels(
    ambient: Ambient,
    zero: Iterable[str] = (),
    nonzero: Iterable[str] = (),
    multipliers: Sequence[Multiplier] = (),
) -> JetStratum:
    """Construye un estrato nombrando coordenadas por etiqueta (``y3``, ``x^1*y^1``)."""
    index = {label: i for i, label in enumerate(ambient.labels())}

    def resolve(labels: Iterable[str]) -> FrozenSet[int]:
        out = set()
        for label in labels:
            if label not in index:
                raise IndexOutOfRange(f"unknown coordinate {label!r} in {ambient}")
            out.add(index[label])
        return frozenset(out)

    return JetStratum(ambient, resolve(zero), resolve(nonzero), tuple(multipliers))


def builtin_strata() -> Dict[str, JetStratum]:
    """Estratos de referencia para el oráculo de cuerpos finitos."""
    arc1 = Ambient.arc(1)
    arc3 = Ambient.arc(3)
    fun2 = Ambient.function(2)
    fun3 = Ambient.function(3)
    quad = (fun2.monomial(2, 0), fun2.monomial(1, 1), fun2.monomial(0, 2))
    return {
        "arc1_full": JetStratum(arc1),
        "arc1_x_nonzero": JetStratum(arc1, nonzero={arc1.x(1)}),
        "arc1_origin": JetStratum(arc1, zero={arc1.x(1), arc1.y(1)}),
        "arc3_cusp_order": JetStratum(arc3, zero={arc3.x(1), arc3.y(1)}, nonzero={arc3.y(2)}),
        "arc3_not_all_zero": JetStratum(arc3, multipliers=(NotAllZero((arc3.x(1), arc3.y(1))),)),
        "fun2_a1": JetStratum(
            fun2,
            zero={fun2.monomial(1, 0), fun2.monomial(0, 1)},
            multipliers=(DiscriminantNonzero(*quad),),
        ),
        "fun2_singular": JetStratum(
            fun2,
            zero={fun2.monomial(1, 0), fun2.monomial(0, 1)},
            multipliers=(NotAllZero(quad),),
        ),
        "fun3_axes": JetStratum(
            fun3,
            zero={fun3.monomial(1, 0), fun3.monomial(0, 1)},
            nonzero={fun3.monomial(2, 0), fun3.monomial(0, 2)},
        ),
        "fun2_with_constant": JetStratum(
            Ambient.function(2, include_constant=True),
            nonzero={Ambient.function(2, include_constant=True).monomial(0, 0)},
        ),
    }
