# app_representaciones/services/cuerpos.py
"""
Cuerpos finitos GF(p^n) sobre galois.

Responsabilidades:
- Construir GF(p^n) con el polinomio mínimo canónico (make_field)
- Inclusiones compatibles GF(p^m) ↪ GF(p^n) para m | n (embed)
- Automorfismos de Frobenius x ↦ x^(p^e) (automorphisms)
- Aritmética sobre la codificación por coeficientes (field_arith)

Codificación: un elemento es el vector de coeficientes (c_0, ..., c_{n-1})
sobre GF(p), término constante primero, respecto de la raíz α del polinomio
mínimo. Coincide con la representación entera de galois: Σ c_i p^i.
"""

import logging
import threading
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import Optional, Union

import galois
import numpy as np
from sympy import divisors, isprime

from app_representaciones.domain.enums import OperacionCuerpo
from app_representaciones.domain.errores import (
    ErrorCapacidad,
    ErrorConsistencia,
    ErrorDivisionPorCero,
    ErrorEntrada,
    ErrorSubcuerpo,
)
from app_representaciones.services.limites import limites_vigentes

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────────────────────────
# Tipos
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class FiniteField:
    p: int
    n: int
    min_poly: tuple[int, ...]   # constante primero, mónico, grado n

    @property
    def order(self) -> int:
        return self.p ** self.n

    @cached_property
    def gf(self) -> type[galois.FieldArray]:
        """Clase de arreglos de galois para este cuerpo."""
        if self.n == 1:
            return galois.GF(self.p)
        poly = galois.Poly(list(reversed(self.min_poly)), field=galois.GF(self.p))
        return galois.GF(self.p ** self.n, irreducible_poly=poly)

    @cached_property
    def prime_gf(self) -> type[galois.FieldArray]:
        return galois.GF(self.p)

    @cached_property
    def _potencias_p(self) -> np.ndarray:
        return self.p ** np.arange(self.n, dtype=np.int64)

    def enteros(self, arr) -> np.ndarray:
        return np.asarray(arr.view(np.ndarray), dtype=np.int64)

    def digitos(self, arr) -> np.ndarray:
        """Coeficientes sobre GF(p) de cada entrada: forma (..., n)."""
        enteros = self.enteros(arr)
        return (enteros[..., None] // self._potencias_p) % self.p

    def desde_digitos(self, digitos) -> galois.FieldArray:
        digitos = np.asarray(digitos, dtype=np.int64)
        return self.gf(digitos @ self._potencias_p)

    def elementos(self) -> galois.FieldArray:
        """Todos los elementos, en orden de codificación entera."""
        return self.gf(np.arange(self.order))

    def generador(self) -> galois.FieldArray:
        """La raíz α del polinomio mínimo (0 en el cuerpo primo, donde min_poly = x)."""
        return self.gf(self.p if self.n > 1 else 0)

    def to_dict(self):
        return {"p": self.p, "n": self.n, "min_poly": list(self.min_poly)}

    def __str__(self):
        return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"


@dataclass(frozen=True)
class FieldElement:
    owner: FiniteField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.owner.n:
            raise ErrorEntrada(
                f"Un elemento de {self.owner} lleva {self.owner.n} coeficientes (recibidos {len(self.coeffs)})."
            )
        if any(not 0 <= c < self.owner.p for c in self.coeffs):
            raise ErrorEntrada(f"Coeficientes fuera de [0, {self.owner.p}): {list(self.coeffs)}")

    def to_int(self) -> int:
        return sum(c * self.owner.p ** i for i, c in enumerate(self.coeffs))

    @property
    def valor(self) -> galois.FieldArray:
        return self.owner.gf(self.to_int())

    def es_cero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class FieldAutomorphism:
    field: FiniteField
    power: int   # x ↦ x^(p^power)

    def __call__(self, arr):
        if self.power == 0:
            return arr.copy()
        return arr ** (self.field.p ** self.power)

    def compose(self, otro: "FieldAutomorphism") -> "FieldAutomorphism":
        """self ∘ otro."""
        if otro.field != self.field:
            raise ErrorEntrada("No se pueden componer automorfismos de cuerpos distintos.")
        return FieldAutomorphism(self.field, (self.power + otro.power) % self.field.n)

    def inverse(self) -> "FieldAutomorphism":
        return FieldAutomorphism(self.field, (-self.power) % self.field.n)

    def es_identidad(self) -> bool:
        return self.power == 0


@dataclass(frozen=True)
class FieldEmbedding:
    source: FiniteField
    target: FiniteField
    image_of_generator: int   # codificación entera en target

    @property
    def grado(self) -> int:
        """[target : source]."""
        return self.target.n // self.source.n

    @cached_property
    def _potencias_imagen(self) -> galois.FieldArray:
        return _potencias(self.target.gf(self.image_of_generator), self.source.n)

    def __call__(self, arr) -> galois.FieldArray:
        """Aplica la inclusión entrada a entrada."""
        if self.source == self.target:
            return self.target.gf(self.source.enteros(arr))
        digitos = self.source.digitos(arr)
        imagen = self.target.gf.Zeros(digitos.shape[:-1])
        for i, potencia in enumerate(self._potencias_imagen):
            imagen = imagen + self.target.gf(digitos[..., i]) * potencia
        return imagen

    @cached_property
    def _inversa_base(self) -> galois.FieldArray:
        # filas j*m + t: dígitos de γ^j · ι(α^t), con γ el generador de target
        m, r = self.source.n, self.grado
        potencias_gamma = _potencias(self.target.generador(), r)
        filas = np.zeros((r * m, self.target.n), dtype=np.int64)
        for j in range(r):
            filas[j * m:(j + 1) * m] = self.target.digitos(potencias_gamma[j] * self._potencias_imagen)
        return np.linalg.inv(self.target.prime_gf(filas))

    def coordenadas(self, arr) -> galois.FieldArray:
        """
        Coordenadas sobre source en la base 1, γ, ..., γ^(r-1) de target.
        Retorna forma (..., r).
        """
        m, r = self.source.n, self.grado
        digitos = self.target.digitos(arr)
        forma = digitos.shape[:-1]
        planos = self.target.prime_gf(digitos.reshape(-1, self.target.n)) @ self._inversa_base
        coef = np.asarray(planos.view(np.ndarray), dtype=np.int64).reshape(*forma, r, m)
        return self.source.desde_digitos(coef)


def _potencias(beta, cantidad: int) -> galois.FieldArray:
    """[1, β, β², ...] por productos sucesivos (β puede ser 0)."""
    potencias = type(beta).Ones(cantidad)
    for i in range(1, cantidad):
        potencias[i] = potencias[i - 1] * beta
    return potencias


# ─────────────────────────────────────────────────────────────────────────────
# Construcción
# ─────────────────────────────────────────────────────────────────────────────

def _es_irreducible_por_division(p: int, coeficientes: tuple[int, ...]) -> bool:
    """Prueba por división contra todos los mónicos de grado ≤ n/2."""
    cuerpo_primo = galois.GF(p)
    f = galois.Poly(list(reversed(coeficientes)), field=cuerpo_primo)
    for grado in range(1, f.degree // 2 + 1):
        for entero in range(p ** grado, 2 * p ** grado):
            if f % galois.Poly.Int(entero, field=cuerpo_primo) == 0:
                return False
    return True


@lru_cache(maxsize=None)
def _construir_cuerpo(p: int, n: int) -> FiniteField:
    if n == 1:
        minimo = (0, 1)
    else:
        poly = galois.irreducible_poly(p, n, method="min")
        minimo = tuple(int(c) for c in reversed(poly.coeffs))
    if not _es_irreducible_por_division(p, minimo):
        raise ErrorConsistencia(f"El polinomio elegido para GF({p}^{n}) no es irreducible: {minimo}")

    cuerpo = FiniteField(p, n, minimo)

    rng = np.random.default_rng(p * 1_000_003 + n)
    a = cuerpo.gf(int(rng.integers(1, cuerpo.order)))
    if a ** (cuerpo.order - 1) != 1:
        raise ErrorConsistencia(f"El grupo multiplicativo de {cuerpo} no tiene orden {cuerpo.order - 1}.")

    logger.info("Cuerpo %s construido con polinomio mínimo %s", cuerpo, list(minimo))
    return cuerpo


def make_field(p: int, n: int) -> FiniteField:
    """
    Retorna GF(p^n) con el polinomio mínimo canónico: el menor mónico
    irreducible de grado n en el orden de enteros de galois.

    Lanza:
        ErrorEntrada si p no es primo o n < 1.
        ErrorCapacidad si p^n supera el tope vigente.
    """
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise ErrorEntrada(f"p = {p} no es primo.")
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ErrorEntrada(f"El grado n debe ser un entero ≥ 1 (recibido {n}).")
    tope = limites_vigentes().max_tamano_cuerpo
    if int(p) ** int(n) > tope:
        raise ErrorCapacidad(f"GF({p}^{n}) supera el tope de tamaño de cuerpo ({tope}).")
    return _construir_cuerpo(int(p), int(n))


def compositum(K: FiniteField, L: FiniteField) -> FiniteField:
    if K.p != L.p:
        raise ErrorEntrada(f"No hay compositum entre característica {K.p} y {L.p}.")
    return make_field(K.p, lcm(K.n, L.n))


def element_from_int(K: FiniteField, entero: int) -> FieldElement:
    if not 0 <= entero < K.order:
        raise ErrorEntrada(f"{entero} no codifica un elemento de {K}.")
    return FieldElement(K, tuple(int(d) for d in K.digitos(K.gf(entero))))


def element_from_array(K: FiniteField, valor) -> FieldElement:
    return element_from_int(K, int(K.enteros(valor)))


# ─────────────────────────────────────────────────────────────────────────────
# Inclusiones compatibles
# ─────────────────────────────────────────────────────────────────────────────
# Para cada destino GF(p^n) se fijan las imágenes de los generadores de todos
# sus subcuerpos, en orden creciente de grado. Cada elección debe coincidir con
# las anteriores sobre el subcuerpo común: así todo triángulo m | k | n conmuta.

_lock_inclusiones = threading.RLock()
_imagenes_por_destino: dict[tuple[int, int], dict[int, int]] = {}
_inclusiones: dict[tuple[int, int, int], FieldEmbedding] = {}


def _aplicar_raiz(origen: FiniteField, destino: FiniteField, raiz: int, entero: int) -> int:
    digitos = destino.gf(origen.digitos(origen.gf(entero)))
    potencias = _potencias(destino.gf(raiz), origen.n)
    acumulado = destino.gf(0)
    for c, potencia in zip(digitos, potencias):
        acumulado = acumulado + c * potencia
    return int(destino.enteros(acumulado))


def _imagenes_en(destino: FiniteField) -> dict[int, int]:
    clave = (destino.p, destino.n)
    with _lock_inclusiones:
        if clave in _imagenes_por_destino:
            return _imagenes_por_destino[clave]

        elegidas: dict[int, int] = {}
        for d in divisors(destino.n):
            origen = _construir_cuerpo(destino.p, d)
            if d == destino.n:
                elegidas[d] = int(destino.enteros(destino.generador()))
                continue
            polinomio = galois.Poly(list(reversed(origen.min_poly)), field=destino.gf)
            candidatas = sorted(int(r) for r in destino.enteros(polinomio.roots()))
            for raiz in candidatas:
                if all(_coinciden(destino, d, raiz, e, elegidas[e]) for e in elegidas):
                    elegidas[d] = raiz
                    break
            else:
                raise ErrorConsistencia(f"No hay inclusión compatible de GF({destino.p}^{d}) en {destino}.")

        logger.debug("Inclusiones fijadas en %s: %s", destino, elegidas)
        return _imagenes_por_destino.setdefault(clave, elegidas)


def _coinciden(destino: FiniteField, d: int, raiz_d: int, e: int, raiz_e: int) -> bool:
    g = gcd(d, e)
    if g == 1:
        return True   # el cuerpo primo va a sí mismo por cualquier inclusión
    cuerpo_d = _construir_cuerpo(destino.p, d)
    cuerpo_e = _construir_cuerpo(destino.p, e)
    via_d = _aplicar_raiz(cuerpo_d, destino, raiz_d, _imagenes_en(cuerpo_d)[g])
    via_e = _aplicar_raiz(cuerpo_e, destino, raiz_e, _imagenes_en(cuerpo_e)[g])
    return via_d == via_e


def embed(K: FiniteField, L: FiniteField) -> FieldEmbedding:
    """
    Inclusión canónica K ↪ L.

    Lanza:
        ErrorEntrada si las características difieren.
        ErrorSubcuerpo si deg(K) no divide a deg(L).
    """
    if K.p != L.p:
        raise ErrorEntrada(f"{K} y {L} tienen característica distinta.")
    if L.n % K.n:
        raise ErrorSubcuerpo(f"{K} no es subcuerpo de {L}: {K.n} no divide a {L.n}.")
    clave = (K.p, K.n, L.n)
    with _lock_inclusiones:
        if clave not in _inclusiones:
            inclusion = FieldEmbedding(K, L, _imagenes_en(L)[K.n])
            _inclusiones.setdefault(clave, inclusion)
        return _inclusiones[clave]


# ─────────────────────────────────────────────────────────────────────────────
# Automorfismos y aritmética
# ─────────────────────────────────────────────────────────────────────────────

def automorphisms(K: FiniteField) -> list[FieldAutomorphism]:
    """Los n automorfismos x ↦ x^(p^e), e = 0..n-1; el primero es la identidad."""
    return [FieldAutomorphism(K, e) for e in range(K.n)]


def _inverso_por_euclides(a: FieldElement) -> FieldElement:
    K = a.owner
    cuerpo_primo = K.prime_gf
    f = galois.Poly(list(reversed(a.coeffs)), field=cuerpo_primo)
    m = galois.Poly(list(reversed(K.min_poly)), field=cuerpo_primo)
    d, s, _ = galois.egcd(f, m)
    if d != galois.Poly.One(field=cuerpo_primo):
        raise ErrorConsistencia(f"El polinomio mínimo de {K} no es coprimo con {list(a.coeffs)}.")
    s = s % m
    coeficientes = [int(c) for c in reversed(s.coeffs)]
    coeficientes += [0] * (K.n - len(coeficientes))
    return FieldElement(K, tuple(coeficientes[:K.n]))


def field_arith(
    a: FieldElement,
    b: Optional[Union[FieldElement, int]],
    op: Union[OperacionCuerpo, str],
) -> FieldElement:
    """
    Aritmética módulo (p, min_poly).

    Parámetros:
        op: add, mul, inv (ignora b) o pow (b es un exponente entero).

    Lanza:
        ErrorEntrada si los operandos son de cuerpos distintos o op no existe.
        ErrorDivisionPorCero en inv(0) y en pow(0, k < 0).
    """
    try:
        op = OperacionCuerpo(op)
    except ValueError:
        raise ErrorEntrada(f"Operación desconocida: {op!r} (add, mul, inv o pow).") from None
    K = a.owner

    if op == OperacionCuerpo.INVERSO:
        if a.es_cero():
            raise ErrorDivisionPorCero(f"{op.label}: 0 no tiene inverso en {K}.")
        return _inverso_por_euclides(a)

    if op == OperacionCuerpo.POTENCIA:
        exponente = int(b)
        if exponente < 0 and a.es_cero():
            raise ErrorDivisionPorCero(f"{op.label}: 0 no admite exponentes negativos en {K}.")
        return element_from_array(K, a.valor ** exponente)

    if not isinstance(b, FieldElement) or b.owner != K:
        raise ErrorEntrada(f"{op.label}: los operandos deben pertenecer al mismo cuerpo.")
    if op == OperacionCuerpo.SUMA:
        return element_from_array(K, a.valor + b.valor)
    return element_from_array(K, a.valor * b.valor)
