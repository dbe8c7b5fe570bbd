# app_representaciones/services/clasificacion.py
"""
Clasificación de módulos sobre la clausura algebraica F̄ de F = GF(p).

Un F̄G-módulo se representa por un par (K, V) con K finito y V absolutamente
indescomponible sobre K: el par significa V ⊗_K F̄. Nada infinito se guarda.

Responsabilidades:
- up_relation: (K, V) ↑ (L, U), calculado en ambos sentidos y contrastado
- fiber: ℰ(W) grado a grado, con órbitas de Galois
- descend_component / minimal_field: el menor cuerpo de definición
- gamma_of / sigma_of y sus fibras gamma_fiber / sigma_fiber
- same_absolute_type: isomorfismo sobre F̄ vía compositum
"""

import logging
from typing import Optional, Union

from django.conf import settings
from sympy import divisors

from app_representaciones.domain.errores import (
    ErrorConsistencia,
    ErrorEntrada,
    ErrorGradoDescomposicion,
    ErrorIndice,
    ErrorModuloDescomponible,
    ErrorModuloNoSimple,
)
from app_representaciones.domain.resultados import ClassifiedModule, FiberEntry
from app_representaciones.services.cuerpos import FiniteField, automorphisms, compositum, make_field
from app_representaciones.services.meataxe import (
    decompose,
    end_degree,
    endomorphism_structure,
    is_component,
    is_indecomposable,
    is_isomorphic,
    is_simple,
)
from app_representaciones.services.modulos import (
    Rep,
    extend_scalars,
    frobenius_twist,
    restrict_scalars,
)

logger = logging.getLogger(__name__)

Par = Union[ClassifiedModule, Rep]


def _modulo(x: Par) -> Rep:
    return x.module if isinstance(x, ClassifiedModule) else x


def _exigir_cuerpo_primo(W: Rep):
    if W.field.n != 1:
        raise ErrorEntrada(f"W debe estar definido sobre el cuerpo primo (llegó sobre {W.field}).")


def _exigir_indescomponible(V: Rep, operacion: str):
    if not is_indecomposable(V):
        raise ErrorModuloDescomponible(f"{operacion} exige un módulo indescomponible: descomponerlo primero.")


def clasificar(V: Rep, seed: int = 0) -> ClassifiedModule:
    """El par (K, V) con sus banderas absolutas."""
    _exigir_indescomponible(V, "clasificar")
    estructura = endomorphism_structure(V)
    return ClassifiedModule(
        field=V.field,
        module=V,
        absolutely_simple=estructura.dim_end == 1 and is_simple(V, seed).es_simple,
        absolutely_indecomposable=estructura.dim_cociente == 1,
    )


# ─────────────────────────────────────────────────────────────────────────────
# ↑
# ─────────────────────────────────────────────────────────────────────────────

def up_relation(a: Par, b: Par) -> bool:
    """
    (K, V) ↑ (L, U) si K ⊆ L y U | V ⊗_K L. Se calcula también V | Res_K^L(U)
    y ambas respuestas deben coincidir.

    Lanza:
        ErrorModuloDescomponible si alguno no es indescomponible.
        ErrorConsistencia si los dos sentidos discrepan.
    """
    V, U = _modulo(a), _modulo(b)
    _exigir_indescomponible(V, "up_relation")
    _exigir_indescomponible(U, "up_relation")
    K, L = V.field, U.field
    if K.p != L.p or L.n % K.n:
        return False

    por_extension = is_component(U, extend_scalars(V, L))
    por_restriccion = is_component(V, restrict_scalars(U, K))
    if por_extension != por_restriccion:
        raise ErrorConsistencia(
            f"↑ discrepa entre {K} y {L}: U | V⊗L = {por_extension}, V | Res(U) = {por_restriccion}"
        )
    return por_extension


# ─────────────────────────────────────────────────────────────────────────────
# Fibras ℰ(W)
# ─────────────────────────────────────────────────────────────────────────────

def galois_orbits(tipos: list[Rep], seed: int = 0) -> list[int]:
    """Índice de órbita de Aut(K) para cada tipo (tipos dos a dos no isomorfos)."""
    orbitas = [-1] * len(tipos)
    siguiente = 0
    for i, tipo in enumerate(tipos):
        if orbitas[i] >= 0:
            continue
        orbitas[i] = siguiente
        for sigma in automorphisms(tipo.field)[1:]:
            torcido = frobenius_twist(tipo, sigma)
            for j in range(i + 1, len(tipos)):
                if orbitas[j] < 0 and is_isomorphic(torcido, tipos[j], seed).isomorfos:
                    orbitas[j] = siguiente
                    break
        siguiente += 1
    return orbitas


def fibra_en_grado(W: Rep, n: int, seed: int = 0) -> list[FiberEntry]:
    """
    Los sumandos de W ⊗ GF(p^n) con su órbita y multiplicidad.

    Lanza:
        ErrorConsistencia si forman más de una órbita de Galois.
    """
    K = make_field(W.field.p, n)
    descomposicion = decompose(extend_scalars(W, K), seed)
    orbitas = galois_orbits(descomposicion.tipos(), seed)
    if len(set(orbitas)) > 1:
        raise ErrorConsistencia(f"Los sumandos de W ⊗ {K} forman {len(set(orbitas))} órbitas de Galois.")
    return [
        FiberEntry(clasificar(tipo, seed), orbita, multiplicidad)
        for (tipo, multiplicidad), orbita in zip(descomposicion.summands, orbitas)
    ]


def fiber(W: Rep, degree_bound: int, seed: int = 0) -> list[FiberEntry]:
    """ℰ(W) materializado para los cuerpos GF(p^n), n = 1..degree_bound."""
    _exigir_cuerpo_primo(W)
    _exigir_indescomponible(W, "fiber")
    entradas = []
    for n in range(1, degree_bound + 1):
        entradas.extend(fibra_en_grado(W, n, seed))
    logger.info("Fibra de W (dim %d) hasta grado %d: %d entradas", W.dim, degree_bound, len(entradas))
    return entradas


# ─────────────────────────────────────────────────────────────────────────────
# Descenso
# ─────────────────────────────────────────────────────────────────────────────

def _descender(W: Rep, X: Rep, seed: int) -> ClassifiedModule:
    L = X.field
    for m in divisors(L.n):
        K = make_field(L.p, m)
        for V in decompose(extend_scalars(W, K), seed).tipos():
            if is_isomorphic(extend_scalars(V, L), X, seed).isomorfos:
                return clasificar(V, seed)
    raise ErrorConsistencia(f"X no desciende a ningún subcuerpo de {L}, ni siquiera a {L}.")


def descend_component(W: Rep, n: int, component_index: int, seed: int = 0) -> ClassifiedModule:
    """
    (K, V) con K el menor subcuerpo de GF(p^n) sobre el que el componente
    X de W ⊗ GF(p^n) está definido: V ⊗_K GF(p^n) ≅ X.

    Lanza:
        ErrorIndice si component_index no direcciona un componente.
    """
    _exigir_cuerpo_primo(W)
    L = make_field(W.field.p, n)
    tipos = decompose(extend_scalars(W, L), seed).tipos()
    if not 0 <= component_index < len(tipos):
        raise ErrorIndice(f"Índice {component_index} fuera de rango: W ⊗ {L} tiene {len(tipos)} componentes.")
    return _descender(W, tipos[component_index], seed)


def minimal_field(Y: ClassifiedModule, seed: int = 0) -> ClassifiedModule:
    """Un par equivalente a Y sobre el menor cuerpo posible."""
    return _descender(gamma_of(Y, seed), Y.module, seed)


# ─────────────────────────────────────────────────────────────────────────────
# Γ y Σ
# ─────────────────────────────────────────────────────────────────────────────

def restriccion_homogenea(Y: ClassifiedModule, seed: int = 0) -> tuple[Rep, int]:
    """
    Res_F^K(V) ≅ s·W. Retorna (W, s).

    Lanza:
        ErrorConsistencia si la restricción tiene más de un tipo de sumando.
    """
    F = make_field(Y.field.p, 1)
    descomposicion = decompose(restrict_scalars(Y.module, F), seed)
    if len(descomposicion.summands) != 1:
        raise ErrorConsistencia(
            f"Res a {F} de un módulo sobre {Y.field} tiene {len(descomposicion.summands)} tipos de sumando."
        )
    return descomposicion.summands[0]


def gamma_of(Y: ClassifiedModule, seed: int = 0) -> Rep:
    """Γ(Y): el único W sobre F con (F, W) ↑ (K, V)."""
    if not Y.absolutely_indecomposable:
        raise ErrorEntrada("gamma_of exige un par absolutamente indescomponible.")
    W, _ = restriccion_homogenea(Y, seed)
    return W


def sigma_of(X: ClassifiedModule, seed: int = 0) -> Rep:
    """Σ(X) ∈ ITS(FG)."""
    if not X.absolutely_simple:
        raise ErrorEntrada("sigma_of exige un par absolutamente simple.")
    W = gamma_of(X, seed)
    if not is_simple(W, seed).es_simple:
        raise ErrorConsistencia("Σ de un módulo absolutamente simple no resultó simple.")
    return W


def sigma_fiber(W: Rep, seed: int = 0) -> list[ClassifiedModule]:
    """
    Σ⁻¹(W): los sumandos de W ⊗ GF(p^m), m = dim End(W). Deben ser m
    absolutamente simples, dos a dos no isomorfos y en una sola órbita.

    Lanza:
        ErrorModuloNoSimple si W no es simple.
        ErrorConsistencia si falla alguna de esas condiciones.
    """
    _exigir_cuerpo_primo(W)
    if not is_simple(W, seed).es_simple:
        raise ErrorModuloNoSimple("sigma_fiber exige un módulo simple.")
    m = end_degree(W)
    entradas = fibra_en_grado(W, m, seed)

    if any(e.multiplicity != 1 for e in entradas):
        raise ErrorConsistencia(f"W ⊗ GF({W.field.p}^{m}) no es libre de multiplicidades.")
    if len(entradas) != m:
        raise ErrorConsistencia(f"|Σ⁻¹(W)| = {len(entradas)} distinto de dim End(W) = {m}.")
    if not all(e.entry.absolutely_simple for e in entradas):
        raise ErrorConsistencia(f"Hay sumandos de W ⊗ GF({W.field.p}^{m}) que no son absolutamente simples.")
    return [e.entry for e in entradas]


def gamma_fiber(W: Rep, degree_bound: Optional[int] = None, seed: int = 0) -> list[ClassifiedModule]:
    """
    Γ⁻¹(W): un representante por tipo de los sumandos de W ⊗ GF(p^n), con n
    el primer múltiplo de m = dim End/rad en el que todos son absolutamente
    indescomponibles.

    Lanza:
        ErrorGradoDescomposicion si ese n supera la cota.
    """
    _exigir_cuerpo_primo(W)
    _exigir_indescomponible(W, "gamma_fiber")
    cota = degree_bound or settings.COTA_GRADO
    m = endomorphism_structure(W).dim_cociente

    for n in range(m, cota + 1, m):
        K = make_field(W.field.p, n)
        clasificados = [clasificar(T, seed) for T in decompose(extend_scalars(W, K), seed).tipos()]
        if all(c.absolutely_indecomposable for c in clasificados):
            return clasificados
        logger.warning("Sumandos no absolutamente indescomponibles sobre %s; se prueba un múltiplo", K)

    raise ErrorGradoDescomposicion(f"El grado de descomposición de W supera la cota {cota}.")


def splitting_degree(W: Rep, degree_bound: Optional[int] = None, seed: int = 0) -> int:
    """Menor n (múltiplo de dim End/rad) con W ⊗ GF(p^n) absolutamente indescomponible por sumandos."""
    return gamma_fiber(W, degree_bound, seed)[0].field.n


def same_absolute_type(a: Par, b: Par, seed: int = 0) -> bool:
    """¿V ⊗ F̄ ≅ U ⊗ F̄? Se extienden ambos al compositum y se comparan."""
    V, U = _modulo(a), _modulo(b)
    if V.dim != U.dim:
        return False
    M: FiniteField = compositum(V.field, U.field)
    return is_isomorphic(extend_scalars(V, M), extend_scalars(U, M), seed).isomorfos
