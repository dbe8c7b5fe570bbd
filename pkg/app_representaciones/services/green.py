# app_representaciones/services/green.py
"""
Proyectividad relativa, vértices, fuentes y correspondencia de Green.

Responsabilidades:
- is_relatively_projective: criterio de Higman como un único sistema lineal
- vertex / source / vertex_source
- green_correspondent: el único sumando de Res_H(V) con vértice H-conjugado a Q
- comparte_vertice_y_fuente: el par (vértice, fuente) que la correspondencia preserva
"""

import logging
import threading

from app_representaciones.domain.errores import (
    ErrorConsistencia,
    ErrorModuloDescomponible,
    ErrorSubgrupo,
)
from app_representaciones.domain.resultados import ResultadoProyectividad, VertexSourcePair
from app_representaciones.services import algebra_lineal as al
from app_representaciones.services.grupos import (
    PermGroup,
    Subgroup,
    are_conjugate,
    normalizer,
    p_subgroups_up_to_conjugacy,
)
from app_representaciones.services.meataxe import decompose, is_component, is_indecomposable, is_isomorphic
from app_representaciones.services.modulos import (
    Rep,
    conjugate_module,
    end_space,
    induce,
    relative_trace,
    restrict_subgroup,
)

logger = logging.getLogger(__name__)

# (huella del módulo, elementos de Q) → ResultadoProyectividad; first-writer-wins
_memo_proyectividad: dict[tuple[str, frozenset], ResultadoProyectividad] = {}
_lock_memo = threading.Lock()


def is_relatively_projective(V: Rep, Q: PermGroup) -> ResultadoProyectividad:
    """
    V es Q-proyectivo si y solo si existe φ ∈ End_{KQ}(Res_Q V) con
    Tr_Q^G(φ) = Id. Se resuelve Σ c_i·Tr(φ_i) = Id sobre una base de End_{KQ}.

    Lanza:
        ErrorSubgrupo si Q no está contenido en el grupo de V.
    """
    G = V.group
    if not G.contiene(Q):
        raise ErrorSubgrupo(f"{Q.etiqueta} no es subgrupo de {G.etiqueta}.")
    clave = (V.huella, Q.clave)
    with _lock_memo:
        if clave in _memo_proyectividad:
            return _memo_proyectividad[clave]

    base = end_space(restrict_subgroup(V, Q)).basis
    d = V.dim
    trazas = V.GF.Zeros((d * d, len(base)))
    for i, phi in enumerate(base):
        trazas[:, i] = relative_trace(V, Q, phi).reshape(d * d)
    coeficientes = al.resolver(trazas, V.identidad.reshape(d * d))

    if coeficientes is None:
        resultado = ResultadoProyectividad(False, f"Tr de {Q.etiqueta} a G no alcanza la identidad")
    else:
        phi = V.GF.Zeros((d, d))
        for c, B in zip(coeficientes, base):
            phi = phi + c * B
        resultado = ResultadoProyectividad(True, f"φ con Tr(φ) = Id sobre {Q.etiqueta}", phi)

    with _lock_memo:
        return _memo_proyectividad.setdefault(clave, resultado)


def vertex(V: Rep) -> Subgroup:
    """
    El p-subgrupo representativo de menor orden respecto del cual V es
    relativamente proyectivo. Todos los mínimos hallados deben ser conjugados.

    Lanza:
        ErrorModuloDescomponible si V no es indescomponible.
        ErrorConsistencia si hay dos mínimos no conjugados.
    """
    if not is_indecomposable(V):
        raise ErrorModuloDescomponible("vertex exige un módulo indescomponible: descomponerlo primero.")
    G = V.group
    candidatos = p_subgroups_up_to_conjugacy(G, V.field.p)

    for orden in sorted({Q.order for Q in candidatos}):
        # el primer orden con algún proyectivo es el del vértice
        minimos = [Q for Q in candidatos if Q.order == orden and is_relatively_projective(V, Q)]
        logger.debug("Orden %d: %d candidatos proyectivos", orden, len(minimos))
        if not minimos:
            continue
        if len(minimos) > 1:
            raise ErrorConsistencia(
                f"Vértices mínimos no conjugados de orden {orden}: {[Q.etiqueta for Q in minimos]}"
            )
        return minimos[0]

    raise ErrorConsistencia("Ningún p-subgrupo proyectivo: falla el criterio sobre el Sylow.")


def source(V: Rep, Q: Subgroup) -> Rep:
    """
    El primer sumando (en orden canónico) U de Res_Q(V) con V | Ind_Q^G(U).

    Lanza:
        ErrorConsistencia si ningún sumando califica.
    """
    G = V.group
    for U, _ in decompose(restrict_subgroup(V, Q)).summands:
        if is_component(V, induce(U, G)):
            return U
    raise ErrorConsistencia(f"Ningún sumando de la restricción a {Q.etiqueta} induce de vuelta a V.")


def vertex_source(V: Rep) -> VertexSourcePair:
    Q = vertex(V)
    return VertexSourcePair(Q, source(V, Q))


def green_correspondent(V: Rep, Q: Subgroup, H: PermGroup) -> Rep:
    """
    Gr_G^H(V): el único sumando de Res_H(V) cuyo vértice en H es H-conjugado
    a Q. H debe contener a N_G(Q).

    Lanza:
        ErrorSubgrupo si H no contiene a N_G(Q).
        ErrorConsistencia si no hay exactamente uno.
    """
    G = V.group
    if not H.contiene(normalizer(G, Q)):
        raise ErrorSubgrupo(f"{H.etiqueta} no contiene al normalizador de {Q.etiqueta}.")
    if H.clave == G.clave:
        return V

    calificados = []
    for U, multiplicidad in decompose(restrict_subgroup(V, H)).summands:
        vertice = vertex(U)
        if vertice.order == Q.order and are_conjugate(H, vertice, Q) is not None:
            calificados.extend([U] * multiplicidad)
    if len(calificados) != 1:
        raise ErrorConsistencia(
            f"La restricción a {H.etiqueta} tiene {len(calificados)} sumandos con vértice {Q.etiqueta}."
        )
    return calificados[0]


def comparte_vertice_y_fuente(V: Rep, U: Rep, Q: Subgroup) -> bool:
    """
    U, módulo de un H ≥ N_G(Q), tiene vértice H-conjugado a Q y una fuente
    isomorfa a la de V salvo conjugación por N_G(Q). Q es el vértice de V.
    """
    G, H = V.group, U.group
    vertice = vertex(U)
    if vertice.order != Q.order or are_conjugate(H, vertice, Q) is None:
        return False
    fuente_v = source(V, Q)
    fuente_u = source(U, Q)
    return any(
        is_isomorphic(conjugate_module(fuente_u, int(h)), fuente_v).isomorfos
        for h in G.indices_de(normalizer(G, Q))
    )
