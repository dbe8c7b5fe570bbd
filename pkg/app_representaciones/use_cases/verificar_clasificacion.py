# app_representaciones/use_cases/verificar_clasificacion.py
"""
Use case: verificador por lotes de la clasificación sobre F̄.

Para cada W de la muestra (los simples de F_pG más los tipos de sumandos del
regular) y cada grado n ≤ cota se materializan los sumandos de W ⊗ GF(p^n) y
se corren las cláusulas de Clausula. Las fallas no cortan la corrida: quedan
anotadas en el reporte.

Las tareas por (W, n) son independientes y se reparten con services/paralelo;
el reporte se arma fusionando en el orden canónico de las tareas.
"""

import logging
from dataclasses import dataclass, field
from math import lcm
from typing import Callable, Optional

from app_representaciones.domain.enums import Clausula
from app_representaciones.domain.errores import ErrorModular
from app_representaciones.domain.resultados import ClassifiedModule, ReporteVerificacion, ResultadoClausula
from app_representaciones.services.clasificacion import (
    fibra_en_grado,
    gamma_fiber,
    restriccion_homogenea,
    same_absolute_type,
    sigma_fiber,
    up_relation,
)
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.grupos import PermGroup, are_conjugate, normalizer
from app_representaciones.services.meataxe import decompose, is_component, is_isomorphic, is_simple, simple_modules
from app_representaciones.services.green import comparte_vertice_y_fuente, green_correspondent, source, vertex
from app_representaciones.services.modulos import Rep, conjugate_module, extend_scalars, regular_module
from app_representaciones.services.paralelo import mapear
from app_representaciones.use_cases import contar_absolutamente_simples

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────────────────────────────────────

def _resultados_vacios() -> dict[Clausula, ResultadoClausula]:
    return {c: ResultadoClausula(c) for c in Clausula}


def _comprobar(resultado: ResultadoClausula, detalle: str, chequeo: Callable[[], bool]):
    """Corre el chequeo; un ErrorModular cuenta como falla con su mensaje."""
    try:
        ok = bool(chequeo())
    except ErrorModular as e:
        resultado.registrar(False, f"{detalle}: {e}")
        return
    resultado.registrar(ok, detalle)


@dataclass
class _Muestra:
    """Módulo de la muestra con sus datos de Green precalculados."""
    W: Rep
    etiqueta: str
    simple: bool
    vertice: Optional[object] = None
    fuente: Optional[Rep] = None
    normalizador: Optional[PermGroup] = None
    correspondiente: Optional[Rep] = None


@dataclass
class _SalidaTarea:
    indice: int
    n: int
    entradas: list[ClassifiedModule] = field(default_factory=list)
    resultados: dict = field(default_factory=_resultados_vacios)


def _armar_muestra(G: PermGroup, p: int, seed: int) -> list[_Muestra]:
    F = make_field(p, 1)
    simples = simple_modules(G, F, seed).modules
    muestra = [_Muestra(W, f"S{i}(dim {W.dim})", True) for i, W in enumerate(simples)]
    for j, P in enumerate(decompose(regular_module(G, F), seed).tipos()):
        if not any(is_isomorphic(P, m.W, seed).isomorfos for m in muestra):
            muestra.append(_Muestra(P, f"P{j}(dim {P.dim})", False))

    for m in muestra:
        Q = vertex(m.W)
        m.vertice = Q
        m.fuente = source(m.W, Q)
        m.normalizador = normalizer(G, Q)
        m.correspondiente = green_correspondent(m.W, Q, m.normalizador)
    return muestra


# ─────────────────────────────────────────────────────────────────────────────
# Tarea por (W, n)
# ─────────────────────────────────────────────────────────────────────────────

def _tarea(muestra: list[_Muestra], indice: int, n: int, seed: int) -> _SalidaTarea:
    m = muestra[indice]
    W = m.W
    salida = _SalidaTarea(indice, n)
    res = salida.resultados
    K = make_field(W.field.p, n)
    etiqueta = f"{m.etiqueta} ⊗ {K}"

    try:
        entradas = fibra_en_grado(W, n, seed)
    except ErrorModular as e:
        res[Clausula.ORBITA_GALOIS_UNICA].registrar(False, f"{etiqueta}: {e}")
        return salida
    res[Clausula.ORBITA_GALOIS_UNICA].registrar(True, etiqueta)
    salida.entradas = [e.entry for e in entradas]

    for k, Y in enumerate(salida.entradas):
        X = Y.module
        detalle = f"{etiqueta}, componente {k}"

        # U | W⊗K ⇔ W | Res(U); up_relation calcula los dos lados y los contrasta
        _comprobar(res[Clausula.EQUIVALENCIA_EXTENSION_RESTRICCION], detalle, lambda: up_relation(W, X))
        for otro in muestra:
            if otro is not m:
                _comprobar(
                    res[Clausula.EQUIVALENCIA_EXTENSION_RESTRICCION],
                    f"{detalle} frente a {otro.etiqueta}",
                    lambda otro=otro: not up_relation(otro.W, X),
                )

        def homogenea(Y=Y):
            W_res, s = restriccion_homogenea(Y, seed)
            return is_isomorphic(W_res, W, seed).isomorfos and s * W.dim == n * Y.module.dim

        _comprobar(res[Clausula.HOMOGENEIDAD_RESTRICCION], detalle, homogenea)
        _comprobar(
            res[Clausula.SIMPLICIDAD_PRESERVADA],
            detalle,
            lambda: is_simple(X, seed).es_simple == m.simple,
        )
        _comprobar(res[Clausula.INVARIANTES_GREEN], detalle, lambda: _invariantes_green(m, X, K))

        def en_fibra_correspondiente():
            # Gr(X) en la fibra de Gr(W) y con el mismo par vértice-fuente que X
            if vertex(X).clave != m.vertice.clave:
                return False
            Gr_X = green_correspondent(X, m.vertice, m.normalizador)
            return up_relation(m.correspondiente, Gr_X) and comparte_vertice_y_fuente(X, Gr_X, m.vertice)

        _comprobar(res[Clausula.CORRESPONDENCIA_GREEN], detalle, en_fibra_correspondiente)

    if len(salida.entradas) > 1:
        def inyectiva():
            imagenes = [green_correspondent(Y.module, m.vertice, m.normalizador) for Y in salida.entradas]
            return all(
                not is_isomorphic(a, b, seed).isomorfos
                for i, a in enumerate(imagenes)
                for b in imagenes[i + 1:]
            )

        _comprobar(res[Clausula.CORRESPONDENCIA_GREEN], f"{etiqueta}, inyectividad de Gr", inyectiva)

    return salida


def _invariantes_green(m: _Muestra, X: Rep, K) -> bool:
    """
    Q sigue siendo vértice de X, alguna fuente de X es sumando de 𝒲 ⊗ K
    y Gr(X) | Gr(W) ⊗ K.
    """
    G = m.W.group
    Q = vertex(X)
    if are_conjugate(G, Q, m.vertice) is None:
        return False
    # las fuentes de X son únicas salvo conjugación por N_G(Q)
    fuente_x = source(X, m.vertice)
    fuente_w = extend_scalars(m.fuente, K)
    if not any(
        is_component(conjugate_module(fuente_x, int(h)), fuente_w)
        for h in G.indices_de(m.normalizador)
    ):
        return False
    Gr_X = green_correspondent(X, m.vertice, m.normalizador)
    return is_component(Gr_X, extend_scalars(m.correspondiente, K))


# ─────────────────────────────────────────────────────────────────────────────
# Cláusulas globales
# ─────────────────────────────────────────────────────────────────────────────

def _transitividad(muestra, por_tarea, cota: int, resultado: ResultadoClausula):
    """Para d | n: cada sumando en grado n está por encima de alguno en grado d y viceversa."""
    for i, m in enumerate(muestra):
        for n in range(2, cota + 1):
            for d in range(1, n):
                if n % d:
                    continue
                bajos = por_tarea.get((i, d), [])
                altos = por_tarea.get((i, n), [])
                if not bajos or not altos:
                    continue
                detalle = f"{m.etiqueta}: GF(p^{d}) ⊆ GF(p^{n})"
                _comprobar(resultado, f"{detalle}, hacia arriba", lambda: all(
                    any(up_relation(Y, Z) for Z in altos) for Y in bajos
                ))
                _comprobar(resultado, f"{detalle}, hacia abajo", lambda: all(
                    any(up_relation(Y, Z) for Y in bajos) for Z in altos
                ))


def _particion(fibras: list[list[ClassifiedModule]], encontrados, cota: int, seed: int,
               resultado: ResultadoClausula, nombre: str):
    """Fibras de W distintos disjuntas; cada sumando hallado cae en exactamente una."""

    def comparables(a: ClassifiedModule, b: ClassifiedModule) -> bool:
        return lcm(a.field.n, b.field.n) <= cota

    for i, fibra in enumerate(fibras):
        for j in range(i + 1, len(fibras)):
            _comprobar(resultado, f"{nombre}: fibras {i} y {j} disjuntas", lambda fibra=fibra, j=j: not any(
                same_absolute_type(a, b, seed)
                for a in fibra for b in fibras[j] if comparables(a, b)
            ))

    for etiqueta, Y in encontrados:
        def cae_en_una(Y=Y):
            aciertos = [
                i for i, fibra in enumerate(fibras)
                if any(comparables(X, Y) and same_absolute_type(X, Y, seed) for X in fibra)
            ]
            return len(aciertos) == 1

        _comprobar(resultado, f"{nombre}: {etiqueta}", cae_en_una)


# ─────────────────────────────────────────────────────────────────────────────
# Entrada
# ─────────────────────────────────────────────────────────────────────────────

def ejecutar(G: PermGroup, p: int, degree_bound: int, seed: int = 0,
             max_trabajadores: Optional[int] = None) -> ReporteVerificacion:
    """
    Args:
        G:                Grupo de permutaciones dentro del tope.
        p:                Característica.
        degree_bound:     Mayor grado n de los cuerpos GF(p^n) materializados.
        seed:             Semilla del MeatAxe.
        max_trabajadores: Hilos para las tareas por (W, n); None toma settings.

    Nunca lanza por una cláusula falsada: queda en el reporte.
    """
    resultados = _resultados_vacios()
    muestra = _armar_muestra(G, p, seed)
    logger.info("Verificando %s, p=%d, cota %d: muestra de %d módulos", G.etiqueta, p, degree_bound, len(muestra))

    tareas = [(i, n) for i in range(len(muestra)) for n in range(1, degree_bound + 1)]
    salidas = mapear(lambda t: _tarea(muestra, t[0], t[1], seed), tareas, max_trabajadores)

    por_tarea = {}
    for salida in salidas:
        por_tarea[(salida.indice, salida.n)] = salida.entradas
        for clausula, parcial in salida.resultados.items():
            resultados[clausula].absorber(parcial)

    _transitividad(muestra, por_tarea, degree_bound, resultados[Clausula.TRANSITIVIDAD_FIBRA])

    # sumandos absolutamente indescomponibles hallados en todas las tareas
    encontrados = [
        (f"{muestra[i].etiqueta} ⊗ GF(p^{n}), componente {k}", Y)
        for (i, n), entradas in sorted(por_tarea.items())
        for k, Y in enumerate(entradas)
        if Y.absolutely_indecomposable
    ]

    fibras_gamma = []
    for m in muestra:
        try:
            fibras_gamma.append(gamma_fiber(m.W, degree_bound, seed))
        except ErrorModular as e:
            resultados[Clausula.PARTICION_INDESCOMPONIBLES].registrar(False, f"Γ⁻¹({m.etiqueta}): {e}")
            fibras_gamma.append([])
    _particion(fibras_gamma, encontrados, degree_bound, seed,
               resultados[Clausula.PARTICION_INDESCOMPONIBLES], "Γ⁻¹")

    simples = [m for m in muestra if m.simple]
    fibras_sigma = []
    for m in simples:
        try:
            fibras_sigma.append(sigma_fiber(m.W, seed))
        except ErrorModular as e:
            resultados[Clausula.PARTICION_SIMPLES].registrar(False, f"Σ⁻¹({m.etiqueta}): {e}")
            fibras_sigma.append([])
    encontrados_simples = [(etiqueta, Y) for etiqueta, Y in encontrados if Y.absolutely_simple]
    _particion(fibras_sigma, encontrados_simples, degree_bound, seed,
               resultados[Clausula.PARTICION_SIMPLES], "Σ⁻¹")

    def conteo():
        reporte = contar_absolutamente_simples.ejecutar(G, p, seed)
        return reporte.agree

    _comprobar(resultados[Clausula.CONTEO_SIMPLES_ABSOLUTOS], f"{G.etiqueta}, p={p}", conteo)

    reporte = ReporteVerificacion(
        group=G.etiqueta,
        p=p,
        degree_bound=degree_bound,
        seed=seed,
        clausulas=[resultados[c] for c in Clausula],
    )
    for c in reporte.clausulas:
        if not c.aprobada:
            logger.warning("Cláusula %s: %d fallas en %d instancias", c.clausula.value, len(c.fallas), c.instancias)
    return reporte
