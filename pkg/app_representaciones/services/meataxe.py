# app_representaciones/services/meataxe.py
"""
MeatAxe de Las Vegas: simplicidad, factores de composición, estructura de
End, descomposición de Krull–Schmidt, isomorfismo y ITS(KG).

Responsabilidades:
- is_simple por el criterio de Norton (Holt–Rees)
- composition_series / composition_factors por troceo recursivo
- endomorphism_structure: dim End, radical exacta y si End/rad es un cuerpo
- decompose por idempotentes de End (espacios propios generalizados)
- is_isomorphic, is_component, simple_modules

Las respuestas no dependen de la semilla; solo el tiempo de corrida y las
bases elegidas para los representantes.
"""

import itertools
import logging
import threading
import weakref
from typing import Optional

import galois
import numpy as np

from app_representaciones.domain.errores import (
    ErrorEntrada,
    ErrorModuloDescomponible,
    ErrorNoConcluyente,
)
from app_representaciones.domain.resultados import (
    Decomposition,
    EstructuraEndomorfismos,
    ResultadoIsomorfismo,
    ResultadoSimplicidad,
    SerieComposicion,
    SimpleSet,
)
from app_representaciones.services import algebra_lineal as al
from app_representaciones.services.cuerpos import FiniteField
from app_representaciones.services.grupos import PermGroup
from app_representaciones.services.limites import limites_vigentes
from app_representaciones.services.modulos import (
    Rep,
    end_space,
    exigir_mismo_contexto,
    hom_space,
    regular_module,
    submodulo,
)

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────────────────────────
# Álgebras de matrices
# ─────────────────────────────────────────────────────────────────────────────

def _polinomio_caracteristico(M) -> galois.Poly:
    # galois 0.4.6 indexa un menor vacío con matrices 1×1
    if M.shape[0] == 1:
        return galois.Poly(type(M)([1, int(-M[0, 0])]))
    return M.characteristic_poly()


class _Accion:
    """
    Un álgebra de matrices d×d: generadores para el spin y una pila de
    muestras que la genera como espacio vectorial (un elemento uniforme al
    azar es una combinación uniforme de las muestras).
    """

    def __init__(self, GF, dim: int, generadores: list, muestras):
        self.GF = GF
        self.dim = dim
        self.generadores = generadores
        self.muestras = muestras

    @classmethod
    def de_modulo(cls, V: Rep) -> "_Accion":
        return cls(V.GF, V.dim, list(V.matrices), V.imagenes)

    def aleatorio(self, rng):
        coeficientes = self.GF.Random(self.muestras.shape[0], seed=rng)
        return al.combinacion(coeficientes, self.muestras)

    def partir(self, C, C_inv, k: int) -> tuple["_Accion", "_Accion"]:
        """Submódulo (primeras k coordenadas) y cociente tras conjugar por C."""
        generadores = [C @ g @ C_inv for g in self.generadores]
        muestras = al.conjugar_todas(C, C_inv, self.muestras)
        sub = _Accion(self.GF, k, [g[:k, :k] for g in generadores], muestras[:, :k, :k].copy())
        cociente = _Accion(
            self.GF, self.dim - k, [g[k:, k:] for g in generadores], muestras[:, k:, k:].copy()
        )
        return sub, cociente


def _norton(accion: _Accion, rng, intentos: int) -> ResultadoSimplicidad:
    d = accion.dim
    if d == 1:
        return ResultadoSimplicidad(True, "dimensión 1")
    traspuestas = [g.T for g in accion.generadores]

    for intento in range(1, intentos + 1):
        A = accion.aleatorio(rng)
        factores, _ = _polinomio_caracteristico(A).factors()
        for f in sorted(factores, key=lambda f: (f.degree, int(f))):
            N = f(A, elementwise=False)
            nucleo = al.nucleo_izquierdo(N)
            generado = al.spin([nucleo[0]], accion.generadores, d)
            if len(generado) < d:
                logger.debug("Subespacio invariante de dim %d en el intento %d", len(generado), intento)
                return ResultadoSimplicidad(
                    False, f"subespacio invariante de dimensión {len(generado)}", generado.matriz()
                )
            if nucleo.shape[0] != f.degree:
                continue

            # criterio de Norton: falta el lado dual
            dual = al.spin([al.nucleo_izquierdo(N.T)[0]], traspuestas, d)
            if len(dual) < d:
                testigo = al.nucleo_izquierdo(dual.matriz().T)
                return ResultadoSimplicidad(
                    False, f"subespacio invariante de dimensión {testigo.shape[0]} (lado dual)", testigo
                )
            return ResultadoSimplicidad(
                True, f"criterio de Norton con un factor de grado {f.degree} (intento {intento})"
            )

    logger.warning("El test de simplicidad agotó %d intentos en dimensión %d", intentos, d)
    raise ErrorNoConcluyente(f"Sin decisión de simplicidad tras {intentos} intentos (dim {d}).")


def is_simple(V: Rep, seed: int = 0) -> ResultadoSimplicidad:
    """
    Lanza:
        ErrorEntrada si dim V = 0.
        ErrorNoConcluyente si se agotan los intentos.
    """
    if V.dim == 0:
        raise ErrorEntrada("El módulo nulo no es simple ni deja de serlo: dim 0.")
    rng = np.random.default_rng(seed)
    return _norton(_Accion.de_modulo(V), rng, limites_vigentes().max_intentos)


def _trocear(accion: _Accion, rng, intentos: int):
    """Retorna (C, factores) con C·A·C⁻¹ triangular inferior por bloques simples."""
    if accion.dim == 0:
        return accion.GF.Zeros((0, 0)), []
    resultado = _norton(accion, rng, intentos)
    if resultado.es_simple:
        return accion.GF.Identity(accion.dim), [accion]

    k = resultado.testigo.shape[0]
    C = al.completar_base(resultado.testigo)
    C_inv = np.linalg.inv(C)
    sub, cociente = accion.partir(C, C_inv, k)
    C_sub, factores_sub = _trocear(sub, rng, intentos)
    C_cociente, factores_cociente = _trocear(cociente, rng, intentos)
    return al.diagonal_por_bloques(accion.GF, [C_sub, C_cociente]) @ C, factores_sub + factores_cociente


def composition_series(V: Rep, seed: int = 0) -> SerieComposicion:
    rng = np.random.default_rng(seed)
    C, acciones = _trocear(_Accion.de_modulo(V), rng, limites_vigentes().max_intentos)
    factores = [Rep(V.group, V.field, a.dim, tuple(a.generadores)) for a in acciones]
    return SerieComposicion(C, factores)


def composition_factors(V: Rep, seed: int = 0) -> list[Rep]:
    return composition_series(V, seed).factores


# ─────────────────────────────────────────────────────────────────────────────
# Endomorfismos
# ─────────────────────────────────────────────────────────────────────────────

_lock_memo = threading.Lock()
_memo_end: "weakref.WeakKeyDictionary[Rep, tuple]" = weakref.WeakKeyDictionary()
_memo_estructura: "weakref.WeakKeyDictionary[Rep, EstructuraEndomorfismos]" = weakref.WeakKeyDictionary()
_memo_clave: "weakref.WeakKeyDictionary[Rep, tuple]" = weakref.WeakKeyDictionary()


def _base_end(V: Rep) -> tuple:
    with _lock_memo:
        if V in _memo_end:
            return _memo_end[V]
    base = end_space(V).basis
    with _lock_memo:
        return _memo_end.setdefault(V, base)


def end_degree(V: Rep) -> int:
    """dim_K End(V)."""
    return len(_base_end(V))


def _potencia(A, exponente: int):
    resultado = type(A).Identity(A.shape[0])
    base = A
    while exponente:
        if exponente & 1:
            resultado = resultado @ base
        base = base @ base
        exponente >>= 1
    return resultado


def _cociente_es_cuerpo(GF, d: int, base_cociente, mascara, q: int) -> bool:
    """
    B = End/rad como álgebra de matrices diagonales por bloques.
    Es un cuerpo si es conmutativa y {x : x^q = x} tiene dimensión 1 (conteo
    de Berlekamp: esa dimensión es la cantidad de factores simples).
    """
    r = base_cociente.shape[0]
    elementos = []
    for fila in base_cociente:
        X = GF.Zeros((d, d))
        X[mascara] = fila
        elementos.append(X)

    for X, Y in itertools.combinations(elementos, 2):
        if not np.array_equal(X @ Y, Y @ X):
            return False

    frobenius = GF.Zeros((r, r))
    for j, X in enumerate(elementos):
        diferencia = (_potencia(X, q) - X)[mascara]
        frobenius[j] = al.resolver(base_cociente.T, diferencia)
    return r - al.rango(frobenius) == 1


def endomorphism_structure(V: Rep) -> EstructuraEndomorfismos:
    """
    La radical de End(V) son los endomorfismos que anulan cada factor de
    composición de V visto como End-módulo (V es fiel sobre End).
    """
    with _lock_memo:
        if V in _memo_estructura:
            return _memo_estructura[V]

    base = _base_end(V)
    k, d = len(base), V.dim
    if d == 0:
        estructura = EstructuraEndomorfismos(0, 0, False)
    else:
        muestras = V.GF.Zeros((k, d, d))
        for i, B in enumerate(base):
            muestras[i] = B
        accion = _Accion(V.GF, d, list(base), muestras)
        C, factores = _trocear(accion, np.random.default_rng(0), limites_vigentes().max_intentos)
        conjugadas = al.conjugar_todas(C, np.linalg.inv(C), muestras)

        mascara = np.zeros((d, d), dtype=bool)
        inicio = 0
        for factor in factores:
            mascara[inicio:inicio + factor.dim, inicio:inicio + factor.dim] = True
            inicio += factor.dim

        diagonales = conjugadas[:, mascara]
        base_cociente = al.escalonar(diagonales)
        r = base_cociente.shape[0]
        local = _cociente_es_cuerpo(V.GF, d, base_cociente, mascara, V.field.order)
        estructura = EstructuraEndomorfismos(dim_end=k, dim_radical=k - r, es_local=local)

    with _lock_memo:
        return _memo_estructura.setdefault(V, estructura)


def is_indecomposable(V: Rep) -> bool:
    """End(V) local."""
    if V.dim == 0:
        raise ErrorEntrada("El módulo nulo no es indescomponible.")
    return endomorphism_structure(V).es_local


def is_absolutely_indecomposable(V: Rep) -> bool:
    estructura = endomorphism_structure(V)
    return estructura.es_local and estructura.dim_cociente == 1


def is_absolutely_simple(V: Rep, seed: int = 0) -> bool:
    return end_degree(V) == 1 and is_simple(V, seed).es_simple


def clave_canonica(V: Rep) -> tuple:
    """
    (dim, dim End, dim End/rad, polinomios característicos de cada ρ(g),
    dim de puntos fijos). Invariante por isomorfismo pero no completa: los
    empates se rompen con forma_estandar (ver _orden_canonico).
    """
    with _lock_memo:
        if V in _memo_clave:
            return _memo_clave[V]
    estructura = endomorphism_structure(V)
    if V.dim == 0:
        polinomios = ()
        fijos = 0
    else:
        polinomios = tuple(int(_polinomio_caracteristico(V.imagenes[g])) for g in range(V.group.order))
        restas = [(M - V.identidad).T for M in V.matrices]
        fijos = al.nucleo(al.apilar(V.GF, restas, V.dim)).shape[0]
    clave = (V.dim, estructura.dim_end, estructura.dim_cociente, polinomios, fijos)
    with _lock_memo:
        return _memo_clave.setdefault(V, clave)


def _vectores_por_recta(K: FiniteField, d: int):
    """Un vector no nulo por recta: la primera coordenada no nula es 1."""
    for lider in range(d):
        for cola in itertools.product(range(K.order), repeat=d - lider - 1):
            v = K.gf.Zeros(d)
            v[lider] = 1
            if cola:
                v[lider + 1:] = K.gf(list(cola))
            yield v


def _base_de_spin(v, generadores: list, d: int):
    """Vectores v, v·g₁, v·g₂, ... en orden de spin, sin reducir; None si v no genera."""
    independientes = al.BaseEscalonada(type(v), d)
    independientes.agregar(v)
    crudos = [v]
    i = 0
    while i < len(crudos) and len(crudos) < d:
        for g in generadores:
            w = crudos[i] @ g
            if independientes.agregar(w):
                crudos.append(w)
        i += 1
    if len(crudos) < d:
        return None
    return al.apilar(type(v), [u.reshape(1, d) for u in crudos], d)


def forma_estandar(V: Rep) -> Optional[tuple]:
    """
    Mínimo lexicográfico, sobre los vectores cíclicos v, de las matrices de
    los generadores escritas en la base de spin de v. Un isomorfismo lleva
    bases de spin en bases de spin, así que es un invariante completo de los
    módulos cíclicos. None si V no es cíclico o si hay más rectas que el tope
    de barrido.
    """
    K, d = V.field, V.dim
    if d == 0:
        return ()
    if (K.order ** d - 1) // (K.order - 1) > limites_vigentes().tope_barrido:
        return None
    mejor = None
    for v in _vectores_por_recta(K, d):
        B = _base_de_spin(v, list(V.matrices), d)
        if B is None:
            continue
        B_inv = np.linalg.inv(B)
        forma = tuple(int(x) for M in V.matrices for x in K.enteros(B @ M @ B_inv).ravel())
        if mejor is None or forma < mejor:
            mejor = forma
    return mejor


def _desempate(V: Rep) -> tuple:
    forma = forma_estandar(V)
    if forma is None:
        logger.warning("Empate de clave canónica sin forma estándar (dim %d); queda el orden de hallazgo", V.dim)
        return (1, ())
    return (0, forma)


def _orden_canonico(tipos: list[Rep]) -> list[int]:
    """Índices de tipos por clave_canonica; los empates, por forma_estandar."""
    orden = sorted(range(len(tipos)), key=lambda t: clave_canonica(tipos[t]))
    resultado = []
    for _, grupo in itertools.groupby(orden, key=lambda t: clave_canonica(tipos[t])):
        grupo = list(grupo)
        if len(grupo) > 1:
            grupo.sort(key=lambda t: _desempate(tipos[t]))
        resultado.extend(grupo)
    return resultado


# ─────────────────────────────────────────────────────────────────────────────
# Isomorfismo y sumandos
# ─────────────────────────────────────────────────────────────────────────────

def _primer_producto_invertible(H_vu, H_uv):
    for phi in H_vu.basis:
        for psi in H_uv.basis:
            if al.es_invertible(phi @ psi):
                return phi
    return None


def is_component(V: Rep, W: Rep) -> bool:
    """
    V | W para V indescomponible: los φψ (V → W → V) generan el ideal de
    los endomorfismos que factorizan por W; V es sumando si y solo si ese
    ideal no cae en la radical, es decir si algún producto de bases es invertible.
    """
    exigir_mismo_contexto(V, W)
    if not is_indecomposable(V):
        raise ErrorModuloDescomponible("is_component exige un primer argumento indescomponible.")
    if V.dim > W.dim:
        return False
    return _primer_producto_invertible(hom_space(V, W), hom_space(W, V)) is not None


def _barrido(H, rng, intentos: int, tope: int):
    K = H.source.field
    for _ in range(intentos):
        M = H.combinar(K.gf.Random(H.dim, seed=rng))
        if al.es_invertible(M):
            return M
    if K.order ** H.dim <= tope:
        for coeficientes in itertools.product(range(K.order), repeat=H.dim):
            M = H.combinar(K.gf(list(coeficientes)))
            if al.es_invertible(M):
                return M
        return False
    return None


def is_isomorphic(V: Rep, U: Rep, seed: int = 0) -> ResultadoIsomorfismo:
    """
    Exacto: para módulos con End local basta probar productos de bases de
    Hom(V, U) y Hom(U, V); si no, combinaciones al azar, barrido exhaustivo
    cuando |Hom| ≤ tope y, en última instancia, comparación de Krull–Schmidt.
    """
    exigir_mismo_contexto(V, U)
    if V.dim != U.dim:
        return ResultadoIsomorfismo(False, "dimensiones distintas")
    if V.dim == 0:
        return ResultadoIsomorfismo(True, "módulos nulos", V.GF.Zeros((0, 0)))

    H_vu = hom_space(V, U)
    if H_vu.dim == 0:
        return ResultadoIsomorfismo(False, "Hom(V, U) = 0")
    if H_vu.dim != end_degree(V) or H_vu.dim != end_degree(U):
        return ResultadoIsomorfismo(False, "dim Hom(V, U) distinta de dim End")
    H_uv = hom_space(U, V)
    if H_uv.dim != H_vu.dim:
        return ResultadoIsomorfismo(False, "dim Hom(U, V) distinta de dim Hom(V, U)")

    local_v = endomorphism_structure(V).es_local
    local_u = endomorphism_structure(U).es_local
    if local_v != local_u:
        return ResultadoIsomorfismo(False, "uno es indescomponible y el otro no")
    if local_v:
        phi = _primer_producto_invertible(H_vu, H_uv)
        if phi is None:
            return ResultadoIsomorfismo(False, "ningún producto de bases de Hom es invertible")
        return ResultadoIsomorfismo(True, "producto de bases invertible", phi)

    limites = limites_vigentes()
    rng = np.random.default_rng(seed)
    encontrado = _barrido(H_vu, rng, limites.max_intentos, limites.tope_barrido)
    if encontrado is False:
        return ResultadoIsomorfismo(False, f"barrido exhaustivo de {V.field.order ** H_vu.dim} elementos de Hom")
    if encontrado is not None:
        return ResultadoIsomorfismo(True, "intertwiner invertible", encontrado)

    iguales = _mismos_tipos(decompose(V, seed), decompose(U, seed), seed)
    return ResultadoIsomorfismo(iguales, "comparación de sumandos indescomponibles")


def _mismos_tipos(a: Decomposition, b: Decomposition, seed: int) -> bool:
    if len(a.summands) != len(b.summands):
        return False
    pendientes = list(b.summands)
    for tipo, mult in a.summands:
        for i, (otro, mult_otro) in enumerate(pendientes):
            if mult == mult_otro and is_isomorphic(tipo, otro, seed):
                del pendientes[i]
                break
        else:
            return False
    return True


# ─────────────────────────────────────────────────────────────────────────────
# Krull–Schmidt
# ─────────────────────────────────────────────────────────────────────────────

def _partir(W: Rep, rng, intentos: int) -> list:
    """Bases (filas, en coordenadas de W) de sumandos indescomponibles."""
    if endomorphism_structure(W).es_local:
        return [W.identidad]

    base = _base_end(W)
    muestras = W.GF.Zeros((len(base), W.dim, W.dim))
    for i, B in enumerate(base):
        muestras[i] = B
    for intento in range(1, intentos + 1):
        phi = al.combinacion(W.GF.Random(len(base), seed=rng), muestras)
        factores, multiplicidades = _polinomio_caracteristico(phi).factors()
        if len(factores) < 2:
            continue
        logger.debug("Idempotente hallado en el intento %d (dim %d)", intento, W.dim)
        piezas = []
        for f, e in zip(factores, multiplicidades):
            espacio = al.nucleo_izquierdo((f ** int(e))(phi, elementwise=False))
            for sub_base in _partir(submodulo(W, espacio), rng, intentos):
                piezas.append(sub_base @ espacio)
        return piezas

    logger.warning("No se halló un idempotente tras %d intentos (dim %d)", intentos, W.dim)
    raise ErrorNoConcluyente(f"Sin idempotente no trivial tras {intentos} intentos.")


def decompose(V: Rep, seed: int = 0) -> Decomposition:
    """
    V = ⊕ sumandos indescomponibles, agrupados por tipo de isomorfismo en orden
    canónico. basis_change apila las bases de los sumandos en ese orden.
    """
    if V.dim == 0:
        return Decomposition([], V.GF.Zeros((0, 0)), [])

    rng = np.random.default_rng(seed)
    bases = _partir(V, rng, limites_vigentes().max_intentos)

    tipos: list[Rep] = []
    miembros: list[list] = []
    for B in bases:
        sumando = submodulo(V, B)
        for t, tipo in enumerate(tipos):
            if clave_canonica(tipo) == clave_canonica(sumando) and is_isomorphic(tipo, sumando, seed):
                miembros[t].append(B)
                break
        else:
            tipos.append(sumando)
            miembros.append([B])

    orden = _orden_canonico(tipos)
    filas, bloques = [], []
    for nuevo, t in enumerate(orden):
        for B in miembros[t]:
            filas.append(B)
            bloques.append((nuevo, B.shape[0]))

    return Decomposition(
        summands=[(tipos[t], len(miembros[t])) for t in orden],
        basis_change=al.apilar(V.GF, filas, V.dim),
        bloques=bloques,
    )


def simple_modules(G: PermGroup, K: FiniteField, seed: int = 0) -> SimpleSet:
    """ITS(KG): factores de composición del regular, sin repetir tipos, en orden canónico."""
    tipos: list[Rep] = []
    for factor in composition_factors(regular_module(G, K), seed):
        if not any(
            clave_canonica(t) == clave_canonica(factor) and is_isomorphic(t, factor, seed)
            for t in tipos
        ):
            tipos.append(factor)
    tipos = [tipos[t] for t in _orden_canonico(tipos)]
    logger.info("%s sobre %s: %d simples de dims %s", G.etiqueta, K, len(tipos), [t.dim for t in tipos])
    return SimpleSet(G, K, tipos, [end_degree(t) for t in tipos])
