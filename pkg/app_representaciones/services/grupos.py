# app_representaciones/services/grupos.py
"""
Grupos finitos como grupos de permutaciones, enumerados exhaustivamente.

Responsabilidades:
- Cerrar un conjunto de generadores (group_from_generators)
- Clases de conjugación y clases p-regulares (oráculo del conteo)
- p-subgrupos salvo conjugación, normalizadores y transversales a derecha

Convenciones:
- Permutaciones como tuplas de imágenes 0-based; los elementos se ordenan
  lexicográficamente, así la identidad es siempre el elemento 0.
- g*h aplica primero g y luego h: (g*h)[i] = h[g[i]].
- Q^g = g⁻¹ Q g.
- Las operaciones que devuelven elementos devuelven índices en G.elements.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import numpy as np
from sympy import isprime
from sympy.combinatorics import Permutation, PermutationGroup

from app_representaciones.domain.errores import ErrorCapacidad, ErrorEntrada, ErrorSubgrupo
from app_representaciones.services.limites import limites_vigentes

logger = logging.getLogger(__name__)

Permutacion = tuple[int, ...]


def componer(a: Permutacion, b: Permutacion) -> Permutacion:
    """a*b: primero a, luego b."""
    return tuple(b[i] for i in a)


def invertir(a: Permutacion) -> Permutacion:
    inversa = [0] * len(a)
    for i, imagen in enumerate(a):
        inversa[imagen] = i
    return tuple(inversa)


def en_ciclos(a: Permutacion) -> str:
    """Notación de ciclos 1-based, p. ej. '(1 2)(3 4)'; '()' para la identidad."""
    ciclos = Permutation(list(a)).cyclic_form
    if not ciclos:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in ciclo) + ")" for ciclo in ciclos)


# ─────────────────────────────────────────────────────────────────────────────
# Tipos
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(eq=False)
class PermGroup:
    degree: int
    generators: tuple[Permutacion, ...]
    elements: tuple[Permutacion, ...]
    nombre: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def etiqueta(self) -> str:
        return self.nombre or f"<grado {self.degree}, orden {self.order}>"

    @cached_property
    def indice(self) -> dict[Permutacion, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def clave(self) -> frozenset:
        return frozenset(self.elements)

    @cached_property
    def tabla(self) -> np.ndarray:
        """tabla[i, j] = índice de elements[i] * elements[j]."""
        E = np.array(self.elements, dtype=np.int64).reshape(self.order, self.degree)
        tabla = np.empty((self.order, self.order), dtype=np.int64)
        for i in range(self.order):
            productos = E[:, E[i]]   # fila j: e_i * e_j
            tabla[i] = [self.indice[tuple(fila)] for fila in productos.tolist()]
        return tabla

    @cached_property
    def inversos(self) -> np.ndarray:
        return np.array([self.indice[invertir(e)] for e in self.elements], dtype=np.int64)

    @cached_property
    def indices_generadores(self) -> tuple[int, ...]:
        return tuple(self.indice[g] for g in self.generators)

    @cached_property
    def arbol_palabras(self) -> list[tuple[int, int, int]]:
        """
        Factorización fija de cada elemento como palabra en los generadores.
        Lista en orden BFS de (elemento, padre, posición del generador) con
        elemento = padre * generador; la identidad no figura.
        """
        visitados = {0}
        arbol = []
        cola = deque([0])
        while cola:
            x = cola.popleft()
            for pos, s in enumerate(self.indices_generadores):
                y = int(self.tabla[x, s])
                if y not in visitados:
                    visitados.add(y)
                    arbol.append((y, x, pos))
                    cola.append(y)
        return arbol

    @cached_property
    def ordenes(self) -> np.ndarray:
        ordenes = np.ones(self.order, dtype=np.int64)
        for i in range(1, self.order):
            x, k = i, 1
            while x != 0:
                x = int(self.tabla[x, i])
                k += 1
            ordenes[i] = k
        return ordenes

    def element_order(self, i: int) -> int:
        return int(self.ordenes[i])

    def conjugar(self, indices, g: int) -> np.ndarray:
        """g⁻¹ x g para cada x en indices."""
        indices = np.asarray(indices, dtype=np.int64)
        return self.tabla[self.tabla[self.inversos[g], indices], g]

    def indices_de(self, H: "PermGroup") -> np.ndarray:
        """Índices en self de los elementos de H; falla si H no está contenido."""
        try:
            return np.array([self.indice[e] for e in H.elements], dtype=np.int64)
        except KeyError:
            raise ErrorSubgrupo(f"{H.etiqueta} no es subgrupo de {self.etiqueta}.") from None

    def contiene(self, H: "PermGroup") -> bool:
        return H.degree == self.degree and all(e in self.indice for e in H.elements)

    def to_dict(self):
        return {
            "degree": self.degree,
            "generators": [[i + 1 for i in g] for g in self.generators],
        }


@dataclass(eq=False)
class Subgroup(PermGroup):
    parent: Optional[PermGroup] = None


# ─────────────────────────────────────────────────────────────────────────────
# Construcción
# ─────────────────────────────────────────────────────────────────────────────

def _validar_generador(degree: int, imagenes) -> Permutacion:
    imagenes = [int(i) for i in imagenes]
    if len(imagenes) != degree or sorted(imagenes) != list(range(1, degree + 1)):
        raise ErrorEntrada(f"{imagenes} no es una biyección de 1..{degree}.")
    return tuple(i - 1 for i in imagenes)


def _cerrar(generadores: Iterable[Permutacion], identidad: Permutacion) -> list[Permutacion]:
    elementos = {identidad}
    cola = deque([identidad])
    generadores = list(generadores)
    while cola:
        x = cola.popleft()
        for s in generadores:
            y = componer(x, s)
            if y not in elementos:
                elementos.add(y)
                cola.append(y)
    return sorted(elementos)


def group_from_generators(degree: int, gens, nombre: str = "") -> PermGroup:
    """
    Construye el grupo generado por gens (vectores de imágenes 1-based).

    Lanza:
        ErrorEntrada si algún generador no es biyección de 1..degree.
        ErrorCapacidad si el orden supera el tope vigente.
    """
    if not isinstance(degree, (int, np.integer)) or degree < 1:
        raise ErrorEntrada(f"El grado debe ser un entero ≥ 1 (recibido {degree}).")
    generadores = tuple(_validar_generador(degree, g) for g in gens)

    tope = limites_vigentes().max_orden_grupo
    if generadores:
        # Schreier–Sims de sympy: rechaza grupos enormes sin enumerarlos
        orden = PermutationGroup([Permutation(list(g)) for g in generadores]).order()
        if orden > tope:
            raise ErrorCapacidad(f"El grupo tiene orden {orden}, mayor al tope ({tope}).")

    elementos = _cerrar(generadores, tuple(range(degree)))
    logger.info("Grupo %s construido: grado %d, orden %d", nombre or "anónimo", degree, len(elementos))
    return PermGroup(degree, generadores, tuple(elementos), nombre)


def _cerrar_indices(G: PermGroup, semilla: Iterable[int]) -> set[int]:
    generados = {0}
    cola = deque([0])
    semilla = list(semilla)
    while cola:
        x = cola.popleft()
        for s in semilla:
            y = int(G.tabla[x, s])
            if y not in generados:
                generados.add(y)
                cola.append(y)
    return generados


def subgroup_from_elements(G: PermGroup, indices, nombre: str = "") -> Subgroup:
    """
    Subgrupo de G con los elementos dados (índices en G).
    Los generadores se eligen de forma determinista: recorriendo los
    elementos en orden, se agrega cada uno que no esté ya generado.

    Lanza:
        ErrorSubgrupo si el conjunto no es cerrado por producto.
    """
    indices = sorted({int(i) for i in indices})
    conjunto = set(indices)
    if 0 not in conjunto or any(int(G.tabla[a, b]) not in conjunto for a in indices for b in indices):
        raise ErrorSubgrupo(f"El conjunto de {len(indices)} elementos no es subgrupo de {G.etiqueta}.")

    generadores: list[int] = []
    generados = {0}
    for i in indices:
        if i not in generados:
            generadores.append(i)
            generados = _cerrar_indices(G, generadores)

    return Subgroup(
        degree=G.degree,
        generators=tuple(G.elements[i] for i in generadores),
        elements=tuple(G.elements[i] for i in indices),
        nombre=nombre,
        parent=G,
    )


def trivial_subgroup(G: PermGroup) -> Subgroup:
    return subgroup_from_elements(G, [0], nombre="1")


def whole_group(G: PermGroup) -> Subgroup:
    return subgroup_from_elements(G, range(G.order), nombre=G.nombre)


# ─────────────────────────────────────────────────────────────────────────────
# Clases de conjugación
# ─────────────────────────────────────────────────────────────────────────────

def conjugacy_classes(G: PermGroup) -> list[tuple[int, ...]]:
    """
    Partición de los elementos (índices) en clases de conjugación,
    ordenadas por orden del elemento y luego por menor índice.
    """
    asignado = np.full(G.order, -1, dtype=np.int64)
    clases = []
    for x in range(G.order):
        if asignado[x] >= 0:
            continue
        clase = np.unique(G.tabla[G.tabla[G.inversos, x], np.arange(G.order)])
        asignado[clase] = len(clases)
        clases.append(tuple(int(c) for c in clase))
    clases.sort(key=lambda c: (G.element_order(c[0]), c[0]))
    return clases


def p_regular_class_count(G: PermGroup, p: int) -> int:
    """Cantidad de clases cuyos elementos tienen orden coprimo con p."""
    if not isprime(p):
        raise ErrorEntrada(f"p = {p} no es primo.")
    return sum(1 for clase in conjugacy_classes(G) if G.element_order(clase[0]) % p != 0)


# ─────────────────────────────────────────────────────────────────────────────
# p-subgrupos, normalizadores, transversales
# ─────────────────────────────────────────────────────────────────────────────

def _es_potencia_de(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def sylow_order(G: PermGroup, p: int) -> int:
    orden = 1
    while G.order % (orden * p) == 0:
        orden *= p
    return orden


def _normalizador_indices(G: PermGroup, S: frozenset) -> list[int]:
    objetivo = np.array(sorted(S), dtype=np.int64)
    return [g for g in range(G.order) if np.array_equal(np.sort(G.conjugar(objetivo, g)), objetivo)]


def _forma_canonica(G: PermGroup, S: frozenset) -> tuple[int, ...]:
    """El conjugado de S con la tupla ordenada de índices lexicográficamente menor."""
    base = np.array(sorted(S), dtype=np.int64)
    return min(tuple(int(x) for x in np.sort(G.conjugar(base, g))) for g in range(G.order))


def p_subgroups_up_to_conjugacy(G: PermGroup, p: int) -> list[Subgroup]:
    """
    Un representante por clase de conjugación de p-subgrupos, del trivial
    a los de Sylow, ordenados por orden.

    Todo p-subgrupo P > 1 tiene un subgrupo normal P0 de índice p, y
    P = ∪ P0·x^k con x ∈ N_G(P0); por eso alcanza con extender un
    representante por clase en cada capa.
    """
    if not isprime(p):
        raise ErrorEntrada(f"p = {p} no es primo.")
    p_elementos = [x for x in range(1, G.order) if _es_potencia_de(G.element_order(x), p)]

    capa = {(0,): frozenset({0})}
    representantes = [(0,)]
    while capa:
        siguiente: dict[tuple[int, ...], frozenset] = {}
        for P in capa.values():
            normalizador = set(_normalizador_indices(G, P))
            for x in p_elementos:
                if x in P or x not in normalizador:
                    continue
                potencia = x
                for _ in range(p - 1):
                    potencia = int(G.tabla[potencia, x])
                if potencia not in P:
                    continue
                Q = set(P)
                coclase = np.array(sorted(P), dtype=np.int64)
                for _ in range(p - 1):
                    coclase = G.tabla[coclase, x]
                    Q.update(int(c) for c in coclase)
                canonica = _forma_canonica(G, frozenset(Q))
                siguiente.setdefault(canonica, frozenset(canonica))
        capa = dict(sorted(siguiente.items()))
        representantes.extend(capa)

    representantes.sort(key=lambda t: (len(t), t))
    logger.debug("%s: %d clases de %d-subgrupos", G.etiqueta, len(representantes), p)
    return [
        subgroup_from_elements(G, rep, nombre="1" if len(rep) == 1 else f"P{len(rep)}")
        for rep in representantes
    ]


def normalizer(G: PermGroup, Q: PermGroup) -> Subgroup:
    """N_G(Q) = {g : Q^g = Q}."""
    S = frozenset(int(i) for i in G.indices_de(Q))
    return subgroup_from_elements(G, _normalizador_indices(G, S), nombre=f"N({Q.nombre or 'Q'})")


def right_transversal(G: PermGroup, Q: PermGroup) -> list[int]:
    """
    Representantes de las coclases Qx, identidad primero, en orden de
    elementos. Retorna índices en G.
    """
    S = G.indices_de(Q)
    cubierto = np.zeros(G.order, dtype=bool)
    representantes = []
    for x in range(G.order):
        if not cubierto[x]:
            representantes.append(x)
            cubierto[G.tabla[S, x]] = True
    return representantes


def descomposicion_coclases(G: PermGroup, Q: PermGroup) -> tuple[list[int], np.ndarray, np.ndarray]:
    """
    Para cada x de G: x = q·t con t en la transversal.
    Retorna (transversal, q_de[x] como índice en G, pos_de[x] como posición en la transversal).
    """
    S = G.indices_de(Q)
    transversal = right_transversal(G, Q)
    q_de = np.empty(G.order, dtype=np.int64)
    pos_de = np.empty(G.order, dtype=np.int64)
    for pos, t in enumerate(transversal):
        coclase = G.tabla[S, t]
        q_de[coclase] = S
        pos_de[coclase] = pos
    return transversal, q_de, pos_de


def are_conjugate(G: PermGroup, A: PermGroup, B: PermGroup) -> Optional[int]:
    """Un g con A^g = B (índice en G), o None si no son conjugados en G."""
    SA = G.indices_de(A)
    objetivo = np.sort(G.indices_de(B))
    if len(SA) != len(objetivo):
        return None
    for g in range(G.order):
        if np.array_equal(np.sort(G.conjugar(SA, g)), objetivo):
            return g
    return None


def conjugate_subgroup(G: PermGroup, Q: PermGroup, g: int) -> Subgroup:
    return subgroup_from_elements(G, G.conjugar(G.indices_de(Q), g), nombre=Q.nombre)
