# app_representaciones/services/modulos.py
"""
KG-módulos como representaciones matriciales y los funtores entre ellos.

Responsabilidades:
- Rep: una matriz invertible por generador del grupo (módulos a derecha, vectores fila)
- Extensión y restricción de escalares, twist de Frobenius
- Restricción e inducción a lo largo de subgrupos, conjugación de módulos
- Sumas directas y espacios Hom

Convención: v ↦ v·ρ(g) y ρ(gh) = ρ(g)ρ(h). Un morfismo V → U es una matriz
M de dim V × dim U con ρ_V(g)·M = M·ρ_U(g).
"""

import hashlib
import logging
from dataclasses import dataclass
from functools import cached_property

import galois
import numpy as np

from app_representaciones.domain.errores import ErrorEntrada, ErrorSubgrupo
from app_representaciones.services import algebra_lineal as al
from app_representaciones.services.cuerpos import (
    FieldAutomorphism,
    FiniteField,
    embed,
)
from app_representaciones.services.grupos import (
    PermGroup,
    conjugate_subgroup,
    descomposicion_coclases,
    right_transversal,
)

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────────────────────────
# Tipos
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True, eq=False)
class Rep:
    group: PermGroup
    field: FiniteField
    dim: int
    matrices: tuple[galois.FieldArray, ...]

    @cached_property
    def GF(self):
        return self.field.gf

    @cached_property
    def identidad(self):
        return self.GF.Identity(self.dim)

    @cached_property
    def imagenes(self) -> galois.FieldArray:
        """ρ(g) para cada elemento, en el orden de group.elements: forma (N, d, d)."""
        imagenes = self.GF.Zeros((self.group.order, self.dim, self.dim))
        imagenes[0] = self.identidad
        for elemento, padre, pos in self.group.arbol_palabras:
            imagenes[elemento] = imagenes[padre] @ self.matrices[pos]
        return imagenes

    def element_image(self, g: int):
        """ρ(g) para el elemento de índice g en group.elements."""
        return self.imagenes[g]

    @cached_property
    def huella(self) -> str:
        """Digest del contenido; clave de memos entre instancias iguales."""
        h = hashlib.sha256()
        h.update(repr((self.field.p, self.field.n, self.dim, self.group.generators)).encode())
        for M in self.matrices:
            h.update(self.field.enteros(M).tobytes())
        return h.hexdigest()

    def validate(self):
        """
        Verifica ρ(x)·ρ(s) = ρ(x·s) para todo elemento x y generador s, y que
        cada generador sea invertible.

        Lanza:
            ErrorEntrada si alguna relación falla.
        """
        for pos, (s, M) in enumerate(zip(self.group.indices_generadores, self.matrices)):
            if not al.es_invertible(M):
                raise ErrorEntrada(f"La matriz del generador {pos + 1} no es invertible.")
            for x in range(self.group.order):
                if not np.array_equal(self.imagenes[x] @ M, self.imagenes[self.group.tabla[x, s]]):
                    raise ErrorEntrada(
                        f"Las matrices no respetan las relaciones del grupo (generador {pos + 1})."
                    )
        return self

    def __repr__(self):
        return f"Rep(dim={self.dim}, cuerpo={self.field}, grupo={self.group.etiqueta})"


@dataclass(frozen=True)
class HomSpace:
    source: Rep
    target: Rep
    basis: tuple[galois.FieldArray, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combinar(self, coeficientes):
        M = self.source.GF.Zeros((self.source.dim, self.target.dim))
        for c, B in zip(coeficientes, self.basis):
            M = M + c * B
        return M


# ─────────────────────────────────────────────────────────────────────────────
# Construcción
# ─────────────────────────────────────────────────────────────────────────────

def rep_from_matrices(G: PermGroup, K: FiniteField, matrices, dim=None, validar: bool = True) -> Rep:
    matrices = tuple(K.gf(M) for M in matrices)
    if len(matrices) != len(G.generators):
        raise ErrorEntrada(
            f"Se esperaban {len(G.generators)} matrices (una por generador) y llegaron {len(matrices)}."
        )
    if dim is None:
        dim = matrices[0].shape[0] if matrices else 0
    for M in matrices:
        if M.ndim != 2 or M.shape != (dim, dim):
            raise ErrorEntrada(f"Todas las matrices deben ser {dim}×{dim}.")
    rep = Rep(G, K, dim, matrices)
    return rep.validate() if validar else rep


def trivial_module(G: PermGroup, K: FiniteField) -> Rep:
    return Rep(G, K, 1, tuple(K.gf.Ones((1, 1)) for _ in G.generators))


def zero_module(G: PermGroup, K: FiniteField) -> Rep:
    return Rep(G, K, 0, tuple(K.gf.Zeros((0, 0)) for _ in G.generators))


def regular_module(G: PermGroup, K: FiniteField) -> Rep:
    """e_x·g = e_{xg} sobre la lista de elementos."""
    filas = np.arange(G.order)
    matrices = []
    for s in G.indices_generadores:
        P = K.gf.Zeros((G.order, G.order))
        P[filas, G.tabla[:, s]] = 1
        matrices.append(P)
    return Rep(G, K, G.order, tuple(matrices))


def direct_sum(V: Rep, U: Rep) -> Rep:
    exigir_mismo_contexto(V, U)
    return Rep(
        V.group,
        V.field,
        V.dim + U.dim,
        tuple(al.diagonal_por_bloques(V.GF, [A, B]) for A, B in zip(V.matrices, U.matrices)),
    )


def submodulo(V: Rep, base) -> Rep:
    """Acción de V sobre el subespacio invariante de filas base."""
    return Rep(
        V.group,
        V.field,
        base.shape[0],
        tuple(al.accion_en_subespacio(base, M) for M in V.matrices),
    )


def exigir_mismo_contexto(V: Rep, U: Rep):
    if V.field != U.field:
        raise ErrorEntrada(f"Los módulos viven sobre cuerpos distintos ({V.field} y {U.field}).")
    if V.group is not U.group and (
        V.group.generators != U.group.generators or V.group.clave != U.group.clave
    ):
        raise ErrorEntrada("Los módulos son de grupos distintos.")


# ─────────────────────────────────────────────────────────────────────────────
# Cambio de escalares
# ─────────────────────────────────────────────────────────────────────────────

def extend_scalars(V: Rep, L: FiniteField) -> Rep:
    """V ⊗_K L: cada entrada pasa por la inclusión canónica K ↪ L."""
    inclusion = embed(V.field, L)
    return Rep(V.group, L, V.dim, tuple(inclusion(M) for M in V.matrices))


def restrict_scalars(V: Rep, K: FiniteField) -> Rep:
    """
    Res_K^L(V): cada entrada a se reemplaza por la matriz r×r de v ↦ v·a en la
    base 1, γ, ..., γ^(r-1) de L sobre K (γ el generador de L).
    """
    L = V.field
    inclusion = embed(K, L)
    r = inclusion.grado
    if r == 1:
        return Rep(V.group, K, V.dim, tuple(K.gf(L.enteros(M)) for M in V.matrices))

    potencias_gamma = L.gf.Zeros(r)
    potencias_gamma[0] = 1
    for j in range(1, r):
        potencias_gamma[j] = potencias_gamma[j - 1] * L.generador()

    d = V.dim
    matrices = []
    for M in V.matrices:
        productos = M[:, :, None] * potencias_gamma[None, None, :]   # (d, d, r)
        coordenadas = inclusion.coordenadas(productos)                 # (d, d, r, r)
        matrices.append(coordenadas.transpose(0, 2, 1, 3).reshape(d * r, d * r))
    return Rep(V.group, K, d * r, tuple(matrices))


def frobenius_twist(V: Rep, sigma: FieldAutomorphism) -> Rep:
    if sigma.field != V.field:
        raise ErrorEntrada(f"El automorfismo es de {sigma.field} y el módulo vive sobre {V.field}.")
    if sigma.es_identidad():
        return V
    return Rep(V.group, V.field, V.dim, tuple(sigma(M) for M in V.matrices))


# ─────────────────────────────────────────────────────────────────────────────
# Subgrupos
# ─────────────────────────────────────────────────────────────────────────────

def restrict_subgroup(V: Rep, H: PermGroup) -> Rep:
    """Res_H^G(V) sobre los generadores deterministas de H."""
    G = V.group
    if not G.contiene(H):
        raise ErrorSubgrupo(f"{H.etiqueta} no es subgrupo de {G.etiqueta}.")
    return Rep(H, V.field, V.dim, tuple(V.imagenes[G.indice[h]] for h in H.generators))


def induce(V: Rep, G: PermGroup) -> Rep:
    """
    Ind_H^G(V) con base v ⊗ t_i sobre la transversal derecha: si t_i·g = h·t_j,
    el bloque (i, j) de g es ρ(h).
    """
    H = V.group
    if not G.contiene(H):
        raise ErrorSubgrupo(f"{H.etiqueta} no es subgrupo de {G.etiqueta}.")
    transversal, h_de, pos_de = descomposicion_coclases(G, H)
    indice = len(transversal)
    d = V.dim
    matrices = []
    for s in G.indices_generadores:
        M = V.GF.Zeros((indice * d, indice * d))
        for i, t in enumerate(transversal):
            x = int(G.tabla[t, s])
            j = int(pos_de[x])
            h = H.indice[G.elements[h_de[x]]]
            M[i * d:(i + 1) * d, j * d:(j + 1) * d] = V.imagenes[h]
        matrices.append(M)
    return Rep(G, V.field, indice * d, tuple(matrices))


def conjugate_module(U: Rep, g: int) -> Rep:
    """
    U^g: módulo de Q^g = g⁻¹Qg con x ↦ ρ_U(g·x·g⁻¹). g es índice en el padre de Q.
    """
    Q = U.group
    G = getattr(Q, "parent", None)
    if G is None:
        raise ErrorSubgrupo("Conjugar exige un módulo de un subgrupo con grupo padre.")
    conjugado = conjugate_subgroup(G, Q, g)
    g_inv = int(G.inversos[g])
    matrices = []
    for y in conjugado.generators:
        x = int(G.conjugar([G.indice[y]], g_inv)[0])   # g·y·g⁻¹
        matrices.append(U.imagenes[Q.indice[G.elements[x]]])
    return Rep(conjugado, U.field, U.dim, tuple(matrices))


def relative_trace(V: Rep, Q: PermGroup, phi):
    """Tr_Q^G(φ) = Σ_t ρ(t)⁻¹·φ·ρ(t) sobre la transversal derecha de Q."""
    G = V.group
    total = V.GF.Zeros((V.dim, V.dim))
    for t in right_transversal(G, Q):
        total = total + V.imagenes[G.inversos[t]] @ phi @ V.imagenes[t]
    return total


# ─────────────────────────────────────────────────────────────────────────────
# Hom
# ─────────────────────────────────────────────────────────────────────────────

def hom_space(V: Rep, U: Rep) -> HomSpace:
    """
    Base de {M : ρ_V(g)·M = M·ρ_U(g) para todo generador g}.
    Vectorizando por filas: (A ⊗ I_b − I_a ⊗ Bᵀ)·vec(M) = 0.
    """
    exigir_mismo_contexto(V, U)
    a, b = V.dim, U.dim
    GF = V.GF
    if a == 0 or b == 0:
        return HomSpace(V, U, ())

    n = a * b
    sistema = GF.Zeros((len(V.matrices) * n, n))
    for k, (A, B) in enumerate(zip(V.matrices, U.matrices)):
        bloque = GF.Zeros((n, n))
        for j in range(b):
            bloque[j::b, j::b] = A
        for i in range(a):
            diagonal = bloque[i * b:(i + 1) * b, i * b:(i + 1) * b]
            bloque[i * b:(i + 1) * b, i * b:(i + 1) * b] = diagonal - B.T
        sistema[k * n:(k + 1) * n] = bloque

    base = al.nucleo(sistema)
    return HomSpace(V, U, tuple(fila.reshape(a, b) for fila in base))


def end_space(V: Rep) -> HomSpace:
    return hom_space(V, V)
