# app_representaciones/services/algebra_lineal.py
"""
Álgebra lineal densa sobre cuerpos finitos (arreglos de galois).

Todo trabaja con vectores fila: un subespacio es una matriz cuyas filas
forman una base, y una matriz A actúa como v ↦ v·A.
"""

from collections import deque

import numpy as np


def pivotes(R) -> list[int]:
    """Columnas pivote de una matriz en forma escalonada reducida."""
    resultado = []
    for fila in np.asarray(R.view(np.ndarray)):
        distintos = np.flatnonzero(fila)
        if distintos.size:
            resultado.append(int(distintos[0]))
    return resultado


def escalonar(A):
    """Forma escalonada reducida sin filas nulas."""
    GF = type(A)
    filas, columnas = A.shape
    if filas == 0 or columnas == 0:
        return GF.Zeros((0, columnas))
    R = A.row_reduce()
    return R[: len(pivotes(R))]


def rango(A) -> int:
    return escalonar(A).shape[0]


def es_invertible(A) -> bool:
    return A.shape[0] == A.shape[1] and rango(A) == A.shape[0]


def nucleo(A):
    """Base (filas) de {x : A·xᵀ = 0}."""
    GF = type(A)
    filas, columnas = A.shape
    if filas == 0:
        return GF.Identity(columnas)
    if columnas == 0:
        return GF.Zeros((0, 0))
    R = escalonar(A)
    piv = pivotes(R)
    libres = [j for j in range(columnas) if j not in set(piv)]
    N = GF.Zeros((len(libres), columnas))
    for k, j in enumerate(libres):
        N[k, j] = 1
        for i, pj in enumerate(piv):
            N[k, pj] = -R[i, j]
    return N


def nucleo_izquierdo(A):
    """Base (filas) de {v : v·A = 0}."""
    return nucleo(A.T)


def resolver(A, b):
    """
    Una solución x de A·x = b, o None si el sistema es incompatible.
    A es (m × k), b tiene largo m.
    """
    GF = type(A)
    m, k = A.shape
    if k == 0:
        return GF.Zeros(0) if not np.any(b) else None
    aumentada = GF.Zeros((m, k + 1))
    aumentada[:, :k] = A
    aumentada[:, k] = b
    R = escalonar(aumentada)
    piv = pivotes(R)
    if k in piv:
        return None
    x = GF.Zeros(k)
    for i, pj in enumerate(piv):
        x[pj] = R[i, k]
    return x


def diagonal_por_bloques(GF, bloques):
    total = sum(b.shape[0] for b in bloques)
    D = GF.Zeros((total, total))
    inicio = 0
    for b in bloques:
        fin = inicio + b.shape[0]
        D[inicio:fin, inicio:fin] = b
        inicio = fin
    return D


def apilar(GF, matrices, columnas: int):
    """Apila por filas; tolera listas vacías y matrices sin filas."""
    total = sum(M.shape[0] for M in matrices)
    S = GF.Zeros((total, columnas))
    inicio = 0
    for M in matrices:
        S[inicio:inicio + M.shape[0]] = M
        inicio += M.shape[0]
    return S


class BaseEscalonada:
    """Base semi-escalonada que crece vector a vector (spin del MeatAxe)."""

    def __init__(self, GF, dim: int):
        self.GF = GF
        self.dim = dim
        self.filas = []
        self.pivotes = []

    def __len__(self):
        return len(self.filas)

    def reducir(self, v):
        v = v.copy()
        for fila, piv in zip(self.filas, self.pivotes):
            if v[piv] != 0:
                v = v - v[piv] * fila
        return v

    def agregar(self, v) -> bool:
        w = self.reducir(v)
        distintos = np.flatnonzero(np.asarray(w.view(np.ndarray)))
        if not distintos.size:
            return False
        piv = int(distintos[0])
        self.filas.append(w / w[piv])
        self.pivotes.append(piv)
        return True

    def matriz(self):
        if not self.filas:
            return self.GF.Zeros((0, self.dim))
        return apilar(self.GF, [f.reshape(1, self.dim) for f in self.filas], self.dim)


def spin(vectores, generadores, dim: int):
    """
    Menor subespacio que contiene a los vectores y es invariante por
    v ↦ v·g para cada generador. Retorna la BaseEscalonada.
    """
    GF = type(generadores[0]) if generadores else type(vectores[0])
    base = BaseEscalonada(GF, dim)
    pendientes = deque()
    for v in vectores:
        if base.agregar(v):
            pendientes.append(base.filas[-1])
    while pendientes and len(base) < dim:
        v = pendientes.popleft()
        for g in generadores:
            if base.agregar(v @ g):
                pendientes.append(base.filas[-1])
    return base


def completar_base(S):
    """
    C = [S; e_j para las columnas no pivote]. Si S es invariante,
    C·A·C⁻¹ queda triangular inferior por bloques: submódulo arriba a la
    izquierda, cociente abajo a la derecha.
    """
    GF = type(S)
    k, d = S.shape
    R = escalonar(S)
    piv = set(pivotes(R))
    resto = [j for j in range(d) if j not in piv]
    C = GF.Zeros((d, d))
    C[:k] = R
    for i, j in enumerate(resto):
        C[k + i, j] = 1
    return C


def accion_en_subespacio(B, A):
    """
    X con X·B = B·A, para B de filas independientes y B·A ⊆ fila(B).
    """
    if B.shape[0] == 0:
        return type(B).Zeros((0, 0))
    R = escalonar(B)
    columnas = pivotes(R)
    return (B @ A)[:, columnas] @ np.linalg.inv(B[:, columnas])


def conjugar_todas(C, C_inv, muestras):
    """C·M·C⁻¹ para cada M de una pila (N, d, d)."""
    N, d, _ = muestras.shape
    if N == 0 or d == 0:
        return muestras.copy()
    derecha = (muestras.reshape(N * d, d) @ C_inv).reshape(N, d, d)
    # C·X = (Xᵀ·Cᵀ)ᵀ, apilado por bloques
    traspuestas = derecha.transpose(0, 2, 1).reshape(N * d, d)
    return (traspuestas @ C.T).reshape(N, d, d).transpose(0, 2, 1).copy()


def combinacion(coeficientes, muestras):
    """Σ c_i M_i para una pila (N, d, d)."""
    N, d, _ = muestras.shape
    return (coeficientes.reshape(1, N) @ muestras.reshape(N, d * d)).reshape(d, d)
