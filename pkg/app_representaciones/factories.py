#app_representaciones/factories.py

from sympy.combinatorics import Permutation

from app_representaciones.domain.errores import ErrorEntrada
from app_representaciones.services.cuerpos import FiniteField
from app_representaciones.services.grupos import PermGroup
from app_representaciones.services.modulos import Rep, rep_from_matrices


class ModuloFactory:
    """Módulos de escritorio que no salen del troceo del regular."""

    @staticmethod
    def companera(G: PermGroup, K: FiniteField, coeficientes) -> Rep:
        """
        Grupo cíclico: el generador actúa por la matriz compañera del polinomio
        mónico de coeficientes dados (constante primero, sin el término líder).
        """
        if len(G.generators) != 1:
            raise ErrorEntrada("La matriz compañera se define para grupos con un generador.")
        n = len(coeficientes)
        C = K.gf.Zeros((n, n))
        for i in range(n - 1):
            C[i, i + 1] = 1
        C[n - 1] = -K.gf(list(coeficientes))
        return rep_from_matrices(G, K, [C])

    @staticmethod
    def signo(G: PermGroup, K: FiniteField) -> Rep:
        matrices = [K.gf([[Permutation(list(g)).signature() % K.p]]) for g in G.generators]
        return rep_from_matrices(G, K, matrices)

    @staticmethod
    def escalar(G: PermGroup, K: FiniteField, escalares) -> Rep:
        """Módulo de dim 1 con el escalar dado (codificación entera) por generador."""
        return rep_from_matrices(G, K, [K.gf([[int(e)]]) for e in escalares])

    @staticmethod
    def permutacion(G: PermGroup, K: FiniteField) -> Rep:
        """e_i·g = e_{g(i)} sobre los puntos movidos."""
        matrices = []
        for g in G.generators:
            P = K.gf.Zeros((G.degree, G.degree))
            for i, imagen in enumerate(g):
                P[i, imagen] = 1
            matrices.append(P)
        return rep_from_matrices(G, K, matrices)
