# app_representaciones/services/catalogo.py
"""
Catálogo chico de grupos por nombre, para la CLI y los tests.

Son solo atajos de entrada: ningún cálculo distingue un grupo del catálogo
de uno leído de archivo.
"""

from functools import lru_cache
from pathlib import Path
from typing import Union

from app_representaciones.domain.errores import ErrorCapacidad
from app_representaciones.services.grupos import PermGroup, group_from_generators
from app_representaciones.services.limites import limites_vigentes

# nombre → (grado, generadores como imágenes 1-based)
CATALOGO = {
    "C2": (2, [[2, 1]]),
    "C3": (3, [[2, 3, 1]]),
    "S3": (3, [[2, 1, 3], [2, 3, 1]]),                         # (1 2), (1 2 3)
    "C7": (7, [[2, 3, 4, 5, 6, 7, 1]]),
    "A4": (4, [[2, 3, 1, 4], [1, 3, 4, 2]]),                   # (1 2 3), (2 3 4)
    "D8": (4, [[2, 3, 4, 1], [3, 2, 1, 4]]),                   # (1 2 3 4), (1 3)
    "Q8": (8, [[3, 4, 2, 1, 8, 7, 5, 6], [5, 6, 7, 8, 2, 1, 4, 3]]),   # regular: i, j
    "S4": (4, [[2, 1, 3, 4], [2, 3, 4, 1]]),                   # (1 2), (1 2 3 4)
}


@lru_cache(maxsize=None)
def grupo_por_nombre(nombre: str) -> PermGroup:
    grado, generadores = CATALOGO[nombre.upper()]
    return group_from_generators(grado, generadores, nombre=nombre.upper())


def es_del_catalogo(nombre: str) -> bool:
    return nombre.upper() in CATALOGO


def cargar_grupo(fuente: Union[str, Path]) -> PermGroup:
    """Un nombre del catálogo o la ruta a un archivo de grupo."""
    if isinstance(fuente, str) and es_del_catalogo(fuente):
        G = grupo_por_nombre(fuente)
        # el grupo queda memorizado: el tope vigente se vuelve a mirar en cada carga
        tope = limites_vigentes().max_orden_grupo
        if G.order > tope:
            raise ErrorCapacidad(f"El grupo {G.nombre} tiene orden {G.order}, mayor al tope ({tope}).")
        return G
    # import local: serializacion depende de este módulo
    from app_representaciones.services.serializacion import grupo_desde_documento, leer_documento

    return grupo_desde_documento(leer_documento(fuente))
