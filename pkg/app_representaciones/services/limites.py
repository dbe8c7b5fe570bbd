# app_representaciones/services/limites.py
"""
Topes de escritorio vigentes durante una corrida.

Por defecto salen de settings; la CLI los pisa con aplicar_limites(...).
Se guardan en un ContextVar para que cada corrida (y cada hilo del
verificador, vía services/paralelo.py) vea los suyos.
"""

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace
from typing import Optional

from django.conf import settings


@dataclass(frozen=True)
class Limites:
    max_orden_grupo: int
    max_tamano_cuerpo: int
    max_intentos: int
    tope_barrido: int


_limites_activos: ContextVar[Optional[Limites]] = ContextVar("limites_activos", default=None)


def limites_por_defecto() -> Limites:
    return Limites(
        max_orden_grupo=settings.MAX_ORDEN_GRUPO,
        max_tamano_cuerpo=settings.MAX_TAMANO_CUERPO,
        max_intentos=settings.MAX_INTENTOS_MEATAXE,
        tope_barrido=settings.TOPE_BARRIDO,
    )


def limites_vigentes() -> Limites:
    return _limites_activos.get() or limites_por_defecto()


@contextmanager
def aplicar_limites(**cambios):
    """
    Activa topes distintos de los de settings dentro del bloque.
    Los valores None se ignoran (dejan el valor vigente).
    """
    nuevos = replace(limites_vigentes(), **{k: v for k, v in cambios.items() if v is not None})
    token = _limites_activos.set(nuevos)
    try:
        yield nuevos
    finally:
        _limites_activos.reset(token)
