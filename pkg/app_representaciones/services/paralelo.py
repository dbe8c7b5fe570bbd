# app_representaciones/services/paralelo.py
"""
Reparto de tareas independientes del verificador en hilos.

Cada tarea corre en una copia del contexto actual, así ve los mismos
límites (services/limites.py) que la corrida que la lanzó. El resultado
conserva el orden de las tareas.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from contextvars import copy_context
from typing import Callable, Iterable, Optional, TypeVar

from django.conf import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def mapear(funcion: Callable[[T], R], tareas: Iterable[T], max_trabajadores: Optional[int] = None) -> list[R]:
    tareas = list(tareas)
    trabajadores = max_trabajadores or settings.MAX_TRABAJADORES
    if trabajadores <= 1 or len(tareas) <= 1:
        return [funcion(t) for t in tareas]

    logger.debug("Repartiendo %d tareas en %d hilos", len(tareas), trabajadores)
    with ThreadPoolExecutor(max_workers=trabajadores) as pool:
        futuros = [pool.submit(copy_context().run, funcion, t) for t in tareas]
        return [f.result() for f in futuros]
