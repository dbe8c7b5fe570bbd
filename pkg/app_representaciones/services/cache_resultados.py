# app_representaciones/services/cache_resultados.py
"""
Caché de resultados direccionada por contenido, sobre el FileBasedCache de Django.

La clave es el sha256 de un JSON canónico con la operación y sus entradas
(grupo, p, n o cota, semilla). El valor es un sobre {digest, documento}.
Los resultados son deterministas, así que una entrada que no coincide con
su digest se considera corrupta: se desaloja, se avisa y se recalcula.
"""

import hashlib
import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Callable, Optional

from django.core.cache.backends.filebased import FileBasedCache
from django.core.files import locks

from app_representaciones.services.serializacion import digest

logger = logging.getLogger(__name__)


class CacheResultados:

    def __init__(self, directorio: Optional[Path], verificar: bool = False):
        self.directorio = Path(directorio) if directorio else None
        self.verificar = verificar
        self._cache = None
        if self.directorio is not None:
            self.directorio.mkdir(parents=True, exist_ok=True)
            self._cache = FileBasedCache(str(self.directorio), {"TIMEOUT": None})

    @property
    def activa(self) -> bool:
        return self._cache is not None

    @staticmethod
    def clave(operacion: str, partes: dict) -> str:
        canonico = json.dumps({"op": operacion, **partes}, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonico.encode()).hexdigest()

    @contextmanager
    def _bloqueo(self, clave: str):
        # advisory, por entrada
        with open(self.directorio / f"{clave}.lock", "wb") as archivo:
            locks.lock(archivo, locks.LOCK_EX)
            try:
                yield
            finally:
                locks.unlock(archivo)

    def _leer(self, clave: str) -> Optional[dict]:
        try:
            sobre = self._cache.get(clave)
        except Exception as e:
            logger.warning("Entrada de caché ilegible %s (%s); se desaloja", clave[:12], e)
            self._cache.delete(clave)
            return None
        if sobre is None:
            return None
        if not isinstance(sobre, dict) or sobre.get("digest") != digest(sobre.get("documento")):
            logger.warning("Entrada de caché corrupta %s; se desaloja y se recalcula", clave[:12])
            self._cache.delete(clave)
            return None
        return sobre

    def obtener_o_calcular(self, operacion: str, partes: dict, calcular: Callable[[], dict]) -> dict:
        if not self.activa:
            return calcular()

        clave = self.clave(operacion, partes)
        with self._bloqueo(clave):
            sobre = self._leer(clave)
            if sobre is not None and not self.verificar:
                logger.info("Resultado de %s servido desde la caché (%s)", operacion, clave[:12])
                return sobre["documento"]

            documento = calcular()
            if sobre is not None and sobre["digest"] != digest(documento):
                logger.warning("El valor en caché de %s no coincide con el recalculado; se reescribe", operacion)
                self._cache.delete(clave)
            self._cache.set(clave, {"digest": digest(documento), "documento": documento})
            return documento
