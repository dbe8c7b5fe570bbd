# app_representaciones/domain/config.py

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from app_representaciones.domain.enums import FormatoSalida
from app_representaciones.domain.errores import ErrorEntrada


@dataclass(frozen=True)
class RunConfig:
    """Configuración de una corrida de la CLI, armada a partir de las banderas."""
    grupo: str                          # nombre del catálogo o ruta a un archivo de grupo
    p: Optional[int] = None
    cota_grado: int = 6
    semilla: int = 0
    cache_dir: Optional[Path] = None
    formato: FormatoSalida = FormatoSalida.TABLA
    max_orden_grupo: Optional[int] = None
    max_tamano_cuerpo: Optional[int] = None

    def __post_init__(self):
        if self.cota_grado < 1:
            raise ErrorEntrada(f"La cota de grado debe ser ≥ 1 (recibido {self.cota_grado}).")
        if self.semilla < 0 or self.semilla >= 2 ** 64:
            raise ErrorEntrada(f"La semilla debe ser un entero de 64 bits sin signo (recibido {self.semilla}).")
        if self.p is not None:
            # import local: sympy es pesado y domain no debería cargarlo al importar
            from sympy import isprime
            if not isprime(self.p):
                raise ErrorEntrada(f"p = {self.p} no es primo.")

    def to_dict(self):
        return {
            "grupo": self.grupo,
            "p": self.p,
            "cota_grado": self.cota_grado,
            "semilla": self.semilla,
            "formato": self.formato.value,
        }
