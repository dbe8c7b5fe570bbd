# app_representaciones/cli.py
"""
Punto de entrada programático de la CLI: run(argv) → código de salida.

Equivale a `python manage.py <subcomando> ...` pero devuelve el código en
lugar de terminar el proceso, para scripts de batería y tests.
"""

import os
import sys
from typing import Optional, Sequence

from app_representaciones.management.base import ERROR_USO, EXITO


def run(argv: Optional[Sequence[str]] = None) -> int:
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "laboratorio.settings")
    from django.core.management import execute_from_command_line

    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        execute_from_command_line(["representaciones", *argv])
    except SystemExit as e:
        if e.code is None:
            return EXITO
        return e.code if isinstance(e.code, int) else ERROR_USO
    return EXITO


if __name__ == "__main__":
    sys.exit(run())
