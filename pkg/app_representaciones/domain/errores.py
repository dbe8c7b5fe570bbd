# app_representaciones/domain/errores.py
"""
Errores controlados del dominio.

Los comandos los traducen a códigos de salida:
- ErrorConsistencia → 2 (un enunciado de la clasificación falló a escala de escritorio)
- cualquier otro ErrorModular → 1 (uso, entrada o topes)
"""


class ErrorModular(Exception):
    """Base de todos los errores controlados de la app."""
    pass


class ErrorEntrada(ErrorModular, ValueError):
    """Entrada mal formada: primo inválido, permutación no biyectiva, documento roto."""
    pass


class ErrorCapacidad(ErrorModular):
    """Se excedió un tope configurado (orden de grupo, tamaño de cuerpo)."""
    pass


class ErrorSubcuerpo(ErrorEntrada):
    """Consulta de inclusión entre cuerpos que no son subcuerpo uno del otro."""
    pass


class ErrorSubgrupo(ErrorEntrada):
    """El conjunto dado no es subgrupo del grupo del módulo."""
    pass


class ErrorDivisionPorCero(ErrorModular, ZeroDivisionError):
    pass


class ErrorModuloDescomponible(ErrorEntrada):
    """La operación exige un módulo indescomponible: descomponer primero."""
    pass


class ErrorModuloNoSimple(ErrorEntrada):
    pass


class ErrorIndice(ErrorEntrada, IndexError):
    pass


class ErrorNoConcluyente(ErrorModular):
    """El MeatAxe agotó los reintentos sin decidir."""
    pass


class ErrorConsistencia(ErrorModular):
    """Falla interna de consistencia: señala un bug o un enunciado falsado."""
    pass


class ErrorGradoDescomposicion(ErrorConsistencia):
    """El grado de descomposición excede la cota configurada."""
    pass
