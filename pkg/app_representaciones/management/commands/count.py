"""
Cuenta los F̄G-módulos simples vía Σ⁻¹ y lo contrasta con las clases p-regulares.

Uso:
    python manage.py count -g C7 -p 2
    python manage.py count -g A4 -p 2 --format structured

Sale con 2 si el total no coincide con el oráculo.
"""

from app_representaciones.management.base import ComandoModular, renderizar_tabla
from app_representaciones.use_cases import contar_absolutamente_simples


class Command(ComandoModular):
    help = "Cuenta los simples absolutos de G en característica p y los compara con las clases p-regulares."
    operacion = "count"

    def calcular(self, config, G, options):
        return contar_absolutamente_simples.ejecutar(G, config.p, config.semilla).to_dict()

    def tabla(self, documento):
        return "\n".join([
            f"{documento['group']}, p = {documento['p']}",
            renderizar_tabla(documento["rows"], ["dim", "end_degree", "fiber_size", "splitting_degree"]),
            f"total: {documento['total']}",
            f"oraculo: {documento['oracle']}",
            f"coinciden: {'sí' if documento['agree'] else 'no'}",
        ])

    def exito(self, documento):
        return documento["agree"]
