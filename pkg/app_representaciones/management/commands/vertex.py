"""
Vértice de un módulo indescomponible leído de archivo.

Uso:
    python manage.py vertex modulo.json
"""

from app_representaciones.management.base import ComandoModular
from app_representaciones.services.green import vertex
from app_representaciones.services.serializacion import subgrupo_a_documento


class Command(ComandoModular):
    help = "Calcula el vértice (un p-subgrupo, salvo conjugación) de un módulo indescomponible."
    operacion = "vertex"
    usa_modulo = True

    def calcular(self, config, V, options):
        return {"dim": V.dim, "vertice": subgrupo_a_documento(vertex(V))}

    def tabla(self, documento):
        Q = documento["vertice"]
        ciclos = ", ".join(Q["ciclos"]) or "()"
        return f"vértice: orden {Q['order']}, generado por {ciclos}"
