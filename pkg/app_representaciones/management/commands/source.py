"""
Par vértice-fuente de un módulo indescomponible leído de archivo.

Uso:
    python manage.py source modulo.json --format structured --salida fuente.json
"""

from app_representaciones.management.base import ComandoModular
from app_representaciones.services.green import vertex_source
from app_representaciones.services.serializacion import modulo_a_documento, subgrupo_a_documento


class Command(ComandoModular):
    help = "Calcula vértice y fuente de un módulo indescomponible."
    operacion = "source"
    usa_modulo = True

    def calcular(self, config, V, options):
        par = vertex_source(V)
        return {
            "dim": V.dim,
            "vertice": subgrupo_a_documento(par.vertex),
            "fuente": {"dim": par.source.dim},
            "modulo": modulo_a_documento(par.source),
        }

    def tabla(self, documento):
        Q = documento["vertice"]
        return "\n".join([
            f"vértice: orden {Q['order']}, generado por {', '.join(Q['ciclos']) or '()'}",
            f"fuente: dim {documento['fuente']['dim']}",
        ])
