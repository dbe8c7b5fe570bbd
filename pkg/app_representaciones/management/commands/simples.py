"""
Lista ITS(F_pG): los FG-módulos simples en orden canónico.

Uso:
    python manage.py simples -g C7 -p 2
    python manage.py simples -g S3 -p 2 --format structured
"""

from app_representaciones.management.base import ComandoModular, renderizar_tabla
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.meataxe import simple_modules


class Command(ComandoModular):
    help = "Lista los módulos simples de F_pG (ITS) con la dimensión de su End."
    operacion = "simples"

    def calcular(self, config, G, options):
        simples = simple_modules(G, make_field(config.p, 1), config.semilla)
        return {"group": G.etiqueta, "p": config.p, **simples.to_dict()}

    def tabla(self, documento):
        encabezado = f"ITS({documento['group']}) sobre GF({documento['p']})"
        return "\n".join([
            encabezado,
            renderizar_tabla(documento["simples"], ["indice", "dim", "grado_end"]),
            f"total: {len(documento['simples'])}",
        ])
