"""
Extensión de escalares de un módulo leído de archivo: V ⊗_K GF(p^n).

Uso:
    python manage.py extend modulo.json -n 2 --format structured --salida extendido.json
"""

from app_representaciones.management.base import ComandoModular
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.modulos import extend_scalars
from app_representaciones.services.serializacion import modulo_a_documento


class Command(ComandoModular):
    help = "Extiende los escalares de un módulo a GF(p^n) (deg K debe dividir a n)."
    operacion = "extend"
    usa_modulo = True

    def agregar_argumentos(self, parser):
        parser.add_argument("-n", type=int, required=True, help="Grado del cuerpo destino sobre GF(p)")

    def partes_extra(self, options):
        return {"n": options["n"]}

    def calcular(self, config, V, options):
        L = make_field(V.field.p, options["n"])
        extendido = extend_scalars(V, L)
        return {"dim": extendido.dim, "cuerpo": L.to_dict(), "modulo": modulo_a_documento(extendido)}

    def tabla(self, documento):
        cuerpo = documento["cuerpo"]
        return f"V ⊗ GF({cuerpo['p']}^{cuerpo['n']}): dim {documento['dim']}"
