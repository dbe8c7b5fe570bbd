"""
Restricción de escalares de un módulo leído de archivo a GF(p^n) ⊆ K.

Uso:
    python manage.py restrict modulo.json -n 1 --format structured
"""

from app_representaciones.management.base import ComandoModular
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.modulos import restrict_scalars
from app_representaciones.services.serializacion import modulo_a_documento


class Command(ComandoModular):
    help = "Restringe los escalares de un módulo al subcuerpo GF(p^n) (n debe dividir a deg K)."
    operacion = "restrict"
    usa_modulo = True

    def agregar_argumentos(self, parser):
        parser.add_argument("-n", type=int, required=True, help="Grado del subcuerpo destino sobre GF(p)")

    def partes_extra(self, options):
        return {"n": options["n"]}

    def calcular(self, config, V, options):
        K = make_field(V.field.p, options["n"])
        restringido = restrict_scalars(V, K)
        return {"dim": restringido.dim, "cuerpo": K.to_dict(), "modulo": modulo_a_documento(restringido)}

    def tabla(self, documento):
        cuerpo = documento["cuerpo"]
        return f"Res a GF({cuerpo['p']}^{cuerpo['n']}): dim {documento['dim']}"
