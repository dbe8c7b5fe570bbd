"""
Descenso de un componente de W ⊗ GF(p^n) a su menor cuerpo de definición.

Uso:
    python manage.py descend -g C7 -p 2 -w 1 -n 6 --componente 0
"""

from app_representaciones.domain.errores import ErrorIndice
from app_representaciones.management.base import ComandoModular
from app_representaciones.services.clasificacion import descend_component
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.meataxe import simple_modules
from app_representaciones.services.serializacion import modulo_a_documento


class Command(ComandoModular):
    help = "Devuelve (K, V) con K mínimo para un componente de W ⊗ GF(p^n), W simple de F_pG."
    operacion = "descend"

    def agregar_argumentos(self, parser):
        parser.add_argument("-w", type=int, required=True, help="Índice de W en la salida de `simples`")
        parser.add_argument("-n", type=int, required=True, help="Grado del cuerpo de la extensión")
        parser.add_argument("--componente", type=int, default=0, help="Índice del componente (default: 0)")

    def partes_extra(self, options):
        return {"w": options["w"], "n": options["n"], "componente": options["componente"]}

    def calcular(self, config, G, options):
        simples = simple_modules(G, make_field(config.p, 1), config.semilla)
        w = options["w"]
        if not 0 <= w < len(simples):
            raise ErrorIndice(f"W = {w} fuera de rango: hay {len(simples)} simples.")
        par = descend_component(simples.modules[w], options["n"], options["componente"], config.semilla)
        return {"par": par.to_dict(), "modulo": modulo_a_documento(par.module)}

    def tabla(self, documento):
        par = documento["par"]
        return "\n".join([
            f"K = GF({par['cuerpo']['p']}^{par['cuerpo']['n']}), dim V = {par['dim']}",
            f"absolutamente simple: {'sí' if par['absolutamente_simple'] else 'no'}",
            f"absolutamente indescomponible: {'sí' if par['absolutamente_indescomponible'] else 'no'}",
        ])
